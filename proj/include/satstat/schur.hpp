// SPDX-License-Identifier: Apache-2.0
//
// Schur polynomials in n variables: evaluation, exact dimensions, and
// Littlewood-Richardson products with reduction modulo the unit-determinant
// relation (a full height-n column of a shape is the constant 1 on the
// constrained torus).

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "satstat/partition.hpp"

namespace satstat {

using cplx = std::complex<double>;

// Raised by the determinant-ratio evaluator at (nearly) coincident points,
// where the defining 0/0 expression cannot be evaluated.
class DegeneratePointError : public std::runtime_error {
public:
    explicit DegeneratePointError(const std::string& what) : std::runtime_error(what) {}
};

// Monomial form of s_lambda(x_1..x_n): distinct exponent vectors with their
// tableau multiplicities. Built once per (shape, n) and cached; evaluation at
// a point is a table scan against per-variable power tables.
struct MonomialTable {
    int n = 0;
    Partition shape;
    std::uint32_t max_exponent = 0;
    std::vector<std::uint8_t> exponents;  // entry_count x n, flattened
    std::vector<double> coeffs;
    std::vector<BigInt> exact_coeffs;

    std::size_t entry_count() const { return coeffs.size(); }
};

const MonomialTable& monomial_table(const Partition& shape, int n);

// Sum over semistandard tableaux; total on all of C^n.
cplx schur_eval_tableaux(const Partition& shape, std::span<const cplx> xs);
cplx schur_eval_tableaux(const KappaIndex& kappa, std::span<const cplx> xs);

// Ratio of alternants det(x_j^{lambda_i+n-i}) / det(x_j^{n-i}). Throws
// DegeneratePointError when min_{i<j} |x_i - x_j| < separation_threshold.
cplx schur_eval_determinant(const Partition& shape, std::span<const cplx> xs,
                            double separation_threshold = 1e-6);

// Number of semistandard tableaux of the shape with entries <= n, exactly.
BigInt schur_dimension(const Partition& shape, int n);
BigInt schur_dimension(const KappaIndex& kappa);

// Littlewood-Richardson expansion of s_lambda * s_mu restricted to shapes
// with at most n parts; no column reduction.
SchurExpansion lr_expand(const Partition& lambda, const Partition& mu, int n);

// Strips height-n columns (s_nu -> s_{nu - (nu_n^n)}) and drops shapes with
// more than n parts. Output shapes have at most n-1 parts.
SchurExpansion reduce_mod_determinant(const SchurExpansion& e, int n);
Partition reduce_mod_determinant(const Partition& shape, int n);

// lr_expand followed by eager column reduction.
SchurExpansion schur_multiply(const Partition& lambda, const Partition& mu, int n);

// Independent product oracle: expands both factors into explicit monomial
// lists, multiplies them, and re-expresses the result in the Schur basis by
// iterated leading-term subtraction. Same output contract as lr_expand.
// Throws std::invalid_argument when weight(lambda)+weight(mu) exceeds the
// guard.
SchurExpansion lr_bruteforce_oracle(const Partition& lambda, const Partition& mu, int n,
                                    std::uint64_t max_combined_weight = 12);

}  // namespace satstat
