// SPDX-License-Identifier: Apache-2.0
//
// Structure constants of products of Schur polynomials on the constrained
// torus: S_kappa * S_kappa' = sum_xi d^xi S_xi with xi again a kappa tuple.
// The constant term d^0 is 1 exactly when kappa' is the dual of kappa.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "satstat/partition.hpp"
#include "satstat/satake.hpp"
#include "satstat/schur.hpp"

namespace satstat {

// Memoized; the returned reference stays valid for the process lifetime.
// Throws std::invalid_argument on rank mismatch.
const SchurExpansion& hecke_product_expansion(const KappaIndex& kappa, const KappaIndex& kappa2);

// Expansion entries in kappa coordinates, ordered by weighted norm descending
// then entries descending (the constant term, if present, comes last).
std::vector<std::pair<KappaIndex, BigInt>> expansion_kappa_terms(const SchurExpansion& e);

// CSV dump: header "xi,coefficient", xi as a dash-separated tuple.
std::string expansion_to_csv(const SchurExpansion& e);

// |S_kappa(x)^2 - sum_xi d^xi S_xi(x)| at one point.
double hecke_square_identity_residual(const KappaIndex& kappa, const SatakePoint& point);

struct BoundednessScan {
    double min_abs = 0.0;
    double max_abs = 0.0;
    double dim_bound = 0.0;  // tableau count of the shape = triangle-inequality bound
    std::uint64_t samples = 0;
    bool within_bound = false;
};

// Scans |S_kappa| over Sato-Tate draws; the modulus never exceeds the
// dimension bound at unit-modulus points.
BoundednessScan boundedness_scan(const KappaIndex& kappa, std::uint64_t samples,
                                 std::uint64_t seed);

}  // namespace satstat
