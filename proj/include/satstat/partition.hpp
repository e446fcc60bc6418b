// SPDX-License-Identifier: Apache-2.0
//
// Integer partitions, Fourier-coefficient indices ("kappa tuples") for rank-n
// Satake data, and expansions of products of Schur polynomials into the Schur
// basis. A kappa tuple (k_1,...,k_{n-1}) corresponds to the partition
// lambda_i = sum_{l <= n-i} k_l; stripping full height-n columns inverts the
// map on the unit-determinant torus.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "satstat/bigint.hpp"

namespace satstat {

class Partition {
public:
    Partition() = default;

    // Validates weak decrease, canonicalizes away trailing zeros.
    explicit Partition(std::vector<std::uint32_t> parts);
    Partition(std::initializer_list<std::uint32_t> parts)
        : Partition(std::vector<std::uint32_t>(parts)) {}

    std::size_t rows() const { return parts_.size(); }
    std::uint32_t part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    const std::vector<std::uint32_t>& parts() const { return parts_; }
    std::uint64_t weight() const;
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition& rhs) const { return parts_ == rhs.parts_; }
    bool operator!=(const Partition& rhs) const { return parts_ != rhs.parts_; }
    bool operator<(const Partition& rhs) const { return parts_ < rhs.parts_; }

    std::string to_string() const;  // "(3,2)"; "()" for the empty partition

private:
    std::vector<std::uint32_t> parts_;
};

class KappaIndex {
public:
    // rank n >= 2, tuple of length n-1
    KappaIndex(int n, std::vector<std::uint32_t> kappa);

    int rank() const { return n_; }
    const std::vector<std::uint32_t>& entries() const { return kappa_; }
    std::uint32_t entry(std::size_t j) const { return kappa_[j]; }

    // ||kappa|| = sum_j (n-j) kappa_j  (1-indexed j)
    std::uint64_t weighted_norm() const;
    // |kappa| = sum_j kappa_j
    std::uint64_t degree() const;

    KappaIndex dual() const;  // reversed tuple, an involution
    bool is_palindromic() const;
    bool is_zero() const;
    KappaIndex scaled(std::uint32_t e) const;  // componentwise e*kappa

    bool operator==(const KappaIndex& rhs) const { return n_ == rhs.n_ && kappa_ == rhs.kappa_; }
    bool operator!=(const KappaIndex& rhs) const { return !(*this == rhs); }
    bool operator<(const KappaIndex& rhs) const;

    std::string dash_string() const;  // "2-0"; used in CSV dumps

private:
    int n_;
    std::vector<std::uint32_t> kappa_;
};

Partition partition_from_kappa(const KappaIndex& kappa);

// Strips height-n columns, then reads off the kappa tuple. Throws
// std::invalid_argument if the partition has more than n parts.
KappaIndex partition_to_kappa(const Partition& lambda, int n);

// Finite non-negative integer combination of Schur polynomials in n variables.
class SchurExpansion {
public:
    explicit SchurExpansion(int n) : n_(n) {}

    int rank() const { return n_; }
    const std::map<Partition, BigInt>& terms() const { return terms_; }

    void add(const Partition& shape, const BigInt& coeff);
    const BigInt* find(const Partition& shape) const;
    BigInt constant_term() const;  // coefficient of the empty partition
    std::size_t size() const { return terms_.size(); }

    bool operator==(const SchurExpansion& rhs) const {
        return n_ == rhs.n_ && terms_ == rhs.terms_;
    }
    bool operator!=(const SchurExpansion& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    int n_;
    std::map<Partition, BigInt> terms_;
};

}  // namespace satstat
