// SPDX-License-Identifier: Apache-2.0
//
// Synthetic stand-ins for Hecke eigenforms: a deterministic seeded assignment
// of Satake data to every prime up to a bound, plus an optional set of primes
// whose coefficients are forced to vanish exactly. Coefficients at prime
// powers evaluate the Schur polynomial of the scaled index at the stored
// point; coefficients at general m multiply over the factorization.

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "satstat/measures.hpp"
#include "satstat/partition.hpp"
#include "satstat/primes.hpp"
#include "satstat/satake.hpp"

namespace satstat {

// Moduli below this are treated as numerically zero. Forced zeros are exact.
inline constexpr double kZeroThreshold = 1e-12;

class SyntheticForm {
public:
    SyntheticForm(MeasureSpec measure, std::uint64_t seed, std::uint64_t prime_bound,
                  ForcedZeroSpec forced_zeros, int build_workers = 1);

    int rank() const { return measure_.n; }
    const MeasureSpec& measure() const { return measure_; }
    std::uint64_t seed() const { return seed_; }
    std::uint64_t prime_bound() const { return prime_bound_; }
    const ForcedZeroSpec& forced_zeros() const { return forced_; }
    const std::vector<std::uint32_t>& primes() const { return primes_; }
    const SpfTable& spf() const { return spf_; }

    SatakePoint satake_at(std::uint64_t p) const;
    bool is_forced_zero(std::uint64_t p) const { return forced_.contains(p); }

    std::complex<double> coefficient_at_prime(std::uint64_t p, const KappaIndex& kappa) const;
    std::complex<double> coefficient_at_prime_power(std::uint64_t p, std::uint32_t e,
                                                    const KappaIndex& kappa) const;
    std::complex<double> coefficient_at_m(std::uint64_t m, const KappaIndex& kappa) const;

    bool is_zero_at_prime_power(std::uint64_t p, std::uint32_t e, const KappaIndex& kappa) const;

    // Computes and stores every coefficient at p^e <= X (and every p <= X at
    // e = 1); later queries in parallel sections are pure reads.
    void warm_coefficient_cache(const KappaIndex& kappa, std::uint64_t X) const;

private:
    std::size_t prime_index(std::uint64_t p) const;  // throws if p out of range / not prime

    MeasureSpec measure_;
    std::uint64_t seed_;
    std::uint64_t prime_bound_;
    ForcedZeroSpec forced_;
    std::vector<std::uint32_t> primes_;
    std::vector<double> angles_;  // primes_.size() x n
    SpfTable spf_;

    mutable std::mutex cache_mutex_;
    mutable std::map<std::vector<std::uint32_t>,
                     std::unordered_map<std::uint64_t, std::complex<double>>>
        cache_;  // per kappa: (p << 6 | e) -> coefficient
};

SyntheticForm build_form(const MeasureSpec& measure, std::uint64_t seed,
                         std::uint64_t prime_bound, const ForcedZeroSpec& forced_zeros,
                         int build_workers = 1);

}  // namespace satstat
