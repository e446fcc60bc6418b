// SPDX-License-Identifier: Apache-2.0

#include "satstat/form.hpp"

#include <algorithm>
#include <stdexcept>

#include "satstat/schur.hpp"

namespace satstat {

namespace {

std::uint64_t cache_key(std::uint64_t p, std::uint32_t e) {
    if (e >= 64) throw std::invalid_argument("coefficient cache: exponent too large");
    return (p << 6) | e;
}

}  // namespace

SyntheticForm::SyntheticForm(MeasureSpec measure, std::uint64_t seed, std::uint64_t prime_bound,
                             ForcedZeroSpec forced_zeros, int build_workers)
    : measure_(measure),
      seed_(seed),
      prime_bound_(prime_bound),
      forced_(std::move(forced_zeros)),
      primes_(sieve_primes(prime_bound)),
      spf_(prime_bound) {
    measure_.validate();
    if (prime_bound < 2) throw std::invalid_argument("SyntheticForm: prime_bound must be >= 2");
    const int n = measure_.n;
    angles_.resize(primes_.size() * static_cast<std::size_t>(n));

    // the Satake point of p depends only on (seed, p, measure): safe to fill
    // in parallel, identical for any worker count
    run_chunks(primes_.size(), 1024, build_workers, [&](std::uint64_t c, std::uint64_t count) {
        const std::size_t base = c * 1024;
        for (std::uint64_t i = 0; i < count; ++i) {
            const std::size_t idx = base + i;
            RngStream rng(seed_, RngDomain::FormPrime, primes_[idx]);
            const SatakePoint pt = sample_measure(measure_, rng);
            for (int j = 0; j < n; ++j) angles_[idx * n + j] = pt.angle(j);
        }
    });
}

std::size_t SyntheticForm::prime_index(std::uint64_t p) const {
    const auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p)
        throw std::out_of_range("SyntheticForm: " + std::to_string(p) +
                                " is not a prime within the form's bound");
    return static_cast<std::size_t>(it - primes_.begin());
}

SatakePoint SyntheticForm::satake_at(std::uint64_t p) const {
    const std::size_t idx = prime_index(p);
    const int n = measure_.n;
    return SatakePoint::constrained(
        n, {angles_.data() + idx * static_cast<std::size_t>(n), static_cast<std::size_t>(n)});
}

std::complex<double> SyntheticForm::coefficient_at_prime(std::uint64_t p,
                                                         const KappaIndex& kappa) const {
    return coefficient_at_prime_power(p, 1, kappa);
}

std::complex<double> SyntheticForm::coefficient_at_prime_power(std::uint64_t p, std::uint32_t e,
                                                               const KappaIndex& kappa) const {
    if (kappa.rank() != measure_.n)
        throw std::invalid_argument("coefficient_at_prime_power: rank mismatch");
    if (e == 0 || kappa.is_zero()) return {1.0, 0.0};
    if (forced_.contains(p)) return {0.0, 0.0};

    const std::uint64_t key = cache_key(p, e);
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find(kappa.entries());
        if (it != cache_.end()) {
            auto hit = it->second.find(key);
            if (hit != it->second.end()) return hit->second;
        }
    }
    const SatakePoint pt = satake_at(p);
    const auto vals = pt.values();
    const std::complex<double> c = schur_eval_tableaux(
        kappa.scaled(e), {vals.data(), static_cast<std::size_t>(measure_.n)});
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        cache_[kappa.entries()][key] = c;
    }
    return c;
}

std::complex<double> SyntheticForm::coefficient_at_m(std::uint64_t m,
                                                     const KappaIndex& kappa) const {
    if (m == 0) throw std::invalid_argument("coefficient_at_m: m must be positive");
    if (m == 1) return {1.0, 0.0};
    if (m > spf_.bound())
        throw std::out_of_range("coefficient_at_m: m exceeds the form's prime bound");
    std::complex<double> prod{1.0, 0.0};
    for (const auto& [p, e] : spf_.factor(m)) {
        const std::complex<double> c = coefficient_at_prime_power(p, e, kappa);
        if (c == std::complex<double>{0.0, 0.0}) return {0.0, 0.0};
        prod *= c;
    }
    return prod;
}

bool SyntheticForm::is_zero_at_prime_power(std::uint64_t p, std::uint32_t e,
                                           const KappaIndex& kappa) const {
    if (e == 0 || kappa.is_zero()) return false;
    if (forced_.contains(p)) return true;
    return std::abs(coefficient_at_prime_power(p, e, kappa)) < kZeroThreshold;
}

void SyntheticForm::warm_coefficient_cache(const KappaIndex& kappa, std::uint64_t X) const {
    for (const std::uint32_t p : primes_) {
        std::uint64_t pe = p;
        std::uint32_t e = 1;
        do {
            (void)coefficient_at_prime_power(p, e, kappa);
            if (pe > X / p) break;
            pe *= p;
            ++e;
        } while (pe <= X);
    }
}

SyntheticForm build_form(const MeasureSpec& measure, std::uint64_t seed,
                         std::uint64_t prime_bound, const ForcedZeroSpec& forced_zeros,
                         int build_workers) {
    return SyntheticForm(measure, seed, prime_bound, forced_zeros, build_workers);
}

}  // namespace satstat
