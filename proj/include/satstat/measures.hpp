// SPDX-License-Identifier: Apache-2.0
//
// Eigenangle measures on the constrained torus: the special-unitary Weyl
// (Sato-Tate) measure and its p-adic Plancherel deformation, with samplers,
// densities, and seeded Monte-Carlo estimation.
//
// Estimation is chunked: a sample budget is split into fixed-size chunks,
// chunk c draws from the stream (seed, McChunk, c), and per-chunk moments are
// merged in chunk order. The merged result is bit-identical for any worker
// count, serial included.

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "satstat/partition.hpp"
#include "satstat/rng.hpp"
#include "satstat/satake.hpp"

namespace satstat {

enum class MeasureKind { SatoTate, Plancherel };

struct MeasureSpec {
    MeasureKind kind = MeasureKind::SatoTate;
    int n = 2;
    std::uint64_t p = 0;  // Plancherel only

    void validate() const;
    std::string describe() const;  // "sato-tate" or "plancherel(p)"
};

struct MonteCarloEstimate {
    std::complex<double> value{0.0, 0.0};
    double stderr_of_mean = 0.0;
    std::uint64_t samples = 0;

    double real() const { return value.real(); }
};

// Welford accumulator for complex observations (scalar second moment).
struct McAccumulator {
    std::uint64_t count = 0;
    std::complex<double> mean{0.0, 0.0};
    double m2 = 0.0;

    void add(std::complex<double> x);
    void merge(const McAccumulator& rhs);
    MonteCarloEstimate estimate() const;
};

// Unnormalized Weyl density prod_{l<m} |e^{i a_l} - e^{i a_m}|^2.
double sato_tate_density(const SatakePoint& point);

// Radon-Nikodym weight of the p-adic Plancherel measure against Sato-Tate;
// E_ST[w_p] = 1.
double plancherel_weight(const SatakePoint& point, std::uint64_t p);
double plancherel_normalizer(int n, std::uint64_t p);
// Uniform upper bound on the weight, used as the rejection constant.
double plancherel_weight_bound(int n, std::uint64_t p);

// Eigenangles of a Haar draw from the special-unitary group, in exchangeable
// (randomly permuted) order.
SatakePoint sample_sato_tate(int n, RngStream& rng);

// Rejection sampling against the Sato-Tate proposal.
SatakePoint sample_plancherel(int n, std::uint64_t p, RngStream& rng);

SatakePoint sample_measure(const MeasureSpec& spec, RngStream& rng);

// Independence-Metropolis chain on the (n-1)-subtorus with the Weyl target
// density; test oracle for sample_sato_tate.
std::vector<SatakePoint> metropolis_sato_tate(int n, std::size_t count, std::uint64_t seed,
                                              std::size_t burn_in = 1024, std::size_t thin = 16);

struct McPlan {
    std::uint64_t samples = 0;
    std::uint64_t chunk_size = 65536;
    int workers = 1;
    std::uint64_t seed = 1;
};

MonteCarloEstimate mc_integrate(const std::function<std::complex<double>(const SatakePoint&)>& f,
                                const MeasureSpec& spec, const McPlan& plan);

// Vector-valued variant: per sample, fn fills `dim` observations drawn from
// one point; returns one estimate per component.
std::vector<MonteCarloEstimate> mc_integrate_vector(
    const std::function<void(const SatakePoint&, std::complex<double>*)>& fn, std::size_t dim,
    const MeasureSpec& spec, const McPlan& plan);

// Fraction of the torus where |S_kappa| < delta. Angles are independent and
// uniform on the full n-torus by default; `constrained` restricts to the
// unit-determinant subtorus instead.
MonteCarloEstimate small_value_measure(const KappaIndex& kappa, double delta, const McPlan& plan,
                                       bool constrained = false);

// Two-sample Kolmogorov-Smirnov statistic.
double ks_statistic(std::vector<double> a, std::vector<double> b);

// Deterministic chunk scheduler shared by the estimators above.
void run_chunks(std::uint64_t total, std::uint64_t chunk_size, int workers,
                const std::function<void(std::uint64_t chunk_index, std::uint64_t chunk_samples)>& chunk_fn);

}  // namespace satstat
