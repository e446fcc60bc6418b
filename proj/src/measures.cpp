// SPDX-License-Identifier: Apache-2.0

#include "satstat/measures.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "satstat/schur.hpp"

namespace satstat {

void MeasureSpec::validate() const {
    if (n < 2 || n > kMaxRank) throw std::invalid_argument("MeasureSpec: rank out of range");
    if (kind == MeasureKind::Plancherel && p < 2)
        throw std::invalid_argument("MeasureSpec: Plancherel needs a prime p >= 2");
}

std::string MeasureSpec::describe() const {
    return kind == MeasureKind::SatoTate ? "sato-tate" : "plancherel(" + std::to_string(p) + ")";
}

void McAccumulator::add(std::complex<double> x) {
    ++count;
    const std::complex<double> delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += (std::conj(delta) * (x - mean)).real();
}

void McAccumulator::merge(const McAccumulator& rhs) {
    if (rhs.count == 0) return;
    if (count == 0) {
        *this = rhs;
        return;
    }
    const std::uint64_t total = count + rhs.count;
    const std::complex<double> delta = rhs.mean - mean;
    mean += delta * (static_cast<double>(rhs.count) / static_cast<double>(total));
    m2 += rhs.m2 + std::norm(delta) * static_cast<double>(count) *
                       static_cast<double>(rhs.count) / static_cast<double>(total);
    count = total;
}

MonteCarloEstimate McAccumulator::estimate() const {
    MonteCarloEstimate e;
    e.value = mean;
    e.samples = count;
    if (count >= 2) {
        const double var = m2 / static_cast<double>(count - 1);
        e.stderr_of_mean = std::sqrt(std::max(var, 0.0) / static_cast<double>(count));
    }
    return e;
}

double sato_tate_density(const SatakePoint& point) {
    const int n = point.rank();
    const auto vals = point.values();
    double w = 1.0;
    for (int l = 0; l < n; ++l)
        for (int m = l + 1; m < n; ++m) w *= std::norm(vals[l] - vals[m]);
    return w;
}

double plancherel_normalizer(int n, std::uint64_t p) {
    const double q = 1.0 / static_cast<double>(p);
    double z = 1.0;
    double qj = q;
    for (int j = 2; j <= n; ++j) {
        qj *= q;  // q^j
        z *= (1.0 - qj) / (1.0 - q);
    }
    return z;
}

double plancherel_weight(const SatakePoint& point, std::uint64_t p) {
    const int n = point.rank();
    const double q = 1.0 / static_cast<double>(p);
    const auto vals = point.values();
    double denom = 1.0;
    for (int l = 0; l < n; ++l)
        for (int m = l + 1; m < n; ++m) denom *= std::norm(vals[l] - q * vals[m]);
    return plancherel_normalizer(n, p) / denom;
}

double plancherel_weight_bound(int n, std::uint64_t p) {
    const double q = 1.0 / static_cast<double>(p);
    const int pairs = n * (n - 1) / 2;
    return plancherel_normalizer(n, p) * std::pow(1.0 - q, -2.0 * pairs);
}

SatakePoint sample_sato_tate(int n, RngStream& rng) {
    double angles[kMaxRank];
    haar_special_unitary_angles(n, rng, angles);
    // exchangeable order: the eigensolver's output order is value-correlated
    for (int j = n - 1; j > 0; --j) {
        const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(j) + 1));
        std::swap(angles[j], angles[k]);
    }
    return SatakePoint::constrained(n, {angles, static_cast<std::size_t>(n)});
}

SatakePoint sample_plancherel(int n, std::uint64_t p, RngStream& rng) {
    const double bound = plancherel_weight_bound(n, p);
    for (std::uint64_t it = 0; it < 1000000; ++it) {
        SatakePoint point = sample_sato_tate(n, rng);
        const double u = rng.uniform01();
        if (u * bound < plancherel_weight(point, p)) return point;
    }
    throw std::runtime_error("sample_plancherel: rejection loop exceeded iteration cap");
}

SatakePoint sample_measure(const MeasureSpec& spec, RngStream& rng) {
    spec.validate();
    return spec.kind == MeasureKind::SatoTate ? sample_sato_tate(spec.n, rng)
                                              : sample_plancherel(spec.n, spec.p, rng);
}

std::vector<SatakePoint> metropolis_sato_tate(int n, std::size_t count, std::uint64_t seed,
                                              std::size_t burn_in, std::size_t thin) {
    if (n < 2 || n > kMaxRank) throw std::invalid_argument("metropolis_sato_tate: bad rank");
    if (thin == 0) thin = 1;
    RngStream rng(seed, RngDomain::Metropolis, 0);

    std::vector<double> state(n - 1);
    auto propose = [&](std::vector<double>& out) {
        for (auto& a : out) a = rng.angle();
    };
    auto density = [&](const std::vector<double>& a) {
        return sato_tate_density(SatakePoint::constrained(n, a));
    };

    propose(state);
    double w = density(state);
    while (w <= 0.0) {  // measure-zero start, retry
        propose(state);
        w = density(state);
    }

    std::vector<SatakePoint> out;
    out.reserve(count);
    std::vector<double> cand(n - 1);
    const std::size_t steps = burn_in + count * thin;
    for (std::size_t step = 0; step < steps; ++step) {
        propose(cand);
        const double wc = density(cand);
        if (wc > 0.0) {
            const double u = rng.uniform01();
            if (u * w < wc) {
                state = cand;
                w = wc;
            }
        }
        if (step >= burn_in && (step - burn_in) % thin == thin - 1)
            out.push_back(SatakePoint::constrained(n, state));
    }
    return out;
}

void run_chunks(std::uint64_t total, std::uint64_t chunk_size, int workers,
                const std::function<void(std::uint64_t, std::uint64_t)>& chunk_fn) {
    if (chunk_size == 0) throw std::invalid_argument("run_chunks: chunk_size must be positive");
    const std::uint64_t nchunks = (total + chunk_size - 1) / chunk_size;
    auto chunk_samples = [&](std::uint64_t c) {
        return std::min(chunk_size, total - c * chunk_size);
    };
    if (workers <= 1 || nchunks <= 1) {
        for (std::uint64_t c = 0; c < nchunks; ++c) chunk_fn(c, chunk_samples(c));
        return;
    }
    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            chunk_fn(c, chunk_samples(c));
        }
    };
    std::vector<std::thread> pool;
    const int nthreads = static_cast<int>(std::min<std::uint64_t>(workers, nchunks));
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

MonteCarloEstimate mc_integrate(const std::function<std::complex<double>(const SatakePoint&)>& f,
                                const MeasureSpec& spec, const McPlan& plan) {
    if (plan.samples < 2) throw std::invalid_argument("mc_integrate: need at least 2 samples");
    spec.validate();
    const std::uint64_t nchunks = (plan.samples + plan.chunk_size - 1) / plan.chunk_size;
    std::vector<McAccumulator> acc(nchunks);
    run_chunks(plan.samples, plan.chunk_size, plan.workers,
               [&](std::uint64_t c, std::uint64_t count) {
                   RngStream rng(plan.seed, RngDomain::McChunk, c);
                   McAccumulator local;
                   for (std::uint64_t i = 0; i < count; ++i)
                       local.add(f(sample_measure(spec, rng)));
                   acc[c] = local;
               });
    McAccumulator total;
    for (const auto& a : acc) total.merge(a);
    return total.estimate();
}

std::vector<MonteCarloEstimate> mc_integrate_vector(
    const std::function<void(const SatakePoint&, std::complex<double>*)>& fn, std::size_t dim,
    const MeasureSpec& spec, const McPlan& plan) {
    if (plan.samples < 2) throw std::invalid_argument("mc_integrate_vector: need at least 2 samples");
    spec.validate();
    const std::uint64_t nchunks = (plan.samples + plan.chunk_size - 1) / plan.chunk_size;
    std::vector<std::vector<McAccumulator>> acc(nchunks);
    run_chunks(plan.samples, plan.chunk_size, plan.workers,
               [&](std::uint64_t c, std::uint64_t count) {
                   RngStream rng(plan.seed, RngDomain::McChunk, c);
                   std::vector<McAccumulator> local(dim);
                   std::vector<std::complex<double>> obs(dim);
                   for (std::uint64_t i = 0; i < count; ++i) {
                       const SatakePoint point = sample_measure(spec, rng);
                       fn(point, obs.data());
                       for (std::size_t d = 0; d < dim; ++d) local[d].add(obs[d]);
                   }
                   acc[c] = std::move(local);
               });
    std::vector<McAccumulator> total(dim);
    for (const auto& chunk : acc)
        for (std::size_t d = 0; d < dim; ++d) total[d].merge(chunk[d]);
    std::vector<MonteCarloEstimate> out(dim);
    for (std::size_t d = 0; d < dim; ++d) out[d] = total[d].estimate();
    return out;
}

MonteCarloEstimate small_value_measure(const KappaIndex& kappa, double delta, const McPlan& plan,
                                       bool constrained) {
    if (delta <= 0.0) throw std::invalid_argument("small_value_measure: delta must be positive");
    if (plan.samples < 2) throw std::invalid_argument("small_value_measure: need >= 2 samples");
    const int n = kappa.rank();
    const Partition shape = partition_from_kappa(kappa);
    (void)monomial_table(shape, n);  // warm the shared cache before parallel use

    const std::uint64_t nchunks = (plan.samples + plan.chunk_size - 1) / plan.chunk_size;
    std::vector<McAccumulator> acc(nchunks);
    run_chunks(plan.samples, plan.chunk_size, plan.workers,
               [&](std::uint64_t c, std::uint64_t count) {
                   RngStream rng(plan.seed, RngDomain::McChunk, c);
                   McAccumulator local;
                   std::array<cplx, kMaxRank> xs;
                   for (std::uint64_t i = 0; i < count; ++i) {
                       if (constrained) {
                           double angles[kMaxRank];
                           for (int j = 0; j < n - 1; ++j) angles[j] = rng.angle();
                           const SatakePoint pt =
                               SatakePoint::constrained(n, {angles, static_cast<std::size_t>(n - 1)});
                           xs = pt.values();
                       } else {
                           for (int j = 0; j < n; ++j) xs[j] = std::polar(1.0, rng.angle());
                       }
                       const double mod = std::abs(schur_eval_tableaux(
                           shape, {xs.data(), static_cast<std::size_t>(n)}));
                       local.add(cplx{mod < delta ? 1.0 : 0.0, 0.0});
                   }
                   acc[c] = local;
               });
    McAccumulator total;
    for (const auto& a : acc) total.merge(a);
    return total.estimate();
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

}  // namespace satstat
