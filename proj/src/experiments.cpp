// SPDX-License-Identifier: Apache-2.0

#include "satstat/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "satstat/schur.hpp"

namespace satstat {

std::string format_double(double v) {
    // shortest round-trip form; to_chars is locale-independent by definition
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

SignSummary summarize_sign_sequence(const std::vector<int>& signs) {
    SignSummary s;
    s.X = signs.size();
    int last = 0;
    for (int v : signs) {
        if (v > 0)
            ++s.positives;
        else if (v < 0)
            ++s.negatives;
        else {
            ++s.zeros;
            continue;
        }
        if (last != 0 && last != v) ++s.sign_changes;
        last = v;
    }
    return s;
}

namespace {

using cd = std::complex<double>;

struct PrimePowerTable {
    std::unordered_map<std::uint64_t, cd> val;

    static std::uint64_t key(std::uint64_t p, std::uint32_t e) { return (p << 6) | e; }

    const cd& at(std::uint64_t p, std::uint32_t e) const {
        return val.find(key(p, e))->second;
    }
};

PrimePowerTable build_prime_power_table(const SyntheticForm& form, const KappaIndex& kappa,
                                        std::uint64_t X) {
    PrimePowerTable t;
    for (const std::uint32_t p : form.primes()) {
        if (p > X) break;
        std::uint64_t pe = p;
        std::uint32_t e = 1;
        for (;;) {
            t.val[PrimePowerTable::key(p, e)] = form.coefficient_at_prime_power(p, e, kappa);
            if (pe > X / p) break;
            pe *= p;
            ++e;
        }
    }
    return t;
}

// -1 / 0 / +1 of the real coefficient at m; zero when any prime-power factor
// is below the zero threshold
int coefficient_sign(const SyntheticForm& form, const PrimePowerTable& table,
                     std::uint64_t m) {
    if (m == 1) return 1;
    cd prod{1.0, 0.0};
    for (const auto& [p, e] : form.spf().factor(m)) {
        const cd& c = table.at(p, e);
        if (std::abs(c) < kZeroThreshold) return 0;
        prod *= c;
    }
    const double re = prod.real();
    return re > 0.0 ? 1 : (re < 0.0 ? -1 : 0);
}

bool coefficient_nonzero(const SyntheticForm& form, const PrimePowerTable& table,
                         std::uint64_t m) {
    if (m == 1) return true;
    for (const auto& [p, e] : form.spf().factor(m))
        if (std::abs(table.at(p, e)) < kZeroThreshold) return false;
    return true;
}

}  // namespace

SignSummary sign_summary(const SyntheticForm& form, const KappaIndex& kappa, std::uint64_t X,
                         int workers) {
    if (!kappa.is_palindromic())
        throw std::invalid_argument("sign_summary: kappa must be palindromic (real coefficients)");
    if (X < 2) throw std::invalid_argument("sign_summary: X must be >= 2");
    if (X > form.prime_bound())
        throw std::invalid_argument("sign_summary: X exceeds the form's prime bound");

    const PrimePowerTable table = build_prime_power_table(form, kappa, X);

    struct Chunk {
        std::uint64_t pos = 0, neg = 0, zero = 0, changes = 0;
        int first_sign = 0, last_sign = 0;
    };
    constexpr std::uint64_t kChunk = 8192;
    const std::uint64_t nchunks = (X + kChunk - 1) / kChunk;
    std::vector<Chunk> chunks(nchunks);
    run_chunks(X, kChunk, workers, [&](std::uint64_t c, std::uint64_t count) {
        Chunk ck;
        const std::uint64_t lo = c * kChunk + 1;
        for (std::uint64_t m = lo; m < lo + count; ++m) {
            const int s = coefficient_sign(form, table, m);
            if (s > 0)
                ++ck.pos;
            else if (s < 0)
                ++ck.neg;
            else {
                ++ck.zero;
                continue;
            }
            if (ck.last_sign != 0 && ck.last_sign != s) ++ck.changes;
            if (ck.first_sign == 0) ck.first_sign = s;
            ck.last_sign = s;
        }
        chunks[c] = ck;
    });

    SignSummary out;
    out.X = X;
    int last = 0;
    for (const Chunk& ck : chunks) {
        out.positives += ck.pos;
        out.negatives += ck.neg;
        out.zeros += ck.zero;
        out.sign_changes += ck.changes;
        if (last != 0 && ck.first_sign != 0 && ck.first_sign != last) ++out.sign_changes;
        if (ck.last_sign != 0) last = ck.last_sign;
    }
    return out;
}

double negative_prime_reciprocal_sum(const SyntheticForm& form, const KappaIndex& kappa,
                                     std::uint64_t X) {
    double sum = 0.0;
    for (const std::uint32_t p : form.primes()) {
        if (p > X) break;
        const cd c = form.coefficient_at_prime(p, kappa);
        if (std::abs(c) >= kZeroThreshold && c.real() < 0.0) sum += 1.0 / p;
    }
    return sum;
}

double zero_prime_reciprocal_sum(const SyntheticForm& form, const KappaIndex& kappa,
                                 std::uint64_t X) {
    double sum = 0.0;
    for (const std::uint32_t p : form.primes()) {
        if (p > X) break;
        if (form.is_zero_at_prime_power(p, 1, kappa)) sum += 1.0 / p;
    }
    return sum;
}

namespace {

HypothesisChecks hypothesis_checks(const std::vector<std::uint32_t>& primes,
                                   const std::vector<std::uint32_t>& bad_primes,
                                   std::uint64_t X) {
    HypothesisChecks hc;
    const double A = hc.A;

    // (Omega_1): omega(p)/p <= 1 - 1/A for all p
    hc.omega1_max_ratio = bad_primes.empty() ? 0.0 : 1.0 / bad_primes.front();
    hc.omega1 = hc.omega1_max_ratio <= 1.0 - 1.0 / A;

    // (Omega_2): sup over windows of sum_{w<p<z} omega(p) log p / p - A log(z/w)
    // reduces to prime endpoints: max over a<=b of inclusive sums
    {
        double max_excess = 0.0;
        double running = 0.0;        // F[i] inclusive prefix over all primes
        double min_v = 0.0;          // min over a of F[a-1] - A log q_a
        bool have_v = false;
        std::size_t bad_idx = 0;
        for (const std::uint32_t q : primes) {
            const double v = running - A * std::log(static_cast<double>(q));
            if (!have_v || v < min_v) {
                min_v = v;
                have_v = true;
            }
            const bool is_bad =
                bad_idx < bad_primes.size() && bad_primes[bad_idx] == q ? (++bad_idx, true) : false;
            if (is_bad) running += std::log(static_cast<double>(q)) / q;
            const double u = running - A * std::log(static_cast<double>(q));
            max_excess = std::max(max_excess, u - min_v);
        }
        hc.omega2_max_excess = max_excess;
        hc.omega2 = max_excess <= A;
    }

    // (R): |#A_d - X/d| <= omega(d) = 1 for squarefree d built from bad primes;
    // exact arithmetic over products of up to three of them
    {
        bool ok = true;
        std::uint64_t checked = 1;  // d = 1: remainder 0
        std::function<void(std::size_t, std::uint64_t, int)> rec = [&](std::size_t start,
                                                                       std::uint64_t d,
                                                                       int factors) {
            if (factors == 3) return;
            for (std::size_t i = start; i < bad_primes.size(); ++i) {
                const std::uint64_t next = d * bad_primes[i];
                if (next > X) break;
                const double rd = static_cast<double>(X / next) -
                                  static_cast<double>(X) / static_cast<double>(next);
                if (std::abs(rd) > 1.0) ok = false;
                ++checked;
                rec(i + 1, next, factors + 1);
            }
        };
        rec(0, 1, 0);
        hc.r_check = ok;
        hc.r_divisors_checked = checked;
    }
    return hc;
}

}  // namespace

SieveReport sieve_report(const SyntheticForm& form, const KappaIndex& kappa, std::uint64_t X) {
    if (X < 2) throw std::invalid_argument("sieve_report: X must be >= 2");
    if (X > form.prime_bound())
        throw std::invalid_argument("sieve_report: X exceeds the form's prime bound");

    const PrimePowerTable table = build_prime_power_table(form, kappa, X);

    // B = zero primes up to X
    std::vector<std::uint32_t> bad;
    for (const std::uint32_t p : form.primes()) {
        if (p > X) break;
        if (std::abs(table.at(p, 1)) < kZeroThreshold) bad.push_back(p);
    }

    SieveReport rep;
    rep.X = X;
    rep.bad_prime_count = bad.size();
    double product = static_cast<double>(X);
    for (const std::uint32_t p : bad) product *= 1.0 - 1.0 / p;
    rep.sieve_product = product;

    // single pass over m: nonzero count, S1/S2 membership, cover
    bool cover = true;
    for (std::uint64_t m = 1; m <= X; ++m) {
        bool in_s1 = true;       // no bad prime factor p < X
        std::uint64_t d = 1;     // product of distinct bad primes dividing m
        bool d_sq_divides = true;
        if (m > 1) {
            for (const auto& [p, e] : form.spf().factor(m)) {
                const bool p_bad =
                    std::binary_search(bad.begin(), bad.end(), static_cast<std::uint32_t>(p));
                if (!p_bad) continue;
                if (p < X) in_s1 = false;
                d *= p;
                if (e < 2) d_sq_divides = false;
            }
        }
        const bool in_s2 = d > 1 && d_sq_divides;
        if (in_s1) ++rep.s1_count;
        if (in_s2) ++rep.s2_count;
        if (coefficient_nonzero(form, table, m)) {
            ++rep.nonzero_count;
            if (!in_s1 && !in_s2) cover = false;
        }
    }
    rep.cover_holds = cover;
    rep.ratio = rep.sieve_product > 0.0
                    ? static_cast<double>(rep.nonzero_count) / rep.sieve_product
                    : 0.0;

    std::vector<std::uint32_t> primes_to_X;
    for (const std::uint32_t p : form.primes()) {
        if (p > X) break;
        primes_to_X.push_back(p);
    }
    rep.checks = hypothesis_checks(primes_to_X, bad, X);
    return rep;
}

std::vector<CurvePoint> nonvanishing_density_curve(const SyntheticForm& form,
                                                   const KappaIndex& kappa, std::uint64_t X,
                                                   std::vector<std::uint64_t> checkpoints) {
    if (checkpoints.empty()) throw std::invalid_argument("nonvanishing_density_curve: no checkpoints");
    std::sort(checkpoints.begin(), checkpoints.end());
    checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
    if (checkpoints.back() > X)
        throw std::invalid_argument("nonvanishing_density_curve: checkpoint beyond X");

    const PrimePowerTable table = build_prime_power_table(form, kappa, X);
    std::vector<std::uint32_t> bad;
    for (const std::uint32_t p : form.primes()) {
        if (p > X) break;
        if (std::abs(table.at(p, 1)) < kZeroThreshold) bad.push_back(p);
    }

    std::vector<CurvePoint> out;
    out.reserve(checkpoints.size());
    std::uint64_t nonzero = 0;
    std::size_t next_cp = 0;
    std::size_t bad_idx = 0;
    double product_factor = 1.0;  // prod over bad primes <= current checkpoint
    for (std::uint64_t m = 1; m <= checkpoints.back(); ++m) {
        if (coefficient_nonzero(form, table, m)) ++nonzero;
        if (m == checkpoints[next_cp]) {
            while (bad_idx < bad.size() && bad[bad_idx] <= m) {
                product_factor *= 1.0 - 1.0 / bad[bad_idx];
                ++bad_idx;
            }
            CurvePoint pt;
            pt.X = m;
            pt.nonzero_count = nonzero;
            pt.sieve_product = static_cast<double>(m) * product_factor;
            pt.ratio = pt.sieve_product > 0.0
                           ? static_cast<double>(nonzero) / pt.sieve_product
                           : 0.0;
            out.push_back(pt);
            ++next_cp;
        }
    }
    return out;
}

std::vector<double> Histogram::mass() const {
    std::vector<double> m(counts.size(), 0.0);
    if (total == 0) return m;
    for (std::size_t i = 0; i < counts.size(); ++i)
        m[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
    return m;
}

Histogram vertical_distribution_histogram(const MeasureSpec& spec, const KappaIndex& kappa,
                                          int bins, std::uint64_t samples, std::uint64_t seed,
                                          int workers) {
    if (bins < 2) throw std::invalid_argument("vertical_distribution_histogram: bins must be >= 2");
    if (kappa.rank() != spec.n)
        throw std::invalid_argument("vertical_distribution_histogram: rank mismatch");
    spec.validate();
    const Partition shape = partition_from_kappa(kappa);
    (void)monomial_table(shape, spec.n);
    const double dim = schur_dimension(shape, spec.n).to_double();
    const bool real_observable = kappa.is_palindromic();

    Histogram h;
    h.lo = real_observable ? -dim : 0.0;
    h.hi = dim;
    h.counts.assign(static_cast<std::size_t>(bins), 0);
    h.total = samples;

    constexpr std::uint64_t kChunk = 65536;
    const std::uint64_t nchunks = (samples + kChunk - 1) / kChunk;
    std::vector<std::vector<std::uint64_t>> partial(nchunks);
    const double width = h.hi - h.lo;
    run_chunks(samples, kChunk, workers, [&](std::uint64_t c, std::uint64_t count) {
        RngStream rng(seed, RngDomain::McChunk, c);
        std::vector<std::uint64_t> local(static_cast<std::size_t>(bins), 0);
        for (std::uint64_t i = 0; i < count; ++i) {
            const SatakePoint pt = sample_measure(spec, rng);
            const auto vals = pt.values();
            const cd s =
                schur_eval_tableaux(shape, {vals.data(), static_cast<std::size_t>(spec.n)});
            const double obs = real_observable ? s.real() : std::abs(s);
            auto idx = static_cast<std::int64_t>((obs - h.lo) / width * bins);
            idx = std::clamp<std::int64_t>(idx, 0, bins - 1);
            ++local[static_cast<std::size_t>(idx)];
        }
        partial[c] = std::move(local);
    });
    for (const auto& local : partial)
        for (int b = 0; b < bins; ++b) h.counts[b] += local[b];
    return h;
}

double total_variation(const Histogram& a, const Histogram& b) {
    if (a.counts.size() != b.counts.size() || a.lo != b.lo || a.hi != b.hi)
        throw std::invalid_argument("total_variation: histograms not comparable");
    const auto ma = a.mass(), mb = b.mass();
    double tv = 0.0;
    for (std::size_t i = 0; i < ma.size(); ++i) tv += std::abs(ma[i] - mb[i]);
    return 0.5 * tv;
}

double semicircle_chi2(const Histogram& h) {
    if (std::abs(h.lo + 2.0) > 1e-9 || std::abs(h.hi - 2.0) > 1e-9)
        throw std::invalid_argument("semicircle_chi2: histogram must span [-2,2]");
    auto cdf = [](double t) {
        t = std::clamp(t, -2.0, 2.0);
        return (t * std::sqrt(4.0 - t * t) / 2.0 + 2.0 * std::asin(t / 2.0)) /
                   (2.0 * std::numbers::pi) +
               0.5;
    };
    const int bins = static_cast<int>(h.counts.size());
    const double width = (h.hi - h.lo) / bins;
    const double n = static_cast<double>(h.total);
    double chi2 = 0.0;
    for (int i = 0; i < bins; ++i) {
        const double p = cdf(h.lo + (i + 1) * width) - cdf(h.lo + i * width);
        const double expected = n * p;
        const double diff = static_cast<double>(h.counts[i]) - expected;
        chi2 += diff * diff / expected;
    }
    return chi2;
}

// ---- runner -----------------------------------------------------------------

namespace {

MeasureSpec measure_from_json(const ordered_json& j, int n) {
    MeasureSpec spec;
    spec.n = n;
    if (!j.contains("measure")) return spec;
    const auto& m = j.at("measure");
    const std::string kind = m.value("kind", "sato-tate");
    if (kind == "sato-tate") {
        spec.kind = MeasureKind::SatoTate;
    } else if (kind == "plancherel") {
        spec.kind = MeasureKind::Plancherel;
        spec.p = m.value("p", 0ULL);
    } else {
        throw std::invalid_argument("RunConfig: unknown measure kind '" + kind + "'");
    }
    return spec;
}

ordered_json measure_to_json(const MeasureSpec& spec) {
    ordered_json j;
    j["kind"] = spec.kind == MeasureKind::SatoTate ? "sato-tate" : "plancherel";
    if (spec.kind == MeasureKind::Plancherel) j["p"] = spec.p;
    return j;
}

}  // namespace

RunConfig RunConfig::from_json(const ordered_json& j) {
    RunConfig c;
    c.experiment = j.value("experiment", "");
    c.n = j.value("n", 3);
    c.kappa = j.value("kappa", std::vector<std::uint32_t>{});
    c.measure = measure_from_json(j, c.n);
    c.seed = j.value("seed", kDefaultSeed);
    c.X = j.value("X", 0ULL);
    c.samples = j.value("samples", 0ULL);
    c.deltas = j.value("deltas", std::vector<double>{});
    c.bins = j.value("bins", 40);
    c.forced_zeros = j.value("forced_zeros", "none");
    c.checkpoints = j.value("checkpoints", std::vector<std::uint64_t>{});
    c.chunk_samples = j.value("chunk_samples", 65536ULL);
    c.workers = j.value("workers", 1);
    c.validate();
    return c;
}

void RunConfig::validate() const {
    static const char* kKnown[] = {"nonvanishing", "signs", "small-values", "orthonormality",
                                   "vertical"};
    if (std::find_if(std::begin(kKnown), std::end(kKnown),
                     [&](const char* k) { return experiment == k; }) == std::end(kKnown))
        throw std::invalid_argument("RunConfig: unknown experiment '" + experiment + "'");
    if (n < 2 || n > kMaxRank) throw std::invalid_argument("RunConfig: rank out of range");
    measure.validate();
    if (experiment != "orthonormality") {
        if (kappa.size() != static_cast<std::size_t>(n - 1))
            throw std::invalid_argument("RunConfig: kappa must have n-1 entries");
    }
    if (experiment == "nonvanishing" || experiment == "signs") {
        if (X < 2) throw std::invalid_argument("RunConfig: X must be >= 2");
    } else {
        if (samples < 2) throw std::invalid_argument("RunConfig: samples must be >= 2");
    }
    if (experiment == "small-values") {
        if (deltas.empty()) throw std::invalid_argument("RunConfig: small-values needs deltas");
        for (double d : deltas)
            if (d <= 0.0) throw std::invalid_argument("RunConfig: deltas must be positive");
    }
    if (experiment == "vertical" && bins < 2)
        throw std::invalid_argument("RunConfig: bins must be >= 2");
    if (chunk_samples == 0) throw std::invalid_argument("RunConfig: chunk_samples must be positive");
    if (workers < 1) throw std::invalid_argument("RunConfig: workers must be >= 1");
    for (const std::uint64_t cp : checkpoints)
        if (cp < 1 || cp > X)
            throw std::invalid_argument("RunConfig: checkpoints must lie in [1, X]");
}

ordered_json RunConfig::to_json() const {
    ordered_json j;
    j["experiment"] = experiment;
    j["n"] = n;
    if (experiment != "orthonormality") j["kappa"] = kappa;
    j["measure"] = measure_to_json(measure);
    j["seed"] = seed;
    if (experiment == "nonvanishing" || experiment == "signs") {
        j["X"] = X;
        j["forced_zeros"] = forced_zeros;
    } else {
        j["samples"] = samples;
        j["chunk_samples"] = chunk_samples;
    }
    if (experiment == "small-values") j["deltas"] = deltas;
    if (experiment == "vertical") j["bins"] = bins;
    if (experiment == "nonvanishing" && !checkpoints.empty()) j["checkpoints"] = checkpoints;
    return j;
}

namespace {

std::vector<KappaIndex> default_gram_kappas(int n) {
    // every kappa with |kappa| <= 2, graded-lexicographic
    std::vector<KappaIndex> out;
    std::vector<std::vector<std::uint32_t>> buckets[3];
    std::vector<std::uint32_t> cur(n - 1, 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t pos, std::uint32_t left) {
        if (pos == cur.size()) {
            buckets[2 - left].push_back(cur);
            return;
        }
        for (std::uint32_t v = 0; v <= left; ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    rec(0, 2);
    for (auto& bucket : buckets) {
        std::sort(bucket.begin(), bucket.end());
        bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
        for (auto& k : bucket) out.emplace_back(n, k);
    }
    return out;
}

RunResult run_signs(const RunConfig& c) {
    const KappaIndex kappa(c.n, c.kappa);
    if (!kappa.is_palindromic())
        throw std::invalid_argument("experiment signs: kappa must be palindromic");
    const SyntheticForm form =
        build_form(c.measure, c.seed, c.X, ForcedZeroSpec::parse(c.forced_zeros), c.workers);
    const SignSummary s = sign_summary(form, kappa, c.X, c.workers);

    const bool frac_ok = s.positive_fraction() >= tolerances::kSignFractionLo &&
                         s.positive_fraction() <= tolerances::kSignFractionHi;
    const bool changes_ok =
        static_cast<double>(s.sign_changes) >=
        tolerances::kSignChangeMinRatio * static_cast<double>(s.nonzero());

    RunResult r;
    r.pass = frac_ok && changes_ok;
    ordered_json results;
    results["positives"] = s.positives;
    results["negatives"] = s.negatives;
    results["zeros"] = s.zeros;
    results["nonzero"] = s.nonzero();
    results["sign_changes"] = s.sign_changes;
    results["positive_fraction"] = s.positive_fraction();
    results["change_ratio"] = s.change_ratio();
    results["positive_fraction_ok"] = frac_ok;
    results["change_ratio_ok"] = changes_ok;

    ordered_json tol;
    tol["positive_fraction"] = {tolerances::kSignFractionLo, tolerances::kSignFractionHi};
    tol["min_change_ratio"] = tolerances::kSignChangeMinRatio;

    r.report["command"] = "experiment signs";
    r.report["config"] = c.to_json();
    r.report["results"] = results;
    r.report["tolerances"] = tol;
    r.report["pass"] = r.pass;
    r.summary = "signs: X=" + std::to_string(c.X) +
                " positive_fraction=" + format_double(s.positive_fraction()) +
                " change_ratio=" + format_double(s.change_ratio()) +
                (r.pass ? " [pass]" : " [FAIL]");
    return r;
}

RunResult run_nonvanishing(const RunConfig& c) {
    const KappaIndex kappa(c.n, c.kappa);
    const SyntheticForm form =
        build_form(c.measure, c.seed, c.X, ForcedZeroSpec::parse(c.forced_zeros), c.workers);
    const SieveReport rep = sieve_report(form, kappa, c.X);

    std::vector<std::uint64_t> checkpoints = c.checkpoints;
    if (checkpoints.empty()) {
        for (std::uint64_t cp = 100; cp < c.X; cp *= 10) checkpoints.push_back(cp);
        checkpoints.push_back(c.X);
    }
    const auto curve = nonvanishing_density_curve(form, kappa, c.X, checkpoints);
    const double neg_sum = negative_prime_reciprocal_sum(form, kappa, c.X);
    const double zero_sum = zero_prime_reciprocal_sum(form, kappa, c.X);

    const bool ratio_ok = rep.ratio >= tolerances::kNonvanishingRatioLo &&
                          rep.ratio <= tolerances::kNonvanishingRatioHi;

    RunResult r;
    r.pass = ratio_ok && rep.cover_holds && rep.checks.all();
    ordered_json results;
    results["nonzero_count"] = rep.nonzero_count;
    results["sieve_product"] = rep.sieve_product;
    results["ratio"] = rep.ratio;
    results["s1_count"] = rep.s1_count;
    results["s2_count"] = rep.s2_count;
    results["bad_prime_count"] = rep.bad_prime_count;
    results["cover_holds"] = rep.cover_holds;
    results["hypotheses"] = {{"omega1", rep.checks.omega1},
                             {"omega2", rep.checks.omega2},
                             {"r_condition", rep.checks.r_check},
                             {"A", rep.checks.A},
                             {"omega1_max_ratio", rep.checks.omega1_max_ratio},
                             {"omega2_max_excess", rep.checks.omega2_max_excess},
                             {"r_divisors_checked", rep.checks.r_divisors_checked}};
    results["negative_prime_reciprocal_sum"] = neg_sum;
    results["zero_prime_reciprocal_sum"] = zero_sum;
    ordered_json curve_json = ordered_json::array();
    std::string csv = "X,nonzero_count,sieve_product,ratio\n";
    for (const CurvePoint& pt : curve) {
        curve_json.push_back({{"X", pt.X},
                              {"nonzero_count", pt.nonzero_count},
                              {"sieve_product", pt.sieve_product},
                              {"ratio", pt.ratio}});
        csv += std::to_string(pt.X) + "," + std::to_string(pt.nonzero_count) + "," +
               format_double(pt.sieve_product) + "," + format_double(pt.ratio) + "\n";
    }
    results["curve"] = curve_json;

    ordered_json tol;
    tol["ratio_band"] = {tolerances::kNonvanishingRatioLo, tolerances::kNonvanishingRatioHi};

    r.report["command"] = "experiment nonvanishing";
    r.report["config"] = c.to_json();
    r.report["results"] = results;
    r.report["tolerances"] = tol;
    r.report["pass"] = r.pass;
    r.csv = csv;
    r.summary = "nonvanishing: X=" + std::to_string(c.X) + " ratio=" + format_double(rep.ratio) +
                " cover=" + (rep.cover_holds ? "yes" : "NO") + (r.pass ? " [pass]" : " [FAIL]");
    return r;
}

RunResult run_small_values(const RunConfig& c) {
    const KappaIndex kappa(c.n, c.kappa);
    McPlan plan{c.samples, c.chunk_samples, c.workers, c.seed};

    RunResult r;
    ordered_json estimates = ordered_json::array();
    std::string csv = "delta,estimate,stderr,bound,pass\n";
    const double exponent = 1.0 / std::pow(2.0, c.n);
    bool all_ok = true;
    for (const double delta : c.deltas) {
        const MonteCarloEstimate est = small_value_measure(kappa, delta, plan);
        const double bound = std::pow(delta, exponent);
        const bool ok = est.real() <= bound + tolerances::kStderrFactor * est.stderr_of_mean;
        all_ok = all_ok && ok;
        estimates.push_back({{"delta", delta},
                             {"value", est.real()},
                             {"stderr", est.stderr_of_mean},
                             {"samples", est.samples},
                             {"bound", bound},
                             {"pass", ok}});
        csv += format_double(delta) + "," + format_double(est.real()) + "," +
               format_double(est.stderr_of_mean) + "," + format_double(bound) + "," +
               (ok ? "true" : "false") + "\n";
    }
    r.pass = all_ok;
    ordered_json results;
    results["spec"] = {{"domain", "uniform-full-torus"}, {"n", c.n}};
    results["estimates"] = estimates;
    ordered_json tol;
    tol["bound"] = "delta^(1/2^n) + 3*stderr";
    r.report["command"] = "experiment small-values";
    r.report["config"] = c.to_json();
    r.report["results"] = results;
    r.report["tolerances"] = tol;
    r.report["pass"] = r.pass;
    r.csv = csv;
    r.summary = "small-values: " + std::to_string(c.deltas.size()) + " deltas" +
                (r.pass ? " [pass]" : " [FAIL]");
    return r;
}

RunResult run_orthonormality(const RunConfig& c) {
    const std::vector<KappaIndex> kappas = default_gram_kappas(c.n);
    const std::size_t K = kappas.size();
    std::vector<Partition> shapes;
    shapes.reserve(K);
    for (const auto& k : kappas) {
        shapes.push_back(partition_from_kappa(k));
        (void)monomial_table(shapes.back(), c.n);
    }

    McPlan plan{c.samples, c.chunk_samples, c.workers, c.seed};
    const auto estimates = mc_integrate_vector(
        [&](const SatakePoint& pt, cd* out) {
            const auto vals = pt.values();
            const std::span<const cplx> xs{vals.data(), static_cast<std::size_t>(c.n)};
            std::vector<cd> sv(K);
            for (std::size_t i = 0; i < K; ++i) sv[i] = schur_eval_tableaux(shapes[i], xs);
            for (std::size_t i = 0; i < K; ++i)
                for (std::size_t j = 0; j < K; ++j) out[i * K + j] = sv[i] * std::conj(sv[j]);
        },
        K * K, c.measure, plan);

    double max_dev = 0.0;
    bool all_ok = true;
    ordered_json entries = ordered_json::array();
    std::string csv = "kappa_row,kappa_col,re,im,stderr,target,deviation,pass\n";
    for (std::size_t i = 0; i < K; ++i) {
        for (std::size_t j = 0; j < K; ++j) {
            const auto& e = estimates[i * K + j];
            const double target = i == j ? 1.0 : 0.0;
            const double dev = std::abs(e.value - cd{target, 0.0});
            const double tol = std::max(tolerances::kStderrFactor * e.stderr_of_mean,
                                        tolerances::kGramAbsTolerance);
            const bool ok = dev <= tol;
            all_ok = all_ok && ok;
            max_dev = std::max(max_dev, dev);
            entries.push_back({{"row", kappas[i].dash_string()},
                               {"col", kappas[j].dash_string()},
                               {"value", {e.value.real(), e.value.imag()}},
                               {"stderr", e.stderr_of_mean},
                               {"deviation", dev},
                               {"pass", ok}});
            csv += kappas[i].dash_string() + "," + kappas[j].dash_string() + "," +
                   format_double(e.value.real()) + "," + format_double(e.value.imag()) + "," +
                   format_double(e.stderr_of_mean) + "," + format_double(target) + "," +
                   format_double(dev) + "," + (ok ? "true" : "false") + "\n";
        }
    }

    RunResult r;
    r.pass = all_ok;
    ordered_json results;
    ordered_json kap = ordered_json::array();
    for (const auto& k : kappas) kap.push_back(k.dash_string());
    results["kappas"] = kap;
    results["max_abs_deviation"] = max_dev;
    results["entries"] = entries;
    ordered_json tol;
    tol["entrywise"] = "max(3*stderr, 5e-3)";
    r.report["command"] = "experiment orthonormality";
    r.report["config"] = c.to_json();
    r.report["results"] = results;
    r.report["tolerances"] = tol;
    r.report["pass"] = r.pass;
    r.csv = csv;
    r.summary = "orthonormality: " + std::to_string(K) + "x" + std::to_string(K) +
                " gram, max_dev=" + format_double(max_dev) + (r.pass ? " [pass]" : " [FAIL]");
    return r;
}

RunResult run_vertical(const RunConfig& c) {
    const KappaIndex kappa(c.n, c.kappa);
    const Histogram h =
        vertical_distribution_histogram(c.measure, kappa, c.bins, c.samples, c.seed, c.workers);

    RunResult r;
    r.pass = true;
    const auto mass = h.mass();
    ordered_json results;
    results["observable"] = kappa.is_palindromic() ? "re" : "abs";
    results["lo"] = h.lo;
    results["hi"] = h.hi;
    results["bins"] = c.bins;
    results["mass"] = mass;
    std::string csv = "bin_lo,bin_hi,mass\n";
    const double width = (h.hi - h.lo) / c.bins;
    for (int i = 0; i < c.bins; ++i)
        csv += format_double(h.lo + i * width) + "," + format_double(h.lo + (i + 1) * width) +
               "," + format_double(mass[i]) + "\n";
    r.report["command"] = "experiment vertical";
    r.report["config"] = c.to_json();
    r.report["results"] = results;
    r.report["tolerances"] = ordered_json::object();
    r.report["pass"] = true;
    r.csv = csv;
    r.summary = "vertical: " + std::to_string(c.bins) + " bins over [" + format_double(h.lo) +
                "," + format_double(h.hi) + "] [pass]";
    return r;
}

}  // namespace

RunResult run_experiment(const RunConfig& config) {
    config.validate();
    if (config.experiment == "signs") return run_signs(config);
    if (config.experiment == "nonvanishing") return run_nonvanishing(config);
    if (config.experiment == "small-values") return run_small_values(config);
    if (config.experiment == "orthonormality") return run_orthonormality(config);
    return run_vertical(config);
}

}  // namespace satstat
