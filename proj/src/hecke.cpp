// SPDX-License-Identifier: Apache-2.0

#include "satstat/hecke.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "satstat/measures.hpp"
#include "satstat/rng.hpp"

namespace satstat {

namespace {

struct ExpansionKey {
    int n;
    std::vector<std::uint32_t> a, b;
    bool operator<(const ExpansionKey& rhs) const {
        if (n != rhs.n) return n < rhs.n;
        if (a != rhs.a) return a < rhs.a;
        return b < rhs.b;
    }
};

std::mutex g_exp_mutex;
std::map<ExpansionKey, SchurExpansion> g_expansions;

}  // namespace

const SchurExpansion& hecke_product_expansion(const KappaIndex& kappa, const KappaIndex& kappa2) {
    if (kappa.rank() != kappa2.rank())
        throw std::invalid_argument("hecke_product_expansion: rank mismatch");
    const int n = kappa.rank();
    ExpansionKey key{n, kappa.entries(), kappa2.entries()};
    {
        std::lock_guard<std::mutex> lock(g_exp_mutex);
        auto it = g_expansions.find(key);
        if (it != g_expansions.end()) return it->second;
    }
    SchurExpansion exp =
        schur_multiply(partition_from_kappa(kappa), partition_from_kappa(kappa2), n);
    std::lock_guard<std::mutex> lock(g_exp_mutex);
    return g_expansions.emplace(std::move(key), std::move(exp)).first->second;
}

std::vector<std::pair<KappaIndex, BigInt>> expansion_kappa_terms(const SchurExpansion& e) {
    const int n = e.rank();
    std::vector<std::pair<KappaIndex, BigInt>> out;
    out.reserve(e.size());
    for (const auto& [shape, coeff] : e.terms())
        out.emplace_back(partition_to_kappa(shape, n), coeff);
    std::sort(out.begin(), out.end(), [](const auto& lhs, const auto& rhs) {
        const std::uint64_t nl = lhs.first.weighted_norm(), nr = rhs.first.weighted_norm();
        if (nl != nr) return nl > nr;
        return rhs.first < lhs.first;
    });
    return out;
}

std::string expansion_to_csv(const SchurExpansion& e) {
    std::string csv = "xi,coefficient\n";
    for (const auto& [xi, coeff] : expansion_kappa_terms(e))
        csv += xi.dash_string() + "," + coeff.to_string() + "\n";
    return csv;
}

double hecke_square_identity_residual(const KappaIndex& kappa, const SatakePoint& point) {
    if (point.rank() != kappa.rank())
        throw std::invalid_argument("hecke_square_identity_residual: rank mismatch");
    const int n = kappa.rank();
    const auto vals = point.values();
    const std::span<const cplx> xs{vals.data(), static_cast<std::size_t>(n)};

    const cplx lhs_root = schur_eval_tableaux(kappa, xs);
    const cplx lhs = lhs_root * lhs_root;
    cplx rhs{0.0, 0.0};
    for (const auto& [shape, coeff] : hecke_product_expansion(kappa, kappa).terms())
        rhs += coeff.to_double() * schur_eval_tableaux(shape, xs);
    return std::abs(lhs - rhs);
}

BoundednessScan boundedness_scan(const KappaIndex& kappa, std::uint64_t samples,
                                 std::uint64_t seed) {
    const int n = kappa.rank();
    const Partition shape = partition_from_kappa(kappa);
    BoundednessScan scan;
    scan.dim_bound = schur_dimension(shape, n).to_double();
    scan.samples = samples;
    scan.min_abs = scan.dim_bound;
    RngStream rng(seed, RngDomain::Scan, 0);
    for (std::uint64_t i = 0; i < samples; ++i) {
        const SatakePoint pt = sample_sato_tate(n, rng);
        const auto vals = pt.values();
        const double mod = std::abs(
            schur_eval_tableaux(shape, {vals.data(), static_cast<std::size_t>(n)}));
        scan.min_abs = std::min(scan.min_abs, mod);
        scan.max_abs = std::max(scan.max_abs, mod);
    }
    scan.within_bound = scan.max_abs <= scan.dim_bound + 1e-9;
    return scan;
}

}  // namespace satstat
