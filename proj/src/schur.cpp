// SPDX-License-Identifier: Apache-2.0

#include "satstat/schur.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace satstat {

namespace {

// Enumerates Gelfand-Tsetlin chains lambda = mu^(n) > mu^(n-1) > ... > mu^(1),
// accumulating the content vector (exponent of x_k is |mu^(k)| - |mu^(k-1)|).
// Chains are in bijection with semistandard tableaux with entries <= n.
void gt_enumerate(const std::vector<std::uint32_t>& mu, int level,
                  std::vector<std::uint32_t>& exps,
                  std::map<std::vector<std::uint32_t>, BigInt>& out) {
    if (level == 1) {
        std::uint32_t w = 0;
        for (auto m : mu) w += m;
        exps[0] = w;
        // mu must be a single row at level 1
        for (std::size_t i = 1; i < mu.size(); ++i)
            if (mu[i] != 0) return;
        out[exps] += BigInt(1);
        return;
    }
    // choose nu interlacing mu: mu_1 >= nu_1 >= mu_2 >= nu_2 >= ...
    std::vector<std::uint32_t> nu(level - 1, 0);
    std::uint32_t mu_weight = 0;
    for (auto m : mu) mu_weight += m;

    // iterative odometer over the interlacing box
    auto lo = [&](int i) { return i + 1 < static_cast<int>(mu.size()) ? mu[i + 1] : 0; };
    auto hi = [&](int i) { return mu[i]; };
    for (int i = 0; i < level - 1; ++i) nu[i] = lo(i);
    while (true) {
        std::uint32_t nu_weight = 0;
        for (auto v : nu) nu_weight += v;
        exps[level - 1] = mu_weight - nu_weight;
        gt_enumerate(nu, level - 1, exps, out);

        int i = level - 2;
        while (i >= 0 && nu[i] == hi(i)) {
            nu[i] = lo(i);
            --i;
        }
        if (i < 0) break;
        ++nu[i];
    }
}

struct TableKey {
    std::vector<std::uint32_t> parts;
    int n;
    bool operator<(const TableKey& rhs) const {
        if (n != rhs.n) return n < rhs.n;
        return parts < rhs.parts;
    }
};

std::mutex g_table_mutex;
std::map<TableKey, MonomialTable> g_tables;

MonomialTable build_table(const Partition& shape, int n) {
    MonomialTable t;
    t.n = n;
    t.shape = shape;
    if (shape.rows() > static_cast<std::size_t>(n))
        return t;  // vanishes in n variables: empty table
    if (shape.part(0) > 255)
        throw std::invalid_argument("monomial_table: shape too large (part > 255)");

    std::map<std::vector<std::uint32_t>, BigInt> mono;
    std::vector<std::uint32_t> top(shape.parts());
    top.resize(n, 0);
    std::vector<std::uint32_t> exps(n, 0);
    gt_enumerate(top, n, exps, mono);

    t.max_exponent = shape.part(0);
    t.exponents.reserve(mono.size() * n);
    t.coeffs.reserve(mono.size());
    for (const auto& [e, c] : mono) {
        for (int j = 0; j < n; ++j) t.exponents.push_back(static_cast<std::uint8_t>(e[j]));
        t.coeffs.push_back(c.to_double());
        t.exact_coeffs.push_back(c);
    }
    return t;
}

}  // namespace

const MonomialTable& monomial_table(const Partition& shape, int n) {
    TableKey key{shape.parts(), n};
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto it = g_tables.find(key);
    if (it == g_tables.end()) it = g_tables.emplace(key, build_table(shape, n)).first;
    return it->second;
}

cplx schur_eval_tableaux(const Partition& shape, std::span<const cplx> xs) {
    const int n = static_cast<int>(xs.size());
    if (shape.rows() > static_cast<std::size_t>(n)) return {0.0, 0.0};
    if (shape.empty()) return {1.0, 0.0};
    const MonomialTable& t = monomial_table(shape, n);

    // per-variable power tables x_j^k, k <= max exponent
    constexpr int kMaxVars = 8;
    if (n > kMaxVars) throw std::invalid_argument("schur_eval_tableaux: rank > 8");
    cplx pows[kMaxVars][256];
    for (int j = 0; j < n; ++j) {
        pows[j][0] = {1.0, 0.0};
        for (std::uint32_t k = 1; k <= t.max_exponent; ++k) pows[j][k] = pows[j][k - 1] * xs[j];
    }
    cplx acc{0.0, 0.0};
    const std::uint8_t* e = t.exponents.data();
    for (std::size_t m = 0; m < t.entry_count(); ++m, e += n) {
        cplx term{t.coeffs[m], 0.0};
        for (int j = 0; j < n; ++j) term *= pows[j][e[j]];
        acc += term;
    }
    return acc;
}

cplx schur_eval_tableaux(const KappaIndex& kappa, std::span<const cplx> xs) {
    if (static_cast<int>(xs.size()) != kappa.rank())
        throw std::invalid_argument("schur_eval_tableaux: rank mismatch");
    return schur_eval_tableaux(partition_from_kappa(kappa), xs);
}

namespace {

// determinant of a small complex matrix via partial-pivot LU, in place
cplx det_inplace(std::vector<cplx>& a, int n) {
    cplx det{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(a[k * n + k]);
        for (int i = k + 1; i < n; ++i) {
            double v = std::abs(a[i * n + k]);
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0.0) return {0.0, 0.0};
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a[piv * n + j], a[k * n + j]);
            det = -det;
        }
        det *= a[k * n + k];
        for (int i = k + 1; i < n; ++i) {
            cplx f = a[i * n + k] / a[k * n + k];
            for (int j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
        }
    }
    return det;
}

}  // namespace

cplx schur_eval_determinant(const Partition& shape, std::span<const cplx> xs,
                            double separation_threshold) {
    const int n = static_cast<int>(xs.size());
    if (shape.rows() > static_cast<std::size_t>(n))
        throw std::invalid_argument("schur_eval_determinant: more than n parts");
    double min_sep = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) min_sep = std::min(min_sep, std::abs(xs[i] - xs[j]));
    if (n > 1 && min_sep < separation_threshold)
        throw DegeneratePointError("schur_eval_determinant: points too close (min separation " +
                                   std::to_string(min_sep) + ")");

    std::vector<cplx> num(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const std::uint32_t exp = shape.part(i) + static_cast<std::uint32_t>(n - 1 - i);
        for (int j = 0; j < n; ++j) num[i * n + j] = std::pow(xs[j], static_cast<double>(exp));
    }
    cplx numerator = det_inplace(num, n);

    cplx vandermonde{1.0, 0.0};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) vandermonde *= (xs[i] - xs[j]);
    return numerator / vandermonde;
}

BigInt schur_dimension(const Partition& shape, int n) {
    if (shape.rows() > static_cast<std::size_t>(n)) return BigInt(0);
    const MonomialTable& t = monomial_table(shape, n);
    BigInt dim;
    for (const auto& c : t.exact_coeffs) dim += c;
    return dim;
}

BigInt schur_dimension(const KappaIndex& kappa) {
    return schur_dimension(partition_from_kappa(kappa), kappa.rank());
}

namespace {

// Counts Littlewood-Richardson fillings of nu/lambda with content mu:
// semistandard skew tableaux whose reverse reading word is a lattice word.
// Cells are visited in reading order (each row right to left, rows top to
// bottom); the right neighbor and the cell above are already placed when a
// cell is visited.
struct LrCounter {
    const Partition& nu;
    const Partition& lambda;
    const Partition& mu;
    std::vector<std::uint32_t> cnt;           // placed count per value
    std::vector<std::vector<std::uint32_t>> fill;
    std::uint64_t total = 0;

    LrCounter(const Partition& nu_, const Partition& la_, const Partition& mu_)
        : nu(nu_), lambda(la_), mu(mu_), cnt(mu_.rows(), 0) {
        fill.resize(nu.rows());
        for (std::size_t r = 0; r < nu.rows(); ++r) fill[r].assign(nu.part(r), 0);
    }

    void walk(std::size_t r, std::int64_t c) {
        // advance to next cell in reading order
        while (r < nu.rows() && c < static_cast<std::int64_t>(lambda.part(r))) {
            ++r;
            c = r < nu.rows() ? static_cast<std::int64_t>(nu.part(r)) - 1 : -1;
        }
        if (r >= nu.rows()) {
            ++total;
            return;
        }
        const std::size_t col = static_cast<std::size_t>(c);
        // value bounds: row weakly increasing (right neighbor already placed),
        // column strictly increasing (cell above placed if inside the skew)
        std::uint32_t vmax = static_cast<std::uint32_t>(mu.rows());
        if (col + 1 < nu.part(r)) vmax = std::min(vmax, fill[r][col + 1]);
        std::uint32_t vmin = 1;
        if (r > 0 && col < nu.part(r - 1) && col >= lambda.part(r - 1))
            vmin = fill[r - 1][col] + 1;

        for (std::uint32_t v = vmin; v <= vmax; ++v) {
            if (cnt[v - 1] >= mu.part(v - 1)) continue;          // content exhausted
            if (v > 1 && cnt[v - 2] <= cnt[v - 1]) continue;     // lattice word
            cnt[v - 1]++;
            fill[r][col] = v;
            walk(r, c - 1);
            cnt[v - 1]--;
        }
    }

    std::uint64_t count() {
        if (nu.rows() == 0) return 1;
        walk(0, static_cast<std::int64_t>(nu.part(0)) - 1);
        return total;
    }
};

std::uint64_t lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu) {
    // containment screen, plus the first-row bound (the top skew row of an LR
    // filling is all 1's, so it holds at most mu_1 cells)
    if (nu.weight() != lambda.weight() + mu.weight()) return 0;
    if (nu.rows() < lambda.rows()) return 0;
    for (std::size_t i = 0; i < nu.rows(); ++i)
        if (nu.part(i) < lambda.part(i)) return 0;
    if (nu.part(0) > lambda.part(0) + mu.part(0)) return 0;
    LrCounter counter(nu, lambda, mu);
    return counter.count();
}

// all partitions of `weight` with at most `max_rows` parts, each part <= max_part
void enumerate_partitions(std::uint64_t weight, std::uint32_t max_part, std::size_t max_rows,
                          std::vector<std::uint32_t>& cur,
                          std::vector<Partition>& out) {
    if (weight == 0) {
        out.emplace_back(cur);
        return;
    }
    if (cur.size() >= max_rows) return;
    std::uint32_t cap = cur.empty() ? max_part : std::min<std::uint32_t>(max_part, cur.back());
    cap = static_cast<std::uint32_t>(std::min<std::uint64_t>(cap, weight));
    for (std::uint32_t p = cap; p >= 1; --p) {
        cur.push_back(p);
        enumerate_partitions(weight - p, max_part, max_rows, cur, out);
        cur.pop_back();
    }
}

}  // namespace

SchurExpansion lr_expand(const Partition& lambda, const Partition& mu, int n) {
    if (lambda.rows() > static_cast<std::size_t>(n) || mu.rows() > static_cast<std::size_t>(n))
        throw std::invalid_argument("lr_expand: factor has more than n parts");
    SchurExpansion out(n);
    // s_mu * s_lambda with the smaller-weight factor as content is cheaper,
    // but LR coefficients are symmetric; use mu as content if lighter.
    const Partition& base = mu.weight() <= lambda.weight() ? lambda : mu;
    const Partition& content = mu.weight() <= lambda.weight() ? mu : lambda;

    const std::uint64_t target = lambda.weight() + mu.weight();
    std::vector<Partition> candidates;
    std::vector<std::uint32_t> scratch;
    enumerate_partitions(target, base.part(0) + content.part(0),
                         static_cast<std::size_t>(n), scratch, candidates);
    for (const Partition& nu : candidates) {
        std::uint64_t c = lr_coefficient(nu, base, content);
        if (c != 0) out.add(nu, BigInt::from_u64(c));
    }
    return out;
}

Partition reduce_mod_determinant(const Partition& shape, int n) {
    if (shape.rows() > static_cast<std::size_t>(n))
        throw std::invalid_argument("reduce_mod_determinant: more than n parts");
    const std::uint32_t strip = shape.part(n - 1);
    if (strip == 0) return shape;
    std::vector<std::uint32_t> parts;
    for (std::size_t i = 0; i < shape.rows(); ++i) parts.push_back(shape.part(i) - strip);
    return Partition(std::move(parts));
}

SchurExpansion reduce_mod_determinant(const SchurExpansion& e, int n) {
    SchurExpansion out(n);
    for (const auto& [shape, coeff] : e.terms()) {
        if (shape.rows() > static_cast<std::size_t>(n)) continue;  // vanishes
        out.add(reduce_mod_determinant(shape, n), coeff);
    }
    return out;
}

SchurExpansion schur_multiply(const Partition& lambda, const Partition& mu, int n) {
    return reduce_mod_determinant(lr_expand(lambda, mu, n), n);
}

SchurExpansion lr_bruteforce_oracle(const Partition& lambda, const Partition& mu, int n,
                                    std::uint64_t max_combined_weight) {
    if (lambda.weight() + mu.weight() > max_combined_weight)
        throw std::invalid_argument("lr_bruteforce_oracle: combined weight exceeds guard");
    if (lambda.rows() > static_cast<std::size_t>(n) || mu.rows() > static_cast<std::size_t>(n))
        throw std::invalid_argument("lr_bruteforce_oracle: factor has more than n parts");

    using Monomials = std::map<std::vector<std::uint32_t>, BigInt, std::greater<>>;
    auto monomials_of = [n](const Partition& shape) {
        Monomials m;
        if (shape.empty()) {
            m[std::vector<std::uint32_t>(n, 0)] = BigInt(1);
            return m;
        }
        const MonomialTable& t = monomial_table(shape, n);
        const std::uint8_t* e = t.exponents.data();
        for (std::size_t i = 0; i < t.entry_count(); ++i, e += n) {
            std::vector<std::uint32_t> key(e, e + n);
            m[key] = t.exact_coeffs[i];
        }
        return m;
    };

    Monomials a = monomials_of(lambda);
    Monomials b = monomials_of(mu);
    Monomials product;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<std::uint32_t> e(n);
            for (int j = 0; j < n; ++j) e[j] = ea[j] + eb[j];
            product[e] += ca * cb;
        }
    }
    for (auto it = product.begin(); it != product.end();)
        it = it->second.is_zero() ? product.erase(it) : std::next(it);

    // peel off leading terms: the lex-greatest exponent vector of a
    // non-negative Schur combination is a partition and its coefficient is the
    // multiplicity of that Schur polynomial
    SchurExpansion out(n);
    while (!product.empty()) {
        const auto lead = product.begin();
        const std::vector<std::uint32_t>& e = lead->first;
        for (int j = 0; j + 1 < n; ++j)
            if (e[j] < e[j + 1])
                throw std::logic_error("lr_bruteforce_oracle: leading term not dominant");
        Partition nu{std::vector<std::uint32_t>(e)};
        BigInt c = lead->second;
        if (c.sign() < 0) throw std::logic_error("lr_bruteforce_oracle: negative leading coeff");

        Monomials nu_monos = monomials_of(nu);
        for (const auto& [en, cn] : nu_monos) {
            auto it = product.find(en);
            BigInt delta = c * cn;
            if (it == product.end()) {
                product.emplace(en, -delta);
            } else {
                it->second -= delta;
                if (it->second.is_zero()) product.erase(it);
            }
        }
        out.add(nu, c);
    }
    return out;
}

}  // namespace satstat
