// SPDX-License-Identifier: Apache-2.0

#include "satstat/linalg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace satstat {

using cd = std::complex<double>;

void ginibre_fill(CMatrix& m, RngStream& rng) {
    for (int i = 0; i < m.n * m.n; ++i) m.a[i] = rng.complex_gaussian();
}

void qr_haar_unitary(CMatrix& m) {
    const int n = m.n;
    cd q[kMaxRank * kMaxRank];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q[i * n + j] = (i == j) ? cd{1.0, 0.0} : cd{0.0, 0.0};

    cd v[kMaxRank];
    for (int k = 0; k < n; ++k) {
        // Householder vector for column k of the trailing block
        double norm2 = 0.0;
        for (int i = k; i < n; ++i) norm2 += std::norm(m.at(i, k));
        const double norm = std::sqrt(norm2);
        if (norm == 0.0) continue;
        cd x0 = m.at(k, k);
        const double ax0 = std::abs(x0);
        const cd phase = ax0 == 0.0 ? cd{1.0, 0.0} : x0 / ax0;
        const cd alpha = -phase * norm;

        double vnorm2 = 0.0;
        for (int i = k; i < n; ++i) {
            v[i] = m.at(i, k);
            if (i == k) v[i] -= alpha;
            vnorm2 += std::norm(v[i]);
        }
        if (vnorm2 == 0.0) continue;

        // apply H = I - 2 v v^H / |v|^2 to the trailing block of m
        for (int j = k; j < n; ++j) {
            cd dot{0.0, 0.0};
            for (int i = k; i < n; ++i) dot += std::conj(v[i]) * m.at(i, j);
            dot *= 2.0 / vnorm2;
            for (int i = k; i < n; ++i) m.at(i, j) -= dot * v[i];
        }
        // accumulate q = q * H (H applied from the right touches columns k..n-1)
        for (int i = 0; i < n; ++i) {
            cd dot{0.0, 0.0};
            for (int j = k; j < n; ++j) dot += q[i * n + j] * v[j];
            dot *= 2.0 / vnorm2;
            for (int j = k; j < n; ++j) q[i * n + j] -= dot * std::conj(v[j]);
        }
    }
    // phase fix: scale column i of q by R_ii / |R_ii| (R now sits in m)
    for (int i = 0; i < n; ++i) {
        const cd rii = m.at(i, i);
        const double arii = std::abs(rii);
        const cd phase = arii == 0.0 ? cd{1.0, 0.0} : rii / arii;
        for (int r = 0; r < n; ++r) q[r * n + i] *= phase;
    }
    for (int i = 0; i < n * n; ++i) m.a[i] = q[i];
}

std::complex<double> determinant(const CMatrix& m) {
    const int n = m.n;
    cd a[kMaxRank * kMaxRank];
    for (int i = 0; i < n * n; ++i) a[i] = m.a[i];
    cd det{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(a[k * n + k]);
        for (int i = k + 1; i < n; ++i) {
            const double val = std::abs(a[i * n + k]);
            if (val > best) {
                best = val;
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
            const cd f = a[i * n + k] / a[k * n + k];
            for (int j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
        }
    }
    return det;
}

namespace {

// Givens rotation zeroing b against a: returns (c real, s) with
// [c s; -conj(s) c] [a; b] = [r; 0].
void givens(cd a, cd b, double& c, cd& s) {
    const double ab = std::abs(b);
    if (ab == 0.0) {
        c = 1.0;
        s = {0.0, 0.0};
        return;
    }
    const double aa = std::abs(a);
    if (aa == 0.0) {
        c = 0.0;
        s = std::conj(b) / ab;
        return;
    }
    const double t = std::sqrt(aa * aa + ab * ab);
    c = aa / t;
    s = (a / aa) * std::conj(b) / t;
}

}  // namespace

bool eigenvalues(const CMatrix& m, std::complex<double>* out) {
    const int n = m.n;
    cd h[kMaxRank * kMaxRank];
    for (int i = 0; i < n * n; ++i) h[i] = m.a[i];
    auto H = [&](int i, int j) -> cd& { return h[i * n + j]; };

    // Householder reduction to upper Hessenberg
    cd v[kMaxRank];
    for (int k = 0; k + 2 < n; ++k) {
        double norm2 = 0.0;
        for (int i = k + 1; i < n; ++i) norm2 += std::norm(H(i, k));
        const double norm = std::sqrt(norm2);
        if (norm == 0.0) continue;
        cd x0 = H(k + 1, k);
        const double ax0 = std::abs(x0);
        const cd phase = ax0 == 0.0 ? cd{1.0, 0.0} : x0 / ax0;
        const cd alpha = -phase * norm;
        double vnorm2 = 0.0;
        for (int i = k + 1; i < n; ++i) {
            v[i] = H(i, k);
            if (i == k + 1) v[i] -= alpha;
            vnorm2 += std::norm(v[i]);
        }
        if (vnorm2 == 0.0) continue;
        // H := P H P with P = I - 2 v v^H / |v|^2
        for (int j = 0; j < n; ++j) {
            cd dot{0.0, 0.0};
            for (int i = k + 1; i < n; ++i) dot += std::conj(v[i]) * H(i, j);
            dot *= 2.0 / vnorm2;
            for (int i = k + 1; i < n; ++i) H(i, j) -= dot * v[i];
        }
        for (int i = 0; i < n; ++i) {
            cd dot{0.0, 0.0};
            for (int j = k + 1; j < n; ++j) dot += H(i, j) * v[j];
            dot *= 2.0 / vnorm2;
            for (int j = k + 1; j < n; ++j) H(i, j) -= dot * std::conj(v[j]);
        }
    }

    // shifted QR iteration with deflation from the bottom
    int active = n;  // eigenvalues for rows >= active are settled
    int iter_guard = 0;
    const int max_iter = 60 * n + 60;
    double cs[kMaxRank];
    cd ss[kMaxRank];
    while (active > 0) {
        if (active == 1) {
            out[0] = H(0, 0);
            break;
        }
        // deflate if the bottom subdiagonal of the active block is negligible
        bool deflated = false;
        for (int i = active - 1; i >= 1; --i) {
            const double sub = std::abs(H(i, i - 1));
            const double scale = std::abs(H(i - 1, i - 1)) + std::abs(H(i, i));
            if (sub <= 1e-14 * (scale > 0.0 ? scale : 1.0)) {
                H(i, i - 1) = {0.0, 0.0};
                if (i == active - 1) {
                    out[active - 1] = H(active - 1, active - 1);
                    --active;
                    deflated = true;
                    break;
                }
            }
        }
        if (deflated) continue;
        if (++iter_guard > max_iter) return false;

        // Wilkinson shift from the trailing 2x2 of the active block
        const cd a11 = H(active - 2, active - 2), a12 = H(active - 2, active - 1);
        const cd a21 = H(active - 1, active - 2), a22 = H(active - 1, active - 1);
        const cd tr = a11 + a22;
        const cd disc = std::sqrt(tr * tr - 4.0 * (a11 * a22 - a12 * a21));
        const cd e1 = 0.5 * (tr + disc), e2 = 0.5 * (tr - disc);
        cd shift = (std::abs(e1 - a22) < std::abs(e2 - a22)) ? e1 : e2;
        if (iter_guard % 17 == 0) shift += cd{0.0, 1e-8 * (1.0 + std::abs(shift))};  // stagnation kick

        // explicit shifted QR step on the active block: H - sI = QR, H := RQ + sI
        for (int i = 0; i < active; ++i) H(i, i) -= shift;
        for (int k = 0; k + 1 < active; ++k) {
            givens(H(k, k), H(k + 1, k), cs[k], ss[k]);
            for (int j = k; j < active; ++j) {
                const cd t1 = H(k, j), t2 = H(k + 1, j);
                H(k, j) = cs[k] * t1 + ss[k] * t2;
                H(k + 1, j) = -std::conj(ss[k]) * t1 + cs[k] * t2;
            }
        }
        for (int k = 0; k + 1 < active; ++k) {
            for (int i = 0; i <= std::min(k + 1, active - 1); ++i) {
                const cd t1 = H(i, k), t2 = H(i, k + 1);
                H(i, k) = cs[k] * t1 + std::conj(ss[k]) * t2;
                H(i, k + 1) = -ss[k] * t1 + cs[k] * t2;
            }
        }
        for (int i = 0; i < active; ++i) H(i, i) += shift;
    }
    return true;
}

void haar_special_unitary_angles(int n, RngStream& rng, double* out_angles) {
    if (n < 2 || n > kMaxRank)
        throw std::invalid_argument("haar_special_unitary_angles: rank out of range");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (int attempt = 0; attempt < 64; ++attempt) {
        CMatrix m;
        m.n = n;
        ginibre_fill(m, rng);
        qr_haar_unitary(m);

        const cd det = determinant(m);
        if (std::abs(det) < 0.5) continue;  // degenerate draw, resample
        // uniformly random n-th root of det^{-1}
        const double theta = (-std::arg(det) + two_pi * static_cast<double>(rng.below(n))) / n;
        const cd twist = std::polar(1.0, theta);
        for (int i = 0; i < n * n; ++i) m.a[i] *= twist;

        cd eig[kMaxRank];
        if (!eigenvalues(m, eig)) continue;
        for (int j = 0; j < n; ++j) {
            double a = std::arg(eig[j]);
            if (a < 0.0) a += two_pi;
            if (a >= two_pi) a -= two_pi;
            out_angles[j] = a;
        }
        return;
    }
    throw std::runtime_error("haar_special_unitary_angles: repeated degenerate draws");
}

}  // namespace satstat
