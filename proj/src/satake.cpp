// SPDX-License-Identifier: Apache-2.0

#include "satstat/satake.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace satstat {

SatakePoint SatakePoint::constrained(int n, std::span<const double> angles) {
    if (n < 2 || n > kMaxRank)
        throw std::invalid_argument("SatakePoint: rank out of range");
    if (angles.size() != static_cast<std::size_t>(n) &&
        angles.size() != static_cast<std::size_t>(n - 1))
        throw std::invalid_argument("SatakePoint: need n or n-1 angles");

    constexpr double two_pi = 2.0 * std::numbers::pi;
    SatakePoint p;
    p.n_ = n;
    double sum = 0.0;
    for (int j = 0; j < n - 1; ++j) {
        double a = std::fmod(angles[j], two_pi);
        if (a < 0.0) a += two_pi;
        p.angles_[j] = a;
        sum += a;
    }
    double last = std::fmod(-sum, two_pi);
    if (last < 0.0) last += two_pi;
    p.angles_[n - 1] = last;
    return p;
}

std::array<std::complex<double>, kMaxRank> SatakePoint::values() const {
    std::array<std::complex<double>, kMaxRank> v{};
    for (int j = 0; j < n_; ++j) v[j] = std::polar(1.0, angles_[j]);
    return v;
}

std::complex<double> SatakePoint::value(int j) const { return std::polar(1.0, angles_[j]); }

double SatakePoint::product_defect() const {
    std::complex<double> prod{1.0, 0.0};
    for (int j = 0; j < n_; ++j) prod *= value(j);
    return std::abs(prod - std::complex<double>{1.0, 0.0});
}

}  // namespace satstat
