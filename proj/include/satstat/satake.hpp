// SPDX-License-Identifier: Apache-2.0
//
// One prime's local data: n unit-modulus values e^{i theta_j} with product 1.
// The last angle is always recomputed from the others, so the determinant
// constraint holds by construction.

#pragma once

#include <array>
#include <complex>
#include <span>

#include "satstat/linalg.hpp"

namespace satstat {

class SatakePoint {
public:
    // first n-1 angles free; the last is -(sum of the others) mod 2*pi
    static SatakePoint constrained(int n, std::span<const double> angles);

    int rank() const { return n_; }
    double angle(int j) const { return angles_[j]; }
    std::span<const double> angles() const { return {angles_.data(), static_cast<std::size_t>(n_)}; }

    std::array<std::complex<double>, kMaxRank> values() const;
    std::complex<double> value(int j) const;

    // |prod_j e^{i theta_j} - 1|; ~1e-15 by construction
    double product_defect() const;

private:
    SatakePoint() = default;
    int n_ = 0;
    std::array<double, kMaxRank> angles_{};
};

}  // namespace satstat
