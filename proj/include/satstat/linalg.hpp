// SPDX-License-Identifier: Apache-2.0
//
// Dense complex linear algebra for small matrices (rank <= 8): Haar-unitary
// generation via phase-fixed QR of a Ginibre matrix, determinants, and
// eigenvalues via Hessenberg reduction plus shifted QR iteration.

#pragma once

#include <complex>
#include <cstdint>

#include "satstat/rng.hpp"

namespace satstat {

inline constexpr int kMaxRank = 8;

struct CMatrix {
    int n = 0;
    std::complex<double> a[kMaxRank * kMaxRank];

    std::complex<double>& at(int i, int j) { return a[i * n + j]; }
    const std::complex<double>& at(int i, int j) const { return a[i * n + j]; }
};

// Fills with independent standard complex Gaussians.
void ginibre_fill(CMatrix& m, RngStream& rng);

// In-place QR orthonormalization with the diagonal of the triangular factor
// made positive real; the input distribution Ginibre makes the output Haar on
// the unitary group.
void qr_haar_unitary(CMatrix& m);

std::complex<double> determinant(const CMatrix& m);

// Eigenvalues of a general small complex matrix. Returns false if the QR
// iteration failed to deflate (not observed for normal matrices; callers
// resample).
bool eigenvalues(const CMatrix& m, std::complex<double>* out);

// Haar draw from the special-unitary group: Ginibre -> phase-fixed QR ->
// multiplication by a uniformly random n-th root of the inverse determinant.
// Out: eigenvalue angles in solver order, each in [0, 2*pi).
void haar_special_unitary_angles(int n, RngStream& rng, double* out_angles);

}  // namespace satstat
