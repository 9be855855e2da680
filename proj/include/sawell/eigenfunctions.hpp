// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>

#include "sawell/extensions.hpp"

namespace sawell::eigenfunctions {

using extensions::ExtensionParams;
using Complex = std::complex<double>;

/// Coefficient pair of phi(x) = A cos(sx/2a) + B sin(sx/2a) at a root s.
struct Coefficients {
    Complex A, B;
    double s = 0.0;
};

/// Normalized eigenfunction: scale * (A cos + B sin) with unit L2 norm.
struct Eigenfunction {
    Coefficients c;
    double a = 0.5;
    double scale = 1.0;

    Complex operator()(double x) const;
};

/// Ground state in canonical form  e^{i phase} cos(s0 x/(2a) + delta),
/// evaluated with the analytic normalization on [-a, a].
struct CanonicalGroundState {
    double phase = 0.0;
    double delta = 0.0;
    double s0 = 0.0;
    double a = 0.5;

    double amplitude() const;              // normalizing prefactor
    Complex operator()(double x) const;    // normalized value
};

/// Null vector of the boundary system at a root s: closed row form
///   A = [i + e^{i psi}(i m0 + m1 - i m2 + m3)] sin(s/2)
///       + s [1 + e^{i psi}(-m0 + i m1 + m2 + i m3)] cos(s/2),
///   B = s [-1 + e^{i psi}(m0 + i m1 + m2 - i m3)] sin(s/2)
///       + [i + e^{i psi}(i m0 - m1 + i m2 + m3)] cos(s/2),
/// with an SVD-null-vector fallback when the row degenerates. Throws
/// NotASpectralRoot when |reduced_det(s)| exceeds tolerance.
Coefficients coefficients_ab(double s, const ExtensionParams& p);

/// Both orthonormal null directions at a doubly degenerate root.
std::array<Coefficients, 2> coefficients_degenerate(double s, const ExtensionParams& p);

enum class SinZeroParity { Even, Odd };

/// Coefficients of the sin s = 0 family in the beta chart:
///   s = 2 q pi:      A = 2 pi q (1 + e^{i b1} sin b0 - cos b0),
///                    B = i (1 + e^{-i b1} sin b0 + cos b0),        q >= 1
///   s = (2q+1) pi:   A = i (1 - e^{i b1} sin b0 + cos b0),
///                    B = pi (2q+1) (-1 + e^{-i b1} sin b0 + cos b0), q >= 0.
Coefficients coefficients_sin_zero(int q, SinZeroParity parity, double beta0, double beta1);

/// Rescales (A, B) so the L2 norm on [-a, a] is 1, by the exact antiderivative
///   ||phi||^2 = a [ |A|^2 (1 + sin s / s) + |B|^2 (1 - sin s / s) ].
/// Throws ZeroFunction for (A, B) = (0, 0).
Eigenfunction normalize(const Coefficients& c, double a);

/// Phase alignment: requires arg(A) = arg(B) mod pi (tolerance 1e-8), then
/// returns the canonical form with (|A|,|B|)-direction (cos delta, -sin delta)
/// and delta in [-pi/2, pi/2]. Throws PhaseMismatch otherwise.
CanonicalGroundState phase_delta(const Coefficients& c, double a);

}  // namespace sawell::eigenfunctions
