// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <optional>
#include <span>

#include <Eigen/Dense>

#include "sawell/errors.hpp"

namespace sawell::extensions {

using Complex = std::complex<double>;

inline constexpr double kSphereTol = 1e-12;     // unit-sphere and unitarity checks
inline constexpr double kClassifyTol = 1e-9;    // m2/m3 vanishing in classify

/// One self-adjoint extension of -d^2/dx^2 on [-a, a], labeled by the phase
/// psi in [0, pi] and a unit 4-vector m. The half-width a defaults to 1/2 so
/// that 2a = 1 and E = s^2 numerically.
struct ExtensionParams {
    double psi = 0.0;
    std::array<double, 4> m{1.0, 0.0, 0.0, 0.0};
    double a = 0.5;

    /// Validating constructor; folds psi into [0, pi] using the chart's
    /// double cover (psi, m) ~ (psi - pi, -m).
    static ExtensionParams checked(double psi, std::array<double, 4> m, double a = 0.5);

    double norm_defect() const;   // |m.m - 1|
};

/// The textbook (Dirichlet) extension, U = I.
ExtensionParams textbook(double a = 0.5);

/// 2x2 unitary boundary matrix.
struct BoundaryMatrix {
    Eigen::Matrix2cd u;
};

/// Wavefunction and derivative values at the two walls.
struct BoundaryTrace {
    Complex phi_minus, phi_plus;     // phi(-a), phi(a)
    Complex dphi_minus, dphi_plus;   // phi'(-a), phi'(a)
};

enum class ParityMechanism {
    M3Zero,         // m3 = 0
    SinZero,        // every computed root has sin s = 0
    ParityBranch,   // the parity branch equation holds at every computed root
    None,
    Unknown,        // spectrum-dependent mechanisms need roots to decide
};

struct ExtensionClass {
    bool time_reversal = false;
    ParityMechanism parity_mechanism = ParityMechanism::Unknown;

    /// nullopt while the mechanism is Unknown.
    std::optional<bool> parity() const {
        if (parity_mechanism == ParityMechanism::Unknown) return std::nullopt;
        return parity_mechanism != ParityMechanism::None;
    }
};

/// U = e^{i psi} [[m0 - i m3, -m2 - i m1], [m2 - i m1, m0 + i m3]].
Eigen::Matrix2cd unitary_from_params(const ExtensionParams& p);

/// Angle charts for the unit sphere of m-vectors. All three land exactly on
/// the sphere by construction.
ExtensionParams from_theta_angles(double theta0, double theta1, double theta2,
                                  double psi, double a = 0.5);
/// n is the level index whose parity enters m1.
ExtensionParams from_beta_angles(double beta0, double beta1, double psi, int n,
                                 double a = 0.5);
ExtensionParams from_omega_angles(double omega0, double omega1, double omega2,
                                  double psi, double a = 0.5);

/// Boundary system for phi = A cos(sx/2a) + B sin(sx/2a): the 2x2 matrix
/// acting on (A, B) whose null space at a spectral root holds the coefficient
/// vector. Defined for complex s so the hyperbolic continuation can be checked.
Eigen::Matrix2cd wave_matrix_ab(Complex s, const ExtensionParams& p);

/// Same system expressed on the plane-wave pair (alpha, beta) of
/// phi = alpha e^{isx/2a} + beta e^{-isx/2a}; columns related to the AB form
/// by (A, B) = (alpha + beta, i(alpha - beta)). The closed-form trace and
/// determinant identities hold in this basis.
Eigen::Matrix2cd wave_matrix_pw(Complex s, const ExtensionParams& p);

/// Euclidean norm of the defect of the wall condition
///   (2a phi'(-a) - i phi(-a), 2a phi'(a) + i phi(a))^T
///     - U (2a phi'(-a) + i phi(-a), 2a phi'(a) - i phi(a))^T.
double boundary_residual(const BoundaryMatrix& u, const BoundaryTrace& t, double a);

/// Sesquilinear boundary form
///   B(phi,phi) = phi'(a)phi*(a) - phi(a)phi'*(a) - phi'(-a)phi*(-a) + phi(-a)phi'*(-a);
/// vanishes whenever boundary_residual vanishes.
Complex boundary_form(const BoundaryTrace& t);

/// Spectrum-free classification: time reversal is decided by m2, parity only
/// when m3 = 0; otherwise the mechanism is Unknown.
ExtensionClass classify(const ExtensionParams& p);

/// Classification given the positive s-roots of the extension.
ExtensionClass classify(const ExtensionParams& p, std::span<const double> roots);

}  // namespace sawell::extensions
