// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#include "sawell/extensions.hpp"

#include <cmath>
#include <numbers>

#include "sawell/spectral.hpp"

namespace sawell::extensions {

namespace {
constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};
}  // namespace

double ExtensionParams::norm_defect() const {
    return std::abs(m[0] * m[0] + m[1] * m[1] + m[2] * m[2] + m[3] * m[3] - 1.0);
}

ExtensionParams ExtensionParams::checked(double psi, std::array<double, 4> m, double a) {
    // fold psi into [0, pi] via the double cover (psi, m) ~ (psi - pi, -m)
    while (psi < 0.0) psi += 2.0 * kPi;
    while (psi >= 2.0 * kPi) psi -= 2.0 * kPi;
    if (psi > kPi) {
        psi -= kPi;
        for (auto& mi : m) mi = -mi;
    }
    ExtensionParams p{psi, m, a};
    if (!(a > 0.0) || !std::isfinite(a)) throw InvalidParams("half-width a must be positive and finite");
    if (p.norm_defect() > kSphereTol) throw InvalidParams("m is not on the unit sphere");
    for (double mi : m)
        if (!std::isfinite(mi)) throw InvalidParams("non-finite m component");
    if (!std::isfinite(psi)) throw InvalidParams("non-finite psi");
    return p;
}

ExtensionParams textbook(double a) {
    return ExtensionParams{0.0, {1.0, 0.0, 0.0, 0.0}, a};
}

Eigen::Matrix2cd unitary_from_params(const ExtensionParams& p) {
    if (p.norm_defect() > kSphereTol) throw InvalidParams("m is not on the unit sphere");
    const auto [m0, m1, m2, m3] = p.m;
    Eigen::Matrix2cd u;
    u << Complex{m0, -m3}, Complex{-m2, -m1},
         Complex{m2, -m1}, Complex{m0, m3};
    return std::exp(kI * p.psi) * u;
}

ExtensionParams from_theta_angles(double t0, double t1, double t2, double psi, double a) {
    return ExtensionParams::checked(
        psi,
        {std::cos(t1) * std::cos(t0), std::cos(t1) * std::sin(t0),
         std::sin(t1) * std::cos(t2), std::sin(t1) * std::sin(t2)},
        a);
}

ExtensionParams from_beta_angles(double b0, double b1, double psi, int n, double a) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return ExtensionParams::checked(
        psi,
        {std::cos(psi) * std::cos(b0), sign * std::sin(psi),
         std::cos(psi) * std::sin(b0) * std::cos(b1),
         std::cos(psi) * std::sin(b0) * std::sin(b1)},
        a);
}

ExtensionParams from_omega_angles(double w0, double w1, double w2, double psi, double a) {
    return ExtensionParams::checked(
        psi,
        {std::sin(w1) * std::cos(w2), std::cos(w1) * std::sin(w0),
         std::cos(w1) * std::cos(w0), std::sin(w1) * std::sin(w2)},
        a);
}

namespace {

// Wall data of A cos(sx/2a) + B sin(sx/2a) as 2x2 systems on (A, B):
//   L (A,B)^T = (2a phi'(-a) - i phi(-a), 2a phi'(a) + i phi(a))^T
//   M (A,B)^T = (2a phi'(-a) + i phi(-a), 2a phi'(a) - i phi(a))^T
Eigen::Matrix2cd l_matrix(Complex s) {
    const Complex c = std::cos(s / 2.0), sn = std::sin(s / 2.0);
    Eigen::Matrix2cd l;
    l << s * sn - kI * c, s * c + kI * sn,
        -s * sn + kI * c, s * c + kI * sn;
    return l;
}

Eigen::Matrix2cd m_matrix(Complex s) {
    const Complex c = std::cos(s / 2.0), sn = std::sin(s / 2.0);
    Eigen::Matrix2cd m;
    m << s * sn + kI * c, s * c - kI * sn,
        -s * sn - kI * c, s * c - kI * sn;
    return m;
}

}  // namespace

Eigen::Matrix2cd wave_matrix_ab(Complex s, const ExtensionParams& p) {
    return l_matrix(s) - unitary_from_params(p) * m_matrix(s);
}

Eigen::Matrix2cd wave_matrix_pw(Complex s, const ExtensionParams& p) {
    // column map (A, B) = (alpha + beta, i(alpha - beta))
    Eigen::Matrix2cd t;
    t << Complex{1.0, 0.0}, Complex{1.0, 0.0},
         kI, -kI;
    return wave_matrix_ab(s, p) * t;
}

double boundary_residual(const BoundaryMatrix& u, const BoundaryTrace& t, double a) {
    const Complex twoa{2.0 * a, 0.0};
    Eigen::Vector2cd lhs, rhs;
    lhs << twoa * t.dphi_minus - kI * t.phi_minus,
           twoa * t.dphi_plus + kI * t.phi_plus;
    rhs << twoa * t.dphi_minus + kI * t.phi_minus,
           twoa * t.dphi_plus - kI * t.phi_plus;
    return (lhs - u.u * rhs).norm();
}

Complex boundary_form(const BoundaryTrace& t) {
    return t.dphi_plus * std::conj(t.phi_plus) - t.phi_plus * std::conj(t.dphi_plus)
         - t.dphi_minus * std::conj(t.phi_minus) + t.phi_minus * std::conj(t.dphi_minus);
}

ExtensionClass classify(const ExtensionParams& p) {
    ExtensionClass c;
    c.time_reversal = std::abs(p.m[2]) <= kClassifyTol;
    c.parity_mechanism = std::abs(p.m[3]) <= kClassifyTol ? ParityMechanism::M3Zero
                                                          : ParityMechanism::Unknown;
    return c;
}

ExtensionClass classify(const ExtensionParams& p, std::span<const double> roots) {
    ExtensionClass c = classify(p);
    if (c.parity_mechanism != ParityMechanism::Unknown || roots.empty()) return c;

    const auto [m0, m1, m2, m3] = p.m;
    const double sp = std::sin(p.psi), cp = std::cos(p.psi);

    bool all_sin_zero = true;
    for (double s : roots)
        if (std::abs(std::sin(s)) > kClassifyTol * (1.0 + s)) all_sin_zero = false;

    // Parity branch form: s sin s = (m2 + cos s cos psi)/(m3 - sin psi)
    //                               +- sqrt((.)^2 + (m3+sin psi)/(m3-sin psi) sin^2 s).
    // A root with sin s = 0 matches one sign vacuously, so consistency is
    // claimed only when some root checks it non-vacuously.
    bool branch_ok = std::abs(m3 - sp) > 1e-12;
    bool branch_nonvacuous = false;
    if (branch_ok) {
        for (double s : roots) {
            const double sins = std::sin(s);
            const double lhs = s * sins;
            const double num = (m2 + std::cos(s) * cp) / (m3 - sp);
            const double disc = num * num + (m3 + sp) / (m3 - sp) * sins * sins;
            if (disc < 0.0) { branch_ok = false; break; }
            const double tolh = 1e-8 * (1.0 + std::abs(lhs) + std::abs(num) + std::sqrt(disc));
            const bool match = std::abs(lhs - (num + std::sqrt(disc))) <= tolh ||
                               std::abs(lhs - (num - std::sqrt(disc))) <= tolh;
            if (!match) { branch_ok = false; break; }
            if (std::abs(sins) > kClassifyTol * (1.0 + s)) branch_nonvacuous = true;
        }
    }

    if (branch_ok && branch_nonvacuous)
        c.parity_mechanism = ParityMechanism::ParityBranch;
    else if (all_sin_zero)
        c.parity_mechanism = ParityMechanism::SinZero;
    else
        c.parity_mechanism = ParityMechanism::None;
    return c;
}

}  // namespace sawell::extensions
