// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#include "sawell/eigenfunctions.hpp"

#include <cmath>
#include <numbers>

#include "sawell/spectral.hpp"

namespace sawell::eigenfunctions {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

// ||A cos + B sin||^2 on [-a, a] by the exact antiderivative; the cross term
// integrates to zero on the symmetric interval.
double norm_sq(const Coefficients& c, double a) {
    const double sinc = std::abs(c.s) > 1e-300 ? std::sin(c.s) / c.s : 1.0;
    return a * (std::norm(c.A) * (1.0 + sinc) + std::norm(c.B) * (1.0 - sinc));
}

void require_root(double s, const ExtensionParams& p) {
    const double f = spectral::reduced_det(s, p);
    if (std::abs(f) > 1e-8 * (1.0 + s * s))
        throw NotASpectralRoot("s does not satisfy the spectral condition");
}

}  // namespace

Complex Eigenfunction::operator()(double x) const {
    const double u = c.s * x / (2.0 * a);
    return scale * (c.A * std::cos(u) + c.B * std::sin(u));
}

double CanonicalGroundState::amplitude() const {
    // || cos(s0 x/2a + delta) ||^2 = a (1 + cos(2 delta) sin(s0)/s0)
    const double sinc = std::abs(s0) > 1e-300 ? std::sin(s0) / s0 : 1.0;
    return 1.0 / std::sqrt(a * (1.0 + std::cos(2.0 * delta) * sinc));
}

Complex CanonicalGroundState::operator()(double x) const {
    return amplitude() * std::exp(kI * phase) * std::cos(s0 * x / (2.0 * a) + delta);
}

Coefficients coefficients_ab(double s, const ExtensionParams& p) {
    require_root(s, p);
    const auto [m0, m1, m2, m3] = p.m;
    const Complex e = std::exp(kI * p.psi);
    const double c = std::cos(s / 2.0), sn = std::sin(s / 2.0);

    // first-row null vector (N12, -N11) of the AB-basis boundary system
    const Complex A = (kI + e * Complex{m1 + m3, m0 - m2}) * sn
                    + s * (1.0 + e * Complex{-m0 + m2, m1 + m3}) * c;
    const Complex B = s * (-1.0 + e * Complex{m0 + m2, m1 - m3}) * sn
                    + (kI + e * Complex{-m1 + m3, m0 + m2}) * c;

    const Eigen::Matrix2cd n = extensions::wave_matrix_ab(Complex{s, 0.0}, p);
    const double nscale = n.norm();
    Eigen::Vector2cd v;
    v << A, B;
    if (v.norm() > 1e-12 * std::max(1.0, nscale) &&
        (n * v).norm() <= 1e-8 * nscale * v.norm())
        return {A, B, s};

    // degenerate row: numerical null vector
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(n, Eigen::ComputeFullV);
    const Eigen::Vector2cd w = svd.matrixV().col(1);
    return {w(0), w(1), s};
}

std::array<Coefficients, 2> coefficients_degenerate(double s, const ExtensionParams& p) {
    require_root(s, p);
    const Eigen::Matrix2cd n = extensions::wave_matrix_ab(Complex{s, 0.0}, p);
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(n, Eigen::ComputeFullV);
    const Eigen::Vector2cd v0 = svd.matrixV().col(1);
    const Eigen::Vector2cd v1 = svd.matrixV().col(0);
    return {Coefficients{v0(0), v0(1), s}, Coefficients{v1(0), v1(1), s}};
}

Coefficients coefficients_sin_zero(int q, SinZeroParity parity, double b0, double b1) {
    const Complex ep = std::exp(kI * b1), em = std::exp(-kI * b1);
    if (parity == SinZeroParity::Even) {
        if (q < 1) throw ConfigError("even family starts at q = 1");
        const double s = 2.0 * q * kPi;
        return {2.0 * kPi * q * (1.0 + ep * std::sin(b0) - std::cos(b0)),
                kI * (1.0 + em * std::sin(b0) + std::cos(b0)), s};
    }
    if (q < 0) throw ConfigError("odd family starts at q = 0");
    const double s = (2.0 * q + 1.0) * kPi;
    return {kI * (1.0 - ep * std::sin(b0) + std::cos(b0)),
            kPi * (2.0 * q + 1.0) * (-1.0 + em * std::sin(b0) + std::cos(b0)), s};
}

Eigenfunction normalize(const Coefficients& c, double a) {
    const double n2 = norm_sq(c, a);
    if (!(n2 > 0.0) || (std::abs(c.A) == 0.0 && std::abs(c.B) == 0.0))
        throw ZeroFunction("cannot normalize the zero function");
    return {c, a, 1.0 / std::sqrt(n2)};
}

CanonicalGroundState phase_delta(const Coefficients& c, double a) {
    const double absA = std::abs(c.A), absB = std::abs(c.B);
    const double mag = std::max(absA, absB);
    if (mag == 0.0) throw ZeroFunction("zero coefficient pair");

    const bool haveA = absA > 1e-12 * mag, haveB = absB > 1e-12 * mag;
    if (haveA && haveB) {
        // common-phase requirement: arg A = arg B (mod pi)
        const double folded = std::remainder(std::arg(c.A * std::conj(c.B)), kPi);
        if (std::abs(folded) > 1e-8)
            throw PhaseMismatch("coefficient phases differ by other than 0 or pi");
    }
    double phase = haveA ? std::arg(c.A) : std::arg(c.B);

    double alpha = std::real(c.A * std::exp(-kI * phase));
    double beta = std::real(c.B * std::exp(-kI * phase));
    if (alpha < 0.0) {   // keep cos(delta) >= 0
        alpha = -alpha;
        beta = -beta;
        phase = std::remainder(phase + kPi, 2.0 * kPi);
    }
    const double r = std::hypot(alpha, beta);
    // (alpha, beta)/r = (cos delta, -sin delta)
    const double delta = std::atan2(-beta / r, alpha / r);
    return {phase, delta, c.s, a};
}

}  // namespace sawell::eigenfunctions
