// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#include "sawell/susy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sawell::susy {

namespace {

constexpr double kPi = std::numbers::pi;

double kappa_of(const CanonicalGroundState& g) { return g.s0 / (2.0 * g.a); }

void require_interior(const CanonicalGroundState& g, double x) {
    const double th = theta_of(g, x);
    if (std::abs(std::cos(th)) < 1e-12)
        throw PoleAtNode("evaluation point coincides with a ground-state node");
}

std::pair<double, double> pole_pair_of(const CanonicalGroundState& g) {
    const double k = kappa_of(g);
    return {(-kPi / 2.0 - g.delta) / k, (kPi / 2.0 - g.delta) / k};
}

}  // namespace

double theta_of(const CanonicalGroundState& g, double x) {
    return kappa_of(g) * x + g.delta;
}

double superpotential(int ell, const CanonicalGroundState& g, double x) {
    if (ell < 0) throw ConfigError("order must be >= 0");
    require_interior(g, x);
    return (ell + 1) * kappa_of(g) * std::tan(theta_of(g, x));
}

double partner_potential(int ell, int which, const CanonicalGroundState& g, double x) {
    if (ell < 1) throw ConfigError("partner order must be >= 1");
    if (which != 1 && which != 2) throw ConfigError("which must be 1 or 2");
    require_interior(g, x);
    const double k2 = kappa_of(g) * kappa_of(g);
    const double t = std::tan(theta_of(g, x));
    const double tt = t * t;
    return which == 1 ? k2 * ell * (-1.0 + (ell - 1) * tt)
                      : k2 * ell * (1.0 + (ell + 1) * tt);
}

Complex z_map(const CanonicalGroundState& g, double x) {
    require_interior(g, x);
    return Complex{0.0, 1.0} * std::tan(theta_of(g, x));
}

Complex partner_state(int ell, int which, int n, const CanonicalGroundState& g, double x) {
    if (ell < 1) throw ConfigError("partner order must be >= 1");
    if (which != 1 && which != 2) throw ConfigError("which must be 1 or 2");
    const int degree = which == 2 ? ell : ell - 1;
    if (!legendre::is_normalizable({degree, n}))
        throw NotNormalizable("state below the admissibility floor n >= degree + 1");
    return legendre::q_trig({degree, n}, {theta_of(g, x)});
}

double partner_state_norm(int ell, int which, int n, const CanonicalGroundState& g) {
    const auto [lo, hi] = pole_pair_of(g);
    const double guard = kPoleGuardFraction * 2.0 * g.a;
    const int m = 4000;   // Simpson panels
    const double a = lo + guard, b = hi - guard;
    const double h = (b - a) / m;
    double acc = 0.0;
    for (int i = 0; i <= m; ++i) {
        const double w = (i == 0 || i == m) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        acc += w * std::norm(partner_state(ell, which, n, g, a + i * h));
    }
    return std::sqrt(acc * h / 3.0);
}

double partner_energy(int ell, int n, const CanonicalGroundState& g) {
    const double k2 = kappa_of(g) * kappa_of(g);
    return k2 * (static_cast<double>(n) * n - static_cast<double>(ell) * ell);
}

GridFunction ladder_apply(const LadderOperator& op, const GridFunction& f) {
    if (f.size() < 9) throw GridTooCoarse("need at least 9 samples for the stencil");
    const double h = f.dx;
    if (!(h > 0.0)) throw GridTooCoarse("grid spacing must be positive");
    const double sgn = op.direction == LadderOperator::Direction::Annihilate ? 1.0 : -1.0;

    GridFunction out;
    out.x0 = f.x(2);
    out.dx = h;
    out.values.resize(f.size() - 4);
    for (std::size_t i = 2; i + 2 < f.size(); ++i) {
        const Complex d = (f.values[i - 2] - 8.0 * f.values[i - 1]
                           + 8.0 * f.values[i + 1] - f.values[i + 2]) / (12.0 * h);
        const double w = superpotential(op.order - 1, op.ground, f.x(i));
        out.values[i - 2] = sgn * d + w * f.values[i];
    }
    return out;
}

std::pair<double, double> SusyChain::pole_pair() const {
    return pole_pair_of(ground);
}

SusyChain build_chain(const ExtensionParams& p, int max_order,
                      const spectral::RootFindConfig& cfg) {
    if (max_order < 1) throw ConfigError("max_order must be >= 1");

    if (!spectral::negative_levels(p, cfg).empty())
        throw NegativeGroundState("extension has a negative level");
    if (spectral::zero_energy_exists(p).exists)
        throw ZeroEnergyGroundState("extension admits a zero-energy state");

    const auto levels = spectral::positive_levels(p, cfg);
    if (levels.empty()) throw Error("no positive levels found below s_max");
    const double s0 = levels.front().s;
    if (levels.front().multiplicity != 1)
        throw DegenerateGroundState("ground level is doubly degenerate");
    const std::size_t upto = std::min<std::size_t>(levels.size(), 8);
    for (std::size_t i = 0; i < upto; ++i) {
        const double expected = static_cast<double>(i + 1) * s0;
        if (std::abs(levels[i].s - expected) > 1e-8 * expected || levels[i].multiplicity != 1)
            throw NonUniformSpectrum("positive levels are not s_n = (n+1) s_0");
    }

    const auto coeff = eigenfunctions::coefficients_ab(s0, p);
    const auto ground = eigenfunctions::phase_delta(coeff, p.a);   // may throw PhaseMismatch

    SusyChain chain{p, ground, {}};
    chain.orders.reserve(static_cast<std::size_t>(max_order));
    for (int ell = 1; ell <= max_order; ++ell) chain.orders.push_back({ell, ground});
    return chain;
}

}  // namespace sawell::susy
