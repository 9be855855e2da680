// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "sawell/eigenfunctions.hpp"
#include "sawell/grid.hpp"
#include "sawell/legendre.hpp"
#include "sawell/spectral.hpp"

namespace sawell::susy {

using eigenfunctions::CanonicalGroundState;
using extensions::ExtensionParams;
using Complex = std::complex<double>;

/// Guard width (in units of 2a) excluded around superpotential poles when
/// building evaluation grids.
inline constexpr double kPoleGuardFraction = 1e-6;

/// theta(x) = s0 x/(2a) + delta for the chain's canonical ground state.
double theta_of(const CanonicalGroundState& g, double x);

/// Superpotential at chain order ell+1 (ell >= 0):
///   W^{(ell+1)}(x) = (ell+1) (s0/2a) tan(s0 x/(2a) + delta).
/// Throws PoleAtNode at zeros of cos(theta).
double superpotential(int ell, const CanonicalGroundState& g, double x);

/// Partner potentials at order ell >= 1 with T = tan^2(theta):
///   which = 1:  (s0/2a)^2 ell (-1 + (ell-1) T)
///   which = 2:  (s0/2a)^2 ell ( 1 + (ell+1) T).
double partner_potential(int ell, int which, const CanonicalGroundState& g, double x);

/// Purely imaginary Legendre argument: z with -i z = tan(theta).
Complex z_map(const CanonicalGroundState& g, double x);

/// Bound state of the order-ell family (unnormalized):
///   which = 2: Q_ell^n(theta), admissible for n >= ell + 1;
///   which = 1: alias of the order-(ell-1), which = 2 family (degree ell-1),
///              admissible for n >= ell. Throws NotNormalizable below the floor.
Complex partner_state(int ell, int which, int n, const CanonicalGroundState& g, double x);

/// L2 norm of the state over the pole-bounded interval (composite Simpson on
/// a guard-banded grid).
double partner_state_norm(int ell, int which, int n, const CanonicalGroundState& g);

/// E = (s0/2a)^2 (n^2 - ell^2) for the order-ell family; admissibility is
/// partner_state's concern.
double partner_energy(int ell, int n, const CanonicalGroundState& g);

struct LadderOperator {
    enum class Direction { Annihilate, Create };
    int order = 1;                  // uses W at this order
    Direction direction = Direction::Annihilate;
    CanonicalGroundState ground;
};

/// (+-d/dx + W) f on the interior of f's grid (4th-order stencil, trims two
/// points per side). Throws GridTooCoarse below the stencil's needs.
GridFunction ladder_apply(const LadderOperator& op, const GridFunction& f);

/// One order of the chain; evaluators are pure functions of (s0, delta, a).
struct SusyLevel {
    int order = 1;
    CanonicalGroundState ground;

    double v1(double x) const { return partner_potential(order, 1, ground, x); }
    double v2(double x) const { return partner_potential(order, 2, ground, x); }
    Complex state(int n, double x) const { return partner_state(order, 2, n, ground, x); }
    double energy(int n) const { return partner_energy(order, n, ground); }
    int lowest_n() const { return order + 1; }
};

struct SusyChain {
    ExtensionParams base;
    CanonicalGroundState ground;
    std::vector<SusyLevel> orders;

    /// Poles of W bracketing the shifted origin (theta = -pi/2 and +pi/2).
    std::pair<double, double> pole_pair() const;
};

/// Builds the chain after checking the gates: no negative level, no
/// zero-energy state, positive levels equally spaced as s_n = (n+1) s0
/// (relative 1e-8), and a phase-aligned nondegenerate ground state. Throws
/// the corresponding typed error otherwise.
SusyChain build_chain(const ExtensionParams& p, int max_order,
                      const spectral::RootFindConfig& cfg = {});

}  // namespace sawell::susy
