// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "sawell/extensions.hpp"
#include "sawell/scan.hpp"

namespace sawell::spectral {

using extensions::ExtensionParams;
using Complex = std::complex<double>;

enum class LevelKind { Positive, Zero, Negative };

/// Which equation produced a level. Determinant is the generic route; the
/// others are the specialized families that must agree with it.
enum class Branch {
    Determinant,
    QuadraticPlus,    // s sin s = quadratic branch, plus sign
    QuadraticMinus,
    ParityEven,       // s tan(s/2) = -cot(phi2)
    ParityOdd,        // s cot(s/2) =  cot(phi1)
    SinZero,          // s = n pi
    OmegaAxis,        // sin(omega1) = 0 family
    OmegaAligned,     // sin(omega2 - psi) = 0 family
};

/// One spectral point. For Positive levels `s` holds the trigonometric root,
/// for Negative levels it holds the hyperbolic root r > 0, for Zero it is 0.
struct EnergyLevel {
    LevelKind kind = LevelKind::Positive;
    double s = 0.0;
    double E = 0.0;
    Branch branch = Branch::Determinant;
    int multiplicity = 1;
};

struct RootFindConfig {
    double s_max = 20.0 * std::numbers::pi;
    double grid_step = 0.01;
    double tol = 1e-12;
    double r_max = 50.0;
    scan::ExecPolicy policy = scan::ExecPolicy::Serial;

    void validate() const;   // throws ConfigError
};

/// F(s): the real bracket of the boundary determinant,
///   F(s) = (m0+cos psi) sin s + 2s (m1 - cos s sin psi) - s^2 (m0-cos psi) sin s.
/// det(wave_matrix_pw(s)) = -4i e^{i psi} F(s), so zeros of F are exactly the
/// spectral condition.
double reduced_det(double s, const ExtensionParams& p);
Complex reduced_det(Complex s, const ExtensionParams& p);

/// Hyperbolic continuation G(r) = i F(-i r):
///   G(r) = (m0+cos psi) sinh r + 2r (m1 - cosh r sin psi) + r^2 (m0-cos psi) sinh r.
/// Zeros r > 0 are the negative levels E = -r^2/(2a)^2.
double hyperbolic_det(double r, const ExtensionParams& p);

/// Closed-form trace of the plane-wave boundary matrix, up to the fixed
/// factor 2 recorded against the matrix trace:
///   trace_n(s) = e^{-i(s - 2 psi)/2} (-m3 (s+1) + i m2 e^{is} (s-1)),
/// and Tr(wave_matrix_pw(s)) = 2 trace_n(s). At a spectral root the matrix
/// eigenvalues are {0, Tr}.
Complex trace_n(double s, const ExtensionParams& p);

enum class Sign { Plus, Minus };

/// Right-hand side of the branch form of the spectral condition,
///   s sin s = [m1 - cos s sin psi]/(m0 - cos psi)
///             +- sqrt( (.)^2 + (m0 + cos psi)/(m0 - cos psi) sin^2 s ).
/// NaN when the discriminant is negative. Throws DegenerateDenominator when
/// m0 ~ cos psi; callers then fall back to reduced_det root-finding.
double quadratic_rhs(double s, const ExtensionParams& p, Sign sign);

/// Branch label satisfied by a determinant root, if any (labeling aid only).
std::optional<Sign> quadratic_branch_of(double s, const ExtensionParams& p,
                                        double tol = 1e-8);

/// All roots of F on (0, s_max]: bracketing at grid_step, bisection to tol,
/// tangential (non-crossing) roots reported with multiplicity 2. The
/// universal root s = 0 is excluded; zero energy is zero_energy_exists's job.
std::vector<EnergyLevel> positive_levels(const ExtensionParams& p,
                                         const RootFindConfig& cfg = {});

/// Roots r > 0 of G on (0, r_max]; at most two counting multiplicity, more
/// signals a numerics bug (TooManyNegativeLevels). The continuation G is
/// self-checked once against det(wave_matrix_pw) at complex s.
std::vector<EnergyLevel> negative_levels(const ExtensionParams& p,
                                         const RootFindConfig& cfg = {});

struct ZeroEnergyResult {
    bool exists = false;
    int dimension = 0;    // of the linear-ansatz solution space (0, 1 or 2)
    double sigma_min = 0.0;
};

/// Tests whether phi(x) = c1 + c2 x admits a nonzero solution of the wall
/// condition (2x2 determinant test at tolerance 1e-10).
ZeroEnergyResult zero_energy_exists(const ExtensionParams& p);

/// m2 = m3 = 0 family in the angles phi1 = (psi - theta0)/2,
/// phi2 = (psi + theta0)/2: merged roots of the even branch
/// s tan(s/2) = -cot(phi2) and odd branch s cot(s/2) = cot(phi1), each level
/// cross-checked against reduced_det on the equivalent parameters.
std::vector<EnergyLevel> levels_parity_time(double phi1, double phi2,
                                            const RootFindConfig& cfg = {},
                                            double a = 0.5);

/// The sin s = 0 family: s = n pi for n = 1..count.
std::vector<EnergyLevel> levels_sin_zero(int count, double a = 0.5);

enum class OmegaBranch {
    Axis,      // requires sin(omega1) = 0;   candidates s = n pi +- (omega0 + psi)
    Aligned,   // requires sin(omega2-psi)=0; candidates cos s = +- cos w1 cos(w0+psi)
};

/// Enumerates the closed-form candidate set of the requested family up to
/// s_max and keeps those that pass validation against reduced_det. Throws
/// PreconditionViolated when the family's trigonometric condition fails.
std::vector<EnergyLevel> levels_omega(double omega0, double omega1, double omega2,
                                      double psi, OmegaBranch branch,
                                      const RootFindConfig& cfg = {}, double a = 0.5);

/// Diagnostic for the remaining (discarded) omega case cos(w0+w2) = 0: the
/// two candidate values of cos s, which may exceed 1 in modulus. No level
/// generation is attempted from these.
std::pair<double, double> omega_offaxis_cos_candidates(double omega0, double omega1,
                                                       double omega2, double psi);

/// Consistency self-test of the hyperbolic continuation: compares G(r)
/// against det(wave_matrix_pw(-i r)) at random points; throws on mismatch.
/// Runs lazily once before the first negative_levels call.
void verify_hyperbolic_continuation();

/// Merged positive/zero/negative spectrum, sorted ascending in E.
std::vector<EnergyLevel> full_spectrum(const ExtensionParams& p,
                                       const RootFindConfig& cfg = {});

}  // namespace sawell::spectral
