// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>

#include "sawell/errors.hpp"

namespace sawell::legendre {

using Complex = std::complex<double>;

/// Degree ell and order n of an associated Legendre function.
struct LegendreIndex {
    int ell = 0;
    int n = 0;
};

/// Angle theta = s0 y/(2a); the Legendre argument is z = -i tan(theta), so
/// |theta| < pi/2 is the interior of the domain.
struct TrigArgument {
    double theta = 0.0;
};

/// Second-kind function Q_ell^n(-i tan theta) as the finite trigonometric sum
///   (1/2)(-1)^{n-ell+1} e^{-i n theta} G(n-ell) G(ell+n+1)
///     * sum_{j=ell+1}^{n} (-1)^j G(j) 2^j e^{i j theta} cos^j(theta)
///                         / (G(j-ell) G(j+ell+1) G(n-j+1)),
/// with G = Gamma evaluated in log space and 1/G(nonpositive integer) = 0.
/// Equals the standard function times the unit phase (-i)^n; only positive
/// cosine powers appear, so the value extends continuously to theta = +-pi/2.
/// Throws NotNormalizable for n <= ell (no square-integrable expansion there).
Complex q_trig(LegendreIndex idx, TrigArgument t);

/// First-kind function P_ell^n(-i tan theta) as the finite sum
///   sum_{j=0}^{ell} (-1)^{j+ell} 2^{j-ell} G(ell+1) (2 ell - j)!
///     / (j! ell! G(ell+1-j) G(ell-n+1-j))
///     * e^{-i theta (j-ell+n)} cos^{j-ell}(theta),
/// same conventions as q_trig. For n > ell the direct sum degenerates to zero
/// (the function itself vanishes identically), so the order is reflected to
/// -n and the genuine second solution P_ell^{-n} is evaluated instead; its
/// leading cos^{-ell} growth is what the non-integrability diagnostics probe.
Complex p_trig(LegendreIndex idx, TrigArgument t);

/// True iff the Q-family member is square integrable on the interval:
/// n >= ell + 1. The P-family is never admissible as a bound state.
bool is_normalizable(LegendreIndex idx);

}  // namespace sawell::legendre
