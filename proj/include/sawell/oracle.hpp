// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "sawell/extensions.hpp"
#include "sawell/grid.hpp"
#include "sawell/susy.hpp"

namespace sawell::oracle {

using extensions::ExtensionParams;

/// Uniform grid on [-a, a] with n_points samples; `order` is the stencil
/// accuracy used by the residual evaluator (2 or 4).
struct Discretization {
    int n_points = 1001;
    double a = 0.5;
    int order = 2;
};

struct OracleSpectrum {
    std::vector<double> eigenvalues;             // ascending
    double h = 0.0;
    std::optional<std::vector<double>> richardson;  // extrapolated from h and h/2
};

/// Lowest k eigenvalues of -d^2/dx^2 with the extension's wall conditions,
/// by ghost-point elimination of the constraint
///   (I - U)(2a phi'(-a), 2a phi'(a))^T = i (I + U)(phi(-a), -phi(a))^T
/// and dense Hermitian diagonalization (half-weight wall rows make the
/// eliminated matrix exactly Hermitian). U ~ I is dispatched to the Dirichlet
/// specialization; any other near-unit eigenvalue of U is SingularConstraint.
OracleSpectrum fd_spectrum(const ExtensionParams& p, const Discretization& d, int k);

/// Same, run on n_points and 2*n_points-1 with Richardson extrapolation.
OracleSpectrum fd_spectrum_richardson(const ExtensionParams& p,
                                      const Discretization& d, int k);

/// Lowest k eigenvalues of -d^2/dx^2 + V^{(ell,2)} with Dirichlet walls at
/// the pole pair of the chain's superpotential. PoleInsideDomain when poles
/// beyond the bracketing pair intrude on the requested interval.
OracleSpectrum fd_partner_spectrum(const susy::SusyChain& chain, int ell,
                                   const Discretization& d, int k);
OracleSpectrum fd_partner_spectrum_richardson(const susy::SusyChain& chain, int ell,
                                              const Discretization& d, int k);

/// Ground eigenvector of the discretized order-ell partner (for overlap
/// checks against the closed-form states).
GridFunction fd_partner_ground(const susy::SusyChain& chain, int ell,
                               const Discretization& d);

/// sup over the guard-banded interior grid of
///   |-phi'' + V phi - E phi| / max(|E phi|, eps),
/// phi'' by the stencil of d.order; eps floors the denominator at 1% of the
/// peak of |E phi| so nodes of phi do not dominate the ratio.
double schrodinger_residual(const std::function<double(double)>& V,
                            const std::function<std::complex<double>(double)>& phi,
                            double E, const Discretization& d,
                            double lo, double hi);

/// Dense Hermitian eigensolve used by the oracle; refuses n > 4000.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& H, int k);

/// Raw constraint-eliminated matrix before symmetrization (diagnostic: its
/// anti-Hermitian part is rounding-level for every unitary U).
Eigen::MatrixXcd assemble_hamiltonian(const ExtensionParams& p, int n_points);

}  // namespace sawell::oracle
