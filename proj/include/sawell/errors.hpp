// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace sawell {

/// Base class for every library error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameter vector off the unit sphere, psi out of range, or a <= 0.
class InvalidParams : public Error { public: using Error::Error; };

/// Root-find configuration fails its own invariants.
class ConfigError : public Error { public: using Error::Error; };

/// The quadratic branch form has denominator m0 - cos(psi) ~ 0.
class DegenerateDenominator : public Error { public: using Error::Error; };

/// More than two hyperbolic roots found: violates the two-level bound,
/// so the root finder itself is at fault.
class TooManyNegativeLevels : public Error { public: using Error::Error; };

/// A specialized level family was requested outside its trigonometric
/// validity condition.
class PreconditionViolated : public Error { public: using Error::Error; };

/// Coefficients requested at an s that does not satisfy the spectral condition.
class NotASpectralRoot : public Error { public: using Error::Error; };

/// Normalization of the identically-zero function.
class ZeroFunction : public Error { public: using Error::Error; };

/// arg(A) and arg(B) differ by something other than 0 or pi: the partner
/// potential built from this state would be complex.
class PhaseMismatch : public Error { public: using Error::Error; };

/// Legendre index outside the square-integrable family.
class NotNormalizable : public Error { public: using Error::Error; };

/// Evaluation point coincides with a node of the generating ground state.
class PoleAtNode : public Error { public: using Error::Error; };

/// Grid cannot support the requested finite-difference stencil.
class GridTooCoarse : public Error { public: using Error::Error; };

/// Chain gate: the extension has at least one negative level.
class NegativeGroundState : public Error { public: using Error::Error; };

/// Chain gate: the extension admits a zero-energy state.
class ZeroEnergyGroundState : public Error { public: using Error::Error; };

/// Chain gate: positive levels are not of the form s_n = (n+1) s_0.
class NonUniformSpectrum : public Error { public: using Error::Error; };

/// Chain gate: the ground level is doubly degenerate, so no canonical
/// single ground state exists.
class DegenerateGroundState : public Error { public: using Error::Error; };

/// Wall-constraint elimination is rank-deficient and no specialization applies.
class SingularConstraint : public Error { public: using Error::Error; };

/// Partner potential has poles that prevent a single-interval treatment.
class PoleInsideDomain : public Error { public: using Error::Error; };

}  // namespace sawell
