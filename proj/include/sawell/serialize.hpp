// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sawell/eigenfunctions.hpp"
#include "sawell/oracle.hpp"
#include "sawell/spectral.hpp"
#include "sawell/susy.hpp"

namespace sawell::io {

using nlohmann::json;

/// Shortest round-trip decimal form of x.
std::string format_double(double x);

std::string_view kind_name(spectral::LevelKind k);
std::string_view branch_name(spectral::Branch b);
spectral::LevelKind kind_from_name(std::string_view s);
spectral::Branch branch_from_name(std::string_view s);

/// {"psi": ..., "m": [...], "a": ...}
json params_to_json(const extensions::ExtensionParams& p);

/// Accepts the direct form above or
/// {"parametrization": "theta"|"beta"|"omega", "angles": [...], "psi": ..., "a": ..., "n": int?}.
extensions::ExtensionParams params_from_json(const json& j);

/// {"levels": [{"kind", "s", "E", "branch", "multiplicity"}]}
json levels_to_json(std::span<const spectral::EnergyLevel> levels);
std::vector<spectral::EnergyLevel> levels_from_json(const json& j);

/// Header "kind,s_or_r,E,branch,multiplicity".
std::string levels_to_csv(std::span<const spectral::EnergyLevel> levels);

/// {"A": [re, im], "B": [re, im], "s", "a", "scale"}
json eigenfunction_to_json(const eigenfunctions::Eigenfunction& f);
eigenfunctions::Eigenfunction eigenfunction_from_json(const json& j);

/// Header "x,re_phi,im_phi" on a uniform n-point grid over [lo, hi].
std::string eigenfunction_to_csv(const eigenfunctions::Eigenfunction& f,
                                 double lo, double hi, int n);

/// Base params, s0, delta, phase, pole pair and per-order energy tables.
json chain_to_json(const susy::SusyChain& chain, int n_cap);

/// {"eigenvalues", "h", "extrapolated"?, "comparison"?}; comparison carries
/// per-level relative deltas against a reference spectrum.
json oracle_to_json(const oracle::OracleSpectrum& sp,
                    std::span<const double> reference = {});

}  // namespace sawell::io
