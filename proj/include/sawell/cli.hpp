// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "sawell/extensions.hpp"
#include "sawell/scan.hpp"
#include "sawell/spectral.hpp"

namespace sawell::cli {

/// Exit-code contract shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitGate = 3;

enum class Format { Json, Csv };

struct SweepSpec {
    std::string chart = "theta";               // theta | beta | omega | phi
    std::string vary1;
    double lo1 = 0.0, hi1 = 0.0;
    int steps1 = 0;
    std::optional<std::string> vary2;
    double lo2 = 0.0, hi2 = 0.0;
    int steps2 = 0;
    std::map<std::string, double> fixed;       // remaining angles
    int roots = 5;
    double a = 0.5;
    int beta_n = 1;
    scan::ExecPolicy policy = scan::ExecPolicy::OpenMP;
};

int cmd_classify(const extensions::ExtensionParams& p, Format fmt, std::ostream& out);

/// count < 0 keeps every level found below the scan ceiling.
int cmd_spectrum(const extensions::ExtensionParams& p, const spectral::RootFindConfig& cfg,
                 int count, bool with_oracle, Format fmt, std::ostream& out);

/// Emits "sweep_value[,sweep_value2],root_index,s" rows; metadata lines are
/// prefixed with '#'. Sweep points run in parallel with ordered assembly.
int cmd_scan(const SweepSpec& spec, std::ostream& out);

/// Writes potential samples, admissible state samples, the energy table and
/// ladder-verification residuals under out_dir. Exit 3 with the gate error
/// name on rejection.
int cmd_susy(const extensions::ExtensionParams& p, int max_order, int samples,
             int state_cap, const std::string& out_dir, std::ostream& log);

/// CSV "theta,re,im" of Q_ell^n(-i tan theta) on a uniform theta grid.
int cmd_legendre(int ell, int n, int samples, std::ostream& out);

/// JSON oracle report with per-level deltas against the analytic spectrum.
int cmd_oracle(const extensions::ExtensionParams& p, int n_points, int k,
               std::ostream& out);

}  // namespace sawell::cli
