// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace sawell::scan {

/// Execution policy for the data-parallel kernels. Serial is the reference
/// implementation; OpenMP must produce bit-identical results (each element is
/// computed independently with the same arithmetic) and is compared against
/// Serial in the test suite and the benchmark tool.
enum class ExecPolicy { Serial, OpenMP };

/// f sampled on the n+1 uniform points lo + i*(hi-lo)/n, i = 0..n.
std::vector<double> sample_grid(const std::function<double(double)>& f,
                                double lo, double hi, int n, ExecPolicy policy);

/// Candidate root containers produced from a sampled grid: cells with a sign
/// change, and interior sample minima of |f| without an adjacent sign change
/// (tangential-root candidates).
struct BracketScan {
    struct Cell { double lo, hi; };
    std::vector<Cell> sign_changes;
    std::vector<Cell> minima;   // bracket [x_{i-1}, x_{i+1}] around the minimum
};

BracketScan find_brackets(std::span<const double> samples, double lo, double step);

/// Bisection refinement of every sign-change cell to width tol, in parallel;
/// output order follows the input cells.
std::vector<double> refine_brackets(const std::function<double(double)>& f,
                                    std::span<const BracketScan::Cell> cells,
                                    double tol, ExecPolicy policy);

/// Golden-section minimizer of |f| on [lo, hi]; returns argmin.
double minimize_abs(const std::function<double(double)>& f, double lo, double hi,
                    double tol);

/// Map each of the values through `job` in parallel with ordered output
/// assembly (one result row per input value).
std::vector<std::vector<double>> ordered_map(
    const std::function<std::vector<double>(double)>& job,
    std::span<const double> values, ExecPolicy policy);

}  // namespace sawell::scan
