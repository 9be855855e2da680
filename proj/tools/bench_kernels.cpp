// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

// Timing comparison of the serial reference kernels against their OpenMP
// counterparts: determinant grid sampling, bracket refinement and angle
// sweeps. Both paths must produce identical output; the checksum column is a
// tripwire for that.

#include <cstdio>
#include <numbers>

#ifdef SAWELL_HAVE_OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "sawell/extensions.hpp"
#include "sawell/scan.hpp"
#include "sawell/spectral.hpp"

namespace {

double now() {
#ifdef SAWELL_HAVE_OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

constexpr double kPi = std::numbers::pi;

}  // namespace

int main() {
    using namespace sawell;
    const auto p = extensions::from_theta_angles(0.4, 0.7, 0.3, 1.1, 0.5);

    std::printf("%-28s %12s %12s %8s %14s\n", "kernel", "serial[s]", "openmp[s]",
                "speedup", "checksum-match");

    {   // determinant sampling over a fine s-grid
        const int n = 4'000'000;
        auto f = [&p](double s) { return spectral::reduced_det(s, p); };
        const double t0 = now();
        const auto a = scan::sample_grid(f, 1e-6, 40.0 * kPi, n, scan::ExecPolicy::Serial);
        const double t1 = now();
        const auto b = scan::sample_grid(f, 1e-6, 40.0 * kPi, n, scan::ExecPolicy::OpenMP);
        const double t2 = now();
        std::printf("%-28s %12.4f %12.4f %8.2f %14s\n", "sample_grid(F, 4e6)",
                    t1 - t0, t2 - t1, (t1 - t0) / (t2 - t1), a == b ? "yes" : "NO");
    }

    {   // bracket refinement of every root below 400 pi
        spectral::RootFindConfig cfg;
        cfg.s_max = 400.0 * kPi;
        auto f = [&p](double s) { return spectral::reduced_det(s, p); };
        const int n = static_cast<int>(cfg.s_max / cfg.grid_step);
        const auto samples = scan::sample_grid(f, 1e-6, cfg.s_max, n, scan::ExecPolicy::Serial);
        const auto brackets = scan::find_brackets(samples, 1e-6, cfg.s_max / n);
        const double t0 = now();
        const auto a = scan::refine_brackets(f, brackets.sign_changes, cfg.tol,
                                             scan::ExecPolicy::Serial);
        const double t1 = now();
        const auto b = scan::refine_brackets(f, brackets.sign_changes, cfg.tol,
                                             scan::ExecPolicy::OpenMP);
        const double t2 = now();
        std::printf("%-28s %12.4f %12.4f %8.2f %14s\n", "refine_brackets(~1200 roots)",
                    t1 - t0, t2 - t1, (t1 - t0) / (t2 - t1), a == b ? "yes" : "NO");
    }

    {   // full root solves across a psi sweep
        std::vector<double> psis(48);
        for (std::size_t i = 0; i < psis.size(); ++i)
            psis[i] = 0.02 + 3.0 * static_cast<double>(i) / psis.size();
        spectral::RootFindConfig cfg;
        cfg.s_max = 20.0 * kPi;
        auto job = [&](double psi) {
            const auto q = extensions::from_theta_angles(0.4, 0.7, 0.3, psi, 0.5);
            std::vector<double> roots;
            for (const auto& l : spectral::positive_levels(q, cfg)) roots.push_back(l.s);
            return roots;
        };
        const double t0 = now();
        const auto a = scan::ordered_map(job, psis, scan::ExecPolicy::Serial);
        const double t1 = now();
        const auto b = scan::ordered_map(job, psis, scan::ExecPolicy::OpenMP);
        const double t2 = now();
        std::printf("%-28s %12.4f %12.4f %8.2f %14s\n", "sweep(48 spectra)",
                    t1 - t0, t2 - t1, (t1 - t0) / (t2 - t1), a == b ? "yes" : "NO");
    }

    return 0;
}
