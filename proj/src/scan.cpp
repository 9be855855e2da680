// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#include "sawell/scan.hpp"

#include <cmath>
#include <cstddef>

namespace sawell::scan {

std::vector<double> sample_grid(const std::function<double(double)>& f,
                                double lo, double hi, int n, ExecPolicy policy) {
    std::vector<double> out(static_cast<std::size_t>(n) + 1);
    const double step = (hi - lo) / n;
    if (policy == ExecPolicy::OpenMP) {
#ifdef SAWELL_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = f(lo + i * step);
    } else {
        for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = f(lo + i * step);
    }
    return out;
}

BracketScan find_brackets(std::span<const double> samples, double lo, double step) {
    BracketScan out;
    const std::size_t n = samples.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double a = samples[i], b = samples[i + 1];
        if (a == 0.0) {
            // grid point exactly on a root: the enclosing cells act as one bracket
            if (i > 0 && samples[i - 1] * b < 0.0)
                out.sign_changes.push_back({lo + (i - 1) * step, lo + (i + 1) * step});
            else if (i > 0)
                out.minima.push_back({lo + (i - 1) * step, lo + (i + 1) * step});
            continue;
        }
        if (a * b < 0.0) {
            out.sign_changes.push_back({lo + i * step, lo + (i + 1) * step});
            continue;
        }
        // interior |f| minimum without a sign change: tangential candidate
        if (i > 0 && std::abs(a) < std::abs(samples[i - 1]) && std::abs(a) <= std::abs(b) &&
            samples[i - 1] * a > 0.0)
            out.minima.push_back({lo + (i - 1) * step, lo + (i + 1) * step});
    }
    return out;
}

std::vector<double> refine_brackets(const std::function<double(double)>& f,
                                    std::span<const BracketScan::Cell> cells,
                                    double tol, ExecPolicy policy) {
    std::vector<double> out(cells.size());
    auto refine = [&](std::size_t idx) {
        double a = cells[idx].lo, b = cells[idx].hi;
        double fa = f(a);
        for (int it = 0; it < 200 && (b - a) > tol; ++it) {
            const double mid = 0.5 * (a + b);
            const double fm = f(mid);
            if (fm == 0.0) { a = b = mid; break; }
            if (fa * fm < 0.0) {
                b = mid;
            } else {
                a = mid;
                fa = fm;
            }
        }
        out[idx] = 0.5 * (a + b);
    };
    if (policy == ExecPolicy::OpenMP) {
#ifdef SAWELL_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long i = 0; i < static_cast<long long>(cells.size()); ++i)
            refine(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < cells.size(); ++i) refine(i);
    }
    return out;
}

double minimize_abs(const std::function<double(double)>& f, double lo, double hi,
                    double tol) {
    // golden-section on |f|
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = std::abs(f(c)), fd = std::abs(f(d));
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = std::abs(f(c));
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = std::abs(f(d));
        }
    }
    return 0.5 * (a + b);
}

std::vector<std::vector<double>> ordered_map(
    const std::function<std::vector<double>(double)>& job,
    std::span<const double> values, ExecPolicy policy) {
    std::vector<std::vector<double>> out(values.size());
    if (policy == ExecPolicy::OpenMP) {
#ifdef SAWELL_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long i = 0; i < static_cast<long long>(values.size()); ++i)
            out[static_cast<std::size_t>(i)] = job(values[static_cast<std::size_t>(i)]);
    } else {
        for (std::size_t i = 0; i < values.size(); ++i) out[i] = job(values[i]);
    }
    return out;
}

}  // namespace sawell::scan
