// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

namespace sawell {

/// Uniformly sampled complex-valued function of x.
struct GridFunction {
    double x0 = 0.0;
    double dx = 0.0;
    std::vector<std::complex<double>> values;

    double x(std::size_t i) const { return x0 + static_cast<double>(i) * dx; }
    std::size_t size() const { return values.size(); }

    static GridFunction sampled(double lo, double hi, std::size_t n,
                                const std::function<std::complex<double>(double)>& f) {
        GridFunction g;
        g.x0 = lo;
        g.dx = n > 1 ? (hi - lo) / static_cast<double>(n - 1) : 0.0;
        g.values.resize(n);
        for (std::size_t i = 0; i < n; ++i) g.values[i] = f(g.x(i));
        return g;
    }
};

}  // namespace sawell
