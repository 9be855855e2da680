// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#include "sawell/legendre.hpp"

#include <cmath>
#include <numbers>

namespace sawell::legendre {

namespace {

const Complex kI{0.0, 1.0};

// exp(sum of log-gammas) with explicit sign bookkeeping; integer arguments
// only, all positive by the callers' construction.
double gamma_ratio(std::initializer_list<int> num, std::initializer_list<int> den) {
    double lg = 0.0;
    for (int v : num) lg += std::lgamma(static_cast<double>(v));
    for (int v : den) lg -= std::lgamma(static_cast<double>(v));
    return std::exp(lg);
}

}  // namespace

bool is_normalizable(LegendreIndex idx) {
    return idx.n >= idx.ell + 1;
}

Complex q_trig(LegendreIndex idx, TrigArgument t) {
    const int l = idx.ell, n = idx.n;
    if (l < 0 || n < 0) throw NotNormalizable("indices must be nonnegative");
    if (n <= l)
        throw NotNormalizable("second-kind expansion needs n >= ell + 1");

    const double theta = t.theta;
    const double c = std::cos(theta);
    const double sign_pre = ((n - l + 1) % 2 == 0) ? 1.0 : -1.0;

    Complex sum{0.0, 0.0};
    for (int j = l + 1; j <= n; ++j) {
        // 1/Gamma of a nonpositive integer vanishes: j - l >= 1 and
        // n - j + 1 >= 1 hold on this range, so every term is regular.
        const double mag = gamma_ratio({j}, {j - l, j + l + 1, n - j + 1})
                         * std::exp2(static_cast<double>(j)) * std::pow(c, j);
        const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
        sum += sgn * mag * std::exp(kI * (static_cast<double>(j) * theta));
    }
    const double pre = 0.5 * sign_pre * gamma_ratio({n - l, l + n + 1}, {});
    return pre * std::exp(-kI * (static_cast<double>(n) * theta)) * sum;
}

Complex p_trig(LegendreIndex idx, TrigArgument t) {
    const int l = idx.ell;
    int n = idx.n;
    if (l < 0 || n < 0) throw NotNormalizable("indices must be nonnegative");

    // For n > ell the direct sum degenerates (the function vanishes
    // identically); evaluate the order-reflected second solution instead.
    const bool reflected = n > l;
    if (reflected) n = -n;

    const double theta = t.theta;
    const double c = std::cos(theta);

    Complex sum{0.0, 0.0};
    for (int j = 0; j <= l; ++j) {
        if (l - n + 1 - j <= 0) continue;   // 1/Gamma(nonpositive) = 0
        const double mag = gamma_ratio({l + 1, 2 * l - j + 1}, {j + 1, l + 1, l + 1 - j, l - n + 1 - j})
                         * std::exp2(static_cast<double>(j - l)) * std::pow(c, j - l);
        const double sgn = ((j + l) % 2 == 0) ? 1.0 : -1.0;
        sum += sgn * mag * std::exp(-kI * (static_cast<double>(j - l + n) * theta));
    }
    return sum;
}

}  // namespace sawell::legendre
