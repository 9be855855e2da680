// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "sawell/legendre.hpp"
#include "q_reference_table.hpp"
#include "test_support.hpp"

using namespace sawell;
using legendre::LegendreIndex;
using testing::kPi;
using Complex = std::complex<double>;

TEST_SUITE_BEGIN("legendre");

TEST_CASE("second-kind closed forms") {
    for (double th : {-1.3, -0.4, 0.0, 0.7, 1.5}) {
        const double c = std::cos(th);
        CHECK(std::abs(legendre::q_trig({1, 2}, {th}) - 2.0 * c * c) <= 1e-13);
        CHECK(std::abs(legendre::q_trig({2, 3}, {th}) + 8.0 * c * c * c) <= 1e-12);
    }
    SUBCASE("continuous vanishing at the endpoints") {
        CHECK(std::abs(legendre::q_trig({1, 2}, {kPi / 2.0})) <= 1e-14);
        CHECK(std::abs(legendre::q_trig({1, 2}, {-kPi / 2.0})) <= 1e-14);
    }
    SUBCASE("inadmissible orders are refused") {
        CHECK_THROWS_AS(legendre::q_trig({1, 1}, {0.3}), NotNormalizable);
        CHECK_THROWS_AS(legendre::q_trig({2, 2}, {0.3}), NotNormalizable);
        CHECK_THROWS_AS(legendre::q_trig({0, 0}, {0.3}), NotNormalizable);
    }
}

TEST_CASE("agreement with precomputed reference values") {
    for (const auto& row : kQReference) {
        const Complex got = legendre::q_trig({row.ell, row.n}, {row.theta});
        const Complex want{row.re, row.im};
        CHECK(std::abs(got - want) <= 1e-10 * std::abs(want));
    }
}

TEST_CASE("agreement with the hypergeometric series") {
    // series argument has modulus 2 cos(theta); restrict to the region where
    // the double-precision sum holds ~1e-13
    for (int ell = 0; ell <= 6; ++ell) {
        for (int n = ell + 1; n <= ell + 6; ++n) {
            for (int i = 0; i < 100; ++i) {
                const double theta = 1.25 + (1.55 - 1.25) * i / 99.0;
                const Complex got = legendre::q_trig({ell, n}, {theta});
                const Complex want = testing::q_hypergeometric(ell, n, theta);
                CHECK(std::abs(got - want) <= 1e-10 * std::abs(want));
            }
        }
    }
}

TEST_CASE("first-kind closed forms") {
    SUBCASE("degree zero is one") {
        for (double th : {-1.2, 0.0, 0.9})
            CHECK(std::abs(legendre::p_trig({0, 0}, {th}) - 1.0) <= 1e-14);
    }
    SUBCASE("P_1^0 recovers the argument") {
        for (double th : {-1.1, -0.3, 0.5, 1.4}) {
            const Complex z{0.0, -std::tan(th)};
            CHECK(std::abs(legendre::p_trig({1, 0}, {th}) - z) <= 1e-13);
        }
    }
    SUBCASE("order beyond degree diverges like sec^ell") {
        // growth-rate fit near the endpoint for the (1, 2) diagnostic
        double prev_ratio = 0.0;
        for (double eps : {1e-2, 1e-3, 1e-4}) {
            const double th = kPi / 2.0 - eps;
            const double ratio = std::abs(legendre::p_trig({1, 2}, {th})) * std::cos(th);
            if (prev_ratio != 0.0)
                CHECK(ratio == doctest::Approx(prev_ratio).epsilon(1e-2));
            prev_ratio = ratio;
        }
        CHECK(prev_ratio > 0.0);
    }
}

TEST_CASE("legendre differential equation") {
    // (1-z^2) f'' - 2 z f' + [l(l+1) - n^2/(1-z^2)] f = 0 with z = -i tan(theta),
    // derivatives by 4th-order differences in theta and the chain rule
    auto ode_residual = [](int l, int n, double th) {
        const double h = 1e-3;
        auto f = [&](double t) { return legendre::q_trig({l, n}, {t}); };
        auto z = [](double t) { return Complex{0.0, -std::tan(t)}; };
        auto d1 = [&h](auto&& fn, double t) {
            return (fn(t - 2 * h) - 8.0 * fn(t - h) + 8.0 * fn(t + h) - fn(t + 2 * h)) / (12.0 * h);
        };
        auto d2 = [&h](auto&& fn, double t) {
            return (-fn(t - 2 * h) + 16.0 * fn(t - h) - 30.0 * fn(t) + 16.0 * fn(t + h) -
                    fn(t + 2 * h)) / (12.0 * h * h);
        };
        const Complex ft = d1(f, th), ftt = d2(f, th);
        const Complex zt = d1(z, th), ztt = d2(z, th);
        const Complex fz = ft / zt;
        const Complex fzz = (ftt - fz * ztt) / (zt * zt);
        const Complex zz = z(th);
        const Complex lhs = (1.0 - zz * zz) * fzz - 2.0 * zz * fz
                          + (static_cast<double>(l) * (l + 1)
                             - static_cast<double>(n) * n / (1.0 - zz * zz)) * f(th);
        const double scale = std::abs(f(th)) * (l + n + 1.0) * (l + n + 1.0) + 1e-30;
        return std::abs(lhs) / scale;
    };
    for (const auto [l, n] : std::initializer_list<std::pair<int, int>>{
             {1, 2}, {2, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 8}}) {
        for (double th : {-1.1, -0.6, -0.2, 0.3, 0.8, 1.2})
            CHECK(ode_residual(l, n, th) <= 1e-8);
    }
}

TEST_CASE("integrability dichotomy") {
    auto density_integral = [](auto&& fn, double eps) {
        auto d = [&fn](double t) { return std::norm(fn(t)); };
        return testing::simpson(d, -kPi / 2.0 + eps, kPi / 2.0 - eps, 20000);
    };
    SUBCASE("second kind with n >= ell + 1 converges") {
        for (const auto [l, n] :
             std::initializer_list<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {2, 5}}) {
            auto fn = [&](double t) { return legendre::q_trig({l, n}, {t}); };
            double prev = density_integral(fn, 1e-2);
            double delta_prev = 1e300;
            for (double eps : {1e-3, 1e-4, 1e-5, 1e-6}) {
                const double cur = density_integral(fn, eps);
                const double delta = std::abs(cur - prev);
                // increments shrink until they reach quadrature noise
                CHECK(delta < std::max(delta_prev, 1e-8));
                delta_prev = delta;
                prev = cur;
            }
        }
    }
    SUBCASE("first kind with ell >= 1 diverges") {
        for (const auto [l, n] :
             std::initializer_list<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 1}, {1, 2}}) {
            auto fn = [&](double t) { return legendre::p_trig({l, n}, {t}); };
            double prev = 0.0;
            for (double eps : {1e-2, 1e-3, 1e-4, 1e-5}) {
                const double cur = density_integral(fn, eps);
                CHECK(cur > 2.0 * prev);   // monotone growth without a limit
                prev = cur;
            }
        }
    }
}

TEST_CASE("normalizability predicate") {
    CHECK_FALSE(legendre::is_normalizable({1, 1}));
    CHECK(legendre::is_normalizable({2, 3}));
    CHECK(legendre::is_normalizable({5, 6}));
    CHECK_FALSE(legendre::is_normalizable({5, 5}));
    CHECK(legendre::is_normalizable({0, 1}));
}

TEST_SUITE_END();
