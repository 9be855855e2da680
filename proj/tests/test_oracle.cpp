// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "sawell/oracle.hpp"
#include "sawell/spectral.hpp"
#include "test_support.hpp"

using namespace sawell;
using extensions::ExtensionParams;
using testing::kPi;
using Complex = std::complex<double>;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("textbook spectrum") {
    oracle::Discretization d;
    d.n_points = 2001;
    const auto sp = oracle::fd_spectrum(extensions::textbook(), d, 3);
    for (int n = 1; n <= 3; ++n)
        CHECK(std::abs(sp.eigenvalues[n - 1] - n * n * kPi * kPi) <=
              1e-5 * n * n * kPi * kPi);

    d.n_points = 1001;
    const auto r = oracle::fd_spectrum_richardson(extensions::textbook(), d, 3);
    REQUIRE(r.richardson.has_value());
    for (int n = 1; n <= 3; ++n)
        CHECK(std::abs((*r.richardson)[n - 1] - n * n * kPi * kPi) <=
              1e-8 * n * n * kPi * kPi);
}

TEST_CASE("neumann walls expose the zero mode") {
    oracle::Discretization d;
    d.n_points = 1001;
    const auto sp =
        oracle::fd_spectrum(ExtensionParams::checked(kPi, {1.0, 0.0, 0.0, 0.0}), d, 2);
    CHECK(std::abs(sp.eigenvalues[0]) <= 1e-6);
}

TEST_CASE("hermiticity of the eliminated matrix") {
    testing::RandomExtensions rnd(606);
    for (int i = 0; i < 12; ++i) {
        const auto h = oracle::assemble_hamiltonian(rnd.next_oracle_safe(), 301);
        const double defect = (h - h.adjoint()).norm() / h.norm();
        CHECK(defect <= 1e-12);
    }
}

TEST_CASE("agreement with the analytic solver for random walls") {
    testing::RandomExtensions rnd(607);
    oracle::Discretization d;
    d.n_points = 1001;
    for (int i = 0; i < 4; ++i) {
        const auto p = rnd.next_oracle_safe();
        std::vector<double> analytic;
        for (const auto& l : spectral::full_spectrum(p))
            for (int c = 0; c < l.multiplicity; ++c) analytic.push_back(l.E);
        const double cutoff = (10.0 * kPi / (2.0 * p.a)) * (10.0 * kPi / (2.0 * p.a));
        int k = 0;
        while (k < static_cast<int>(analytic.size()) && analytic[k] < cutoff) ++k;
        REQUIRE(k >= 8);
        const auto sp = oracle::fd_spectrum_richardson(p, d, k);
        for (int j = 0; j < k; ++j) {
            const double denom = std::max(1.0, std::abs(analytic[j]));
            CHECK(std::abs((*sp.richardson)[j] - analytic[j]) <= 1e-4 * denom);
        }
    }
}

TEST_CASE("convergence rates") {
    const auto p = extensions::textbook();
    const double exact = kPi * kPi;

    // raw eigenvalues converge at second order
    std::vector<double> hs, errs;
    for (int n : {201, 401, 801}) {
        oracle::Discretization d;
        d.n_points = n;
        const auto sp = oracle::fd_spectrum(p, d, 1);
        hs.push_back(sp.h);
        errs.push_back(std::abs(sp.eigenvalues[0] - exact));
    }
    const double slope2 =
        std::log(errs[0] / errs[2]) / std::log(hs[0] / hs[2]);
    CHECK(slope2 == doctest::Approx(2.0).epsilon(0.1));

    // extrapolated values converge at fourth order (coarse grids keep the
    // measured errors above the eigensolver's rounding floor)
    errs.clear();
    hs.clear();
    for (int n : {65, 97, 129}) {
        oracle::Discretization d;
        d.n_points = n;
        const auto sp = oracle::fd_spectrum_richardson(p, d, 1);
        hs.push_back(sp.h);
        errs.push_back(std::abs((*sp.richardson)[0] - exact));
    }
    const double slope4 = std::log(errs[0] / errs[2]) / std::log(hs[0] / hs[2]);
    CHECK(slope4 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("partner diagonalization") {
    const auto chain = susy::build_chain(extensions::textbook(), 3);
    const double k2 = kPi * kPi;

    SUBCASE("first order: three lowest levels") {
        oracle::Discretization d;
        d.n_points = 1001;
        const auto sp = oracle::fd_partner_spectrum_richardson(chain, 1, d, 3);
        const double expect[3] = {3.0 * k2, 8.0 * k2, 15.0 * k2};
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs((*sp.richardson)[i] - expect[i]) <= 1e-6 * expect[i]);
    }
    SUBCASE("second order: two lowest levels") {
        oracle::Discretization d;
        d.n_points = 1001;
        const auto sp = oracle::fd_partner_spectrum_richardson(chain, 2, d, 2);
        CHECK(std::abs((*sp.richardson)[0] - 5.0 * k2) <= 1e-6 * 5.0 * k2);
        CHECK(std::abs((*sp.richardson)[1] - 12.0 * k2) <= 1e-6 * 12.0 * k2);
    }
    SUBCASE("ground eigenvector matches the closed form") {
        oracle::Discretization d;
        d.n_points = 801;
        for (int ell : {1, 2}) {
            const auto vec = oracle::fd_partner_ground(chain, ell, d);
            std::vector<Complex> closed(vec.size());
            for (std::size_t i = 0; i < vec.size(); ++i)
                closed[i] = susy::partner_state(ell, 2, ell + 1, chain.ground, vec.x(i));
            CHECK(testing::cosine_similarity(vec.values, closed) >= 1.0 - 1e-5);
        }
    }
    SUBCASE("chains with interior pole branches are refused") {
        susy::SusyChain synthetic{extensions::textbook(),
                                  {0.0, 0.0, 2.0 * kPi, 0.5},
                                  {{1, {0.0, 0.0, 2.0 * kPi, 0.5}}}};
        oracle::Discretization d;
        d.n_points = 501;
        CHECK_THROWS_AS(oracle::fd_partner_spectrum(synthetic, 1, d, 2), PoleInsideDomain);
    }
}

TEST_CASE("pointwise equation residual") {
    oracle::Discretization d;
    d.n_points = 2001;
    d.order = 4;
    SUBCASE("exact textbook eigenpair") {
        // grid arguments x = lo + i h round independently, and the h^-2
        // division lifts that noise to a ~4e-9 absolute floor at 2001 points;
        // truncation alone would sit near 1e-12
        auto v = [](double) { return 0.0; };
        auto phi = [](double x) { return Complex{std::cos(kPi * x), 0.0}; };
        CHECK(oracle::schrodinger_residual(v, phi, kPi * kPi, d, -0.5, 0.5) <= 1e-7);
    }
    SUBCASE("partner eigenpair") {
        const auto g = eigenfunctions::CanonicalGroundState{0.0, 0.0, kPi, 0.5};
        auto v = [&g](double x) { return susy::partner_potential(1, 2, g, x); };
        auto phi = [&g](double x) { return susy::partner_state(1, 2, 2, g, x); };
        const double guard = 1e-6;
        CHECK(oracle::schrodinger_residual(v, phi, 3.0 * kPi * kPi, d, -0.5 + guard,
                                           0.5 - guard) <= 1e-6);
    }
    SUBCASE("wrong energy is detected") {
        // the defect is |E - E'| / E' = 1/(1 + pi^2) ~ 0.092 under this
        // normalization; anything near that order flags the detector
        auto v = [](double) { return 0.0; };
        auto phi = [](double x) { return Complex{std::cos(kPi * x), 0.0}; };
        CHECK(oracle::schrodinger_residual(v, phi, kPi * kPi + 1.0, d, -0.5, 0.5) >= 0.09);
    }
}

TEST_CASE("guard rails") {
    oracle::Discretization d;
    SUBCASE("k bounded by n/4") {
        d.n_points = 101;
        CHECK_THROWS_AS(oracle::fd_spectrum(extensions::textbook(), d, 60), ConfigError);
    }
    SUBCASE("grid ceiling and floor") {
        d.n_points = 4001;
        CHECK_THROWS_AS(oracle::fd_spectrum(extensions::textbook(), d, 3), ConfigError);
        d.n_points = 32;
        CHECK_THROWS_AS(oracle::fd_spectrum(extensions::textbook(), d, 3), ConfigError);
    }
    SUBCASE("rank-deficient constraints without a specialization") {
        // one unit eigenvalue of U: e^{i psi}(m0 - i m3) = 1 with psi = pi/4
        const auto p = ExtensionParams::checked(
            kPi / 4.0, {std::cos(kPi / 4.0), 0.0, 0.0, std::sin(kPi / 4.0)});
        d.n_points = 301;
        CHECK_THROWS_AS(oracle::fd_spectrum(p, d, 3), SingularConstraint);
    }
}

TEST_SUITE_END();
