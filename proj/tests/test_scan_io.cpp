// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <sstream>

#include "sawell/cli.hpp"
#include "sawell/serialize.hpp"
#include "test_support.hpp"

using namespace sawell;
using extensions::ExtensionParams;
using testing::kPi;

TEST_SUITE_BEGIN("scan_io");

TEST_CASE("parallel kernels match the serial reference exactly") {
    const auto p = extensions::from_theta_angles(0.4, 0.7, 0.3, 1.1);
    auto f = [&p](double s) { return spectral::reduced_det(s, p); };

    SUBCASE("grid sampling") {
        const auto a = scan::sample_grid(f, 1e-6, 40.0, 20000, scan::ExecPolicy::Serial);
        const auto b = scan::sample_grid(f, 1e-6, 40.0, 20000, scan::ExecPolicy::OpenMP);
        CHECK(a == b);
    }
    SUBCASE("bracket refinement") {
        const auto samples = scan::sample_grid(f, 1e-6, 60.0, 6000, scan::ExecPolicy::Serial);
        const auto cells = scan::find_brackets(samples, 1e-6, 60.0 / 6000);
        REQUIRE(cells.sign_changes.size() > 10);
        const auto a = scan::refine_brackets(f, cells.sign_changes, 1e-13, scan::ExecPolicy::Serial);
        const auto b = scan::refine_brackets(f, cells.sign_changes, 1e-13, scan::ExecPolicy::OpenMP);
        CHECK(a == b);
    }
    SUBCASE("whole level solves") {
        spectral::RootFindConfig serial_cfg, omp_cfg;
        omp_cfg.policy = scan::ExecPolicy::OpenMP;
        const auto a = spectral::positive_levels(p, serial_cfg);
        const auto b = spectral::positive_levels(p, omp_cfg);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].s == b[i].s);
            CHECK(a[i].multiplicity == b[i].multiplicity);
        }
    }
    SUBCASE("ordered sweep assembly") {
        std::vector<double> vals{0.1, 0.5, 0.9, 1.3};
        auto job = [](double v) { return std::vector<double>{v, 2.0 * v}; };
        const auto a = scan::ordered_map(job, vals, scan::ExecPolicy::Serial);
        const auto b = scan::ordered_map(job, vals, scan::ExecPolicy::OpenMP);
        CHECK(a == b);
    }
}

TEST_CASE("parameter serialization round trip") {
    SUBCASE("direct form") {
        const auto p = ExtensionParams::checked(0.77, {0.5, -0.5, 0.5, 0.5}, 0.8);
        const auto q = io::params_from_json(io::params_to_json(p));
        CHECK(p.psi == q.psi);
        CHECK(p.m == q.m);
        CHECK(p.a == q.a);
    }
    SUBCASE("chart forms") {
        const auto j = io::json{{"parametrization", "theta"},
                                {"angles", {0.4, 0.7, 0.3}},
                                {"psi", 1.1},
                                {"a", 0.5}};
        const auto p = io::params_from_json(j);
        const auto want = extensions::from_theta_angles(0.4, 0.7, 0.3, 1.1);
        CHECK(p.m == want.m);

        const auto jb = io::json{{"parametrization", "beta"},
                                 {"angles", {0.4, 0.7}},
                                 {"psi", 0.2},
                                 {"n", 2},
                                 {"a", 0.5}};
        CHECK(io::params_from_json(jb).m == extensions::from_beta_angles(0.4, 0.7, 0.2, 2).m);
    }
    SUBCASE("malformed input throws") {
        CHECK_THROWS(io::params_from_json(io::json{{"psi", 0.0}}));
        CHECK_THROWS(io::params_from_json(
            io::json{{"parametrization", "nope"}, {"angles", {0.1}}, {"psi", 0.0}}));
    }
}

TEST_CASE("level list serialization") {
    const auto levels = spectral::full_spectrum(ExtensionParams::checked(0.0, {0.0, 1.0, 0.0, 0.0}));
    SUBCASE("json round trip is exact") {
        const auto j = io::levels_to_json(levels);
        const auto back = io::levels_from_json(io::json::parse(j.dump()));
        REQUIRE(back.size() == levels.size());
        for (std::size_t i = 0; i < levels.size(); ++i) {
            CHECK(back[i].s == levels[i].s);
            CHECK(back[i].E == levels[i].E);
            CHECK(back[i].kind == levels[i].kind);
            CHECK(back[i].branch == levels[i].branch);
            CHECK(back[i].multiplicity == levels[i].multiplicity);
        }
    }
    SUBCASE("csv header contract") {
        const auto csv = io::levels_to_csv(levels);
        CHECK(csv.rfind("kind,s_or_r,E,branch,multiplicity\n", 0) == 0);
        CHECK(csv.find("negative,") != std::string::npos);
    }
    SUBCASE("shortest round-trip floats") {
        for (double x : {kPi, 0.1, -1.0 / 3.0, 1e-17, 123456.789}) {
            const auto s = io::format_double(x);
            CHECK(std::stod(s) == x);
        }
    }
}

TEST_CASE("eigenfunction serialization") {
    const auto f = eigenfunctions::normalize(
        {{0.3, 0.4}, {-0.1, 0.9}, 2.0 * kPi}, 0.5);
    const auto back = io::eigenfunction_from_json(io::eigenfunction_to_json(f));
    CHECK(back.c.A == f.c.A);
    CHECK(back.c.B == f.c.B);
    CHECK(back.scale == f.scale);
    const auto csv = io::eigenfunction_to_csv(f, -0.5, 0.5, 11);
    CHECK(csv.rfind("x,re_phi,im_phi\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);
}

TEST_CASE("cli handlers") {
    SUBCASE("classify text output") {
        std::ostringstream out;
        const int rc = cli::cmd_classify(extensions::textbook(), cli::Format::Csv, out);
        CHECK(rc == cli::kExitOk);
        CHECK(out.str() ==
              "time_reversal=true parity=m3_zero ground=positive ground_branch=determinant\n");
    }
    SUBCASE("classify sees negative ground") {
        std::ostringstream out;
        cli::cmd_classify(ExtensionParams::checked(0.0, {0.0, 1.0, 0.0, 0.0}),
                          cli::Format::Csv, out);
        CHECK(out.str().find("ground=negative") != std::string::npos);
    }
    SUBCASE("classify sees zero ground") {
        std::ostringstream out;
        cli::cmd_classify(ExtensionParams::checked(kPi, {1.0, 0.0, 0.0, 0.0}),
                          cli::Format::Csv, out);
        CHECK(out.str().find("ground=zero") != std::string::npos);
    }
    SUBCASE("spectrum csv") {
        std::ostringstream out;
        spectral::RootFindConfig cfg;
        cfg.s_max = 16.0;
        const int rc = cli::cmd_spectrum(extensions::textbook(), cfg, -1, false, cli::Format::Csv, out);
        CHECK(rc == cli::kExitOk);
        CHECK(out.str().rfind("kind,s_or_r,E,branch,multiplicity\n", 0) == 0);
    }
    SUBCASE("susy gate exit code") {
        std::ostringstream log;
        const int rc = cli::cmd_susy(ExtensionParams::checked(kPi, {1.0, 0.0, 0.0, 0.0}), 2, 65,
                                     2, "/tmp/sawell_test_susy_gate", log);
        CHECK(rc == cli::kExitGate);
    }
    SUBCASE("scan emits deterministic ordered rows") {
        cli::SweepSpec spec;
        spec.chart = "phi";
        spec.vary1 = "phi1";
        spec.lo1 = 0.1;
        spec.hi1 = 0.5;
        spec.steps1 = 5;
        spec.fixed["phi2"] = 0.3;
        spec.roots = 3;
        std::ostringstream a, b;
        CHECK(cli::cmd_scan(spec, a) == cli::kExitOk);
        spec.policy = scan::ExecPolicy::Serial;
        CHECK(cli::cmd_scan(spec, b) == cli::kExitOk);
        CHECK(a.str() == b.str());
        CHECK(a.str().find("# sweep_value,root_index,s") != std::string::npos);
    }
    SUBCASE("one-point sweep matches the spectrum command") {
        cli::SweepSpec spec;
        spec.chart = "theta";
        spec.vary1 = "psi";
        spec.lo1 = 0.9;
        spec.hi1 = 0.9;
        spec.steps1 = 1;
        spec.fixed["theta0"] = 0.4;
        spec.roots = 4;
        std::ostringstream out;
        REQUIRE(cli::cmd_scan(spec, out) == cli::kExitOk);

        const auto p = extensions::from_theta_angles(0.4, 0.0, 0.0, 0.9);
        const auto direct = spectral::positive_levels(p);
        std::istringstream in(out.str());
        std::string line;
        std::size_t row = 0;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            const auto last = line.rfind(',');
            CHECK(std::stod(line.substr(last + 1)) ==
                  doctest::Approx(direct[row].s).epsilon(1e-12));
            ++row;
        }
        CHECK(row == 4);
    }
    SUBCASE("legendre csv") {
        std::ostringstream out;
        CHECK(cli::cmd_legendre(1, 2, 33, out) == cli::kExitOk);
        CHECK(out.str().rfind("theta,re,im\n", 0) == 0);
        CHECK(cli::cmd_legendre(2, 1, 33, out) == cli::kExitInput);
    }
}

TEST_CASE("chain serialization") {
    const auto chain = susy::build_chain(extensions::textbook(), 2);
    const auto j = io::chain_to_json(chain, 2);
    CHECK(j.at("s0").get<double>() == doctest::Approx(kPi));
    CHECK(j.at("orders").size() == 2);
    CHECK(j.at("poles").size() == 2);
    CHECK(j.at("orders")[0].at("energies")[0].at("n").get<int>() == 2);
}

TEST_SUITE_END();
