// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "sawell/cli.hpp"
#include "sawell/serialize.hpp"

namespace {

using sawell::cli::Format;

struct ParamOpts {
    std::optional<std::string> input;
    std::optional<double> psi;
    std::optional<double> m0, m1, m2, m3;
    std::vector<double> theta, beta, omega;
    int beta_n = 1;
    double a = 0.5;
};

void add_param_opts(CLI::App* cmd, ParamOpts& o) {
    cmd->add_option("--input", o.input, "extension JSON file");
    cmd->add_option("--psi", o.psi, "phase angle psi");
    cmd->add_option("--m0", o.m0);
    cmd->add_option("--m1", o.m1);
    cmd->add_option("--m2", o.m2);
    cmd->add_option("--m3", o.m3);
    cmd->add_option("--theta", o.theta, "theta0 theta1 theta2")->expected(3);
    cmd->add_option("--beta", o.beta, "beta0 beta1")->expected(2);
    cmd->add_option("--omega", o.omega, "omega0 omega1 omega2")->expected(3);
    cmd->add_option("--n", o.beta_n, "level index for the beta chart");
    cmd->add_option("--a", o.a, "half-width (default 0.5)");
}

sawell::extensions::ExtensionParams resolve_params(const ParamOpts& o) {
    const int sources = (o.input ? 1 : 0) + (o.psi && o.m0 ? 1 : 0) +
                        (!o.theta.empty() ? 1 : 0) + (!o.beta.empty() ? 1 : 0) +
                        (!o.omega.empty() ? 1 : 0);
    if (sources != 1)
        throw sawell::InvalidParams("specify exactly one extension source "
                                    "(--input, --psi/--m0..--m3, --theta, --beta or --omega)");
    if (o.input) {
        std::ifstream f(*o.input);
        if (!f) throw sawell::InvalidParams("cannot open " + *o.input);
        sawell::io::json j;
        f >> j;
        return sawell::io::params_from_json(j);
    }
    const double psi = o.psi.value_or(0.0);
    if (!o.theta.empty())
        return sawell::extensions::from_theta_angles(o.theta[0], o.theta[1], o.theta[2], psi, o.a);
    if (!o.beta.empty())
        return sawell::extensions::from_beta_angles(o.beta[0], o.beta[1], psi, o.beta_n, o.a);
    if (!o.omega.empty())
        return sawell::extensions::from_omega_angles(o.omega[0], o.omega[1], o.omega[2], psi, o.a);
    if (!o.m0 || !o.m1 || !o.m2 || !o.m3)
        throw sawell::InvalidParams("inline parameters need all of --m0..--m3");
    return sawell::extensions::ExtensionParams::checked(psi, {*o.m0, *o.m1, *o.m2, *o.m3}, o.a);
}

struct OutOpt {
    std::optional<std::string> path;
    std::ofstream file;

    std::ostream& stream() {
        if (!path) return std::cout;
        if (!file.is_open()) file.open(*path);
        return file;
    }
};

Format parse_format(const std::string& s, Format fallback) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s.empty()) return fallback;
    throw sawell::InvalidParams("format must be json or csv");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectra and supersymmetric partner chains of the finite-interval "
                 "kinetic operator under general self-adjoint wall conditions"};
    app.require_subcommand(1);

    ParamOpts popts;
    OutOpt out;
    std::string format;

    auto* classify = app.add_subcommand("classify", "symmetry class and ground-state kind");
    add_param_opts(classify, popts);
    classify->add_option("--format", format);
    classify->add_option("--output", out.path);

    auto* spectrum = app.add_subcommand("spectrum", "discrete spectrum of one extension");
    add_param_opts(spectrum, popts);
    double s_max = 20.0 * 3.14159265358979323846;
    int count = -1;
    bool with_oracle = false;
    spectrum->add_option("--s-max", s_max, "scan ceiling in s");
    spectrum->add_option("--count", count, "keep only the lowest N levels");
    spectrum->add_flag("--oracle", with_oracle, "append finite-difference deltas");
    spectrum->add_option("--format", format);
    spectrum->add_option("--output", out.path);

    auto* scan = app.add_subcommand("scan", "root sweep over one or two angles");
    sawell::cli::SweepSpec sweep;
    std::vector<double> range1, range2;
    std::vector<std::string> fixed_kv;
    bool serial = false;
    scan->add_option("--chart", sweep.chart, "theta | beta | omega | phi");
    scan->add_option("--vary", sweep.vary1, "angle to sweep")->required();
    scan->add_option("--range", range1, "lo hi")->expected(2)->required();
    scan->add_option("--steps", sweep.steps1)->required();
    std::string vary2;
    scan->add_option("--vary2", vary2, "second swept angle");
    scan->add_option("--range2", range2, "lo hi")->expected(2);
    scan->add_option("--steps2", sweep.steps2);
    scan->add_option("--fixed", fixed_kv, "angle=value (repeatable)");
    scan->add_option("--roots", sweep.roots, "roots per sweep point");
    scan->add_option("--n", sweep.beta_n, "level index for the beta chart");
    scan->add_option("--a", sweep.a);
    scan->add_flag("--serial", serial, "disable the parallel sweep");
    scan->add_option("--output", out.path);

    auto* susy = app.add_subcommand("susy", "build the partner chain and export it");
    add_param_opts(susy, popts);
    int max_order = 3, samples = 513, state_cap = 3;
    std::string out_dir = "susy_out";
    susy->add_option("--order", max_order, "highest partner order");
    susy->add_option("--samples", samples, "grid samples per file");
    susy->add_option("--state-cap", state_cap, "states above the floor per order");
    susy->add_option("--outdir", out_dir, "output directory");

    auto* legendre = app.add_subcommand("legendre", "sample a second-kind function");
    int ell = 1, order_n = 2, lsamples = 257;
    legendre->add_option("--ell", ell)->required();
    legendre->add_option("--order", order_n)->required();
    legendre->add_option("--samples", lsamples);
    legendre->add_option("--output", out.path);

    auto* oracle = app.add_subcommand("oracle", "finite-difference cross-check report");
    add_param_opts(oracle, popts);
    int n_points = 1001, k = 10;
    oracle->add_option("--points", n_points, "grid points (Richardson doubles this)");
    oracle->add_option("--k", k, "eigenvalues to report");
    oracle->add_option("--output", out.path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed())
            return sawell::cli::cmd_classify(resolve_params(popts),
                                             parse_format(format, Format::Csv), out.stream());
        if (spectrum->parsed()) {
            sawell::spectral::RootFindConfig cfg;
            cfg.s_max = s_max;
            return sawell::cli::cmd_spectrum(resolve_params(popts), cfg, count, with_oracle,
                                             parse_format(format, Format::Csv), out.stream());
        }
        if (scan->parsed()) {
            sweep.lo1 = range1[0];
            sweep.hi1 = range1[1];
            if (!vary2.empty()) {
                if (range2.size() != 2) throw sawell::InvalidParams("--vary2 needs --range2");
                sweep.vary2 = vary2;
                sweep.lo2 = range2[0];
                sweep.hi2 = range2[1];
            }
            for (const auto& kv : fixed_kv) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos) throw sawell::InvalidParams("--fixed needs angle=value");
                sweep.fixed[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
            }
            sweep.policy = serial ? sawell::scan::ExecPolicy::Serial
                                  : sawell::scan::ExecPolicy::OpenMP;
            return sawell::cli::cmd_scan(sweep, out.stream());
        }
        if (susy->parsed())
            return sawell::cli::cmd_susy(resolve_params(popts), max_order, samples, state_cap,
                                         out_dir, std::cout);
        if (legendre->parsed())
            return sawell::cli::cmd_legendre(ell, order_n, lsamples, out.stream());
        if (oracle->parsed())
            return sawell::cli::cmd_oracle(resolve_params(popts), n_points, k, out.stream());
    } catch (const sawell::InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return sawell::cli::kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return sawell::cli::kExitNumerical;
    }
    return sawell::cli::kExitInput;
}
