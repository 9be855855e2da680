// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#include "sawell/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>

#include "sawell/oracle.hpp"
#include "sawell/serialize.hpp"
#include "sawell/susy.hpp"

namespace sawell::cli {

namespace {

constexpr double kPi = std::numbers::pi;

int map_error(const std::exception& e, std::ostream& log) {
    log << "error: " << e.what() << "\n";
    if (dynamic_cast<const NegativeGroundState*>(&e) ||
        dynamic_cast<const ZeroEnergyGroundState*>(&e) ||
        dynamic_cast<const NonUniformSpectrum*>(&e) ||
        dynamic_cast<const DegenerateGroundState*>(&e) ||
        dynamic_cast<const PhaseMismatch*>(&e))
        return kExitGate;
    if (dynamic_cast<const InvalidParams*>(&e) || dynamic_cast<const ConfigError*>(&e) ||
        dynamic_cast<const PreconditionViolated*>(&e) ||
        dynamic_cast<const NotNormalizable*>(&e))
        return kExitInput;
    return kExitNumerical;
}

std::string_view mechanism_name(extensions::ParityMechanism m) {
    using extensions::ParityMechanism;
    switch (m) {
        case ParityMechanism::M3Zero: return "m3_zero";
        case ParityMechanism::SinZero: return "sin_zero";
        case ParityMechanism::ParityBranch: return "parity_branch";
        case ParityMechanism::None: return "none";
        case ParityMechanism::Unknown: return "unknown";
    }
    return "unknown";
}

std::string_view ground_kind(const std::vector<spectral::EnergyLevel>& spectrum) {
    if (spectrum.empty()) return "unknown";
    switch (spectrum.front().kind) {
        case spectral::LevelKind::Negative: return "negative";
        case spectral::LevelKind::Zero: return "zero";
        case spectral::LevelKind::Positive: return "positive";
    }
    return "unknown";
}

}  // namespace

int cmd_classify(const extensions::ExtensionParams& p, Format fmt, std::ostream& out) {
    try {
        spectral::RootFindConfig cfg;
        cfg.s_max = 8.0 * kPi;   // enough roots to decide the parity mechanism
        const auto spectrum = spectral::full_spectrum(p, cfg);
        std::vector<double> roots;
        for (const auto& l : spectrum)
            if (l.kind == spectral::LevelKind::Positive) roots.push_back(l.s);
        const auto cls = extensions::classify(p, roots);

        const auto gbranch = spectrum.empty() ? spectral::Branch::Determinant
                                              : spectrum.front().branch;
        if (fmt == Format::Json) {
            io::json j{{"time_reversal", cls.time_reversal},
                       {"parity_mechanism", mechanism_name(cls.parity_mechanism)},
                       {"ground", ground_kind(spectrum)},
                       {"ground_branch", io::branch_name(gbranch)}};
            if (auto par = cls.parity()) j["parity"] = *par;
            out << j.dump(2) << "\n";
        } else {
            out << "time_reversal=" << (cls.time_reversal ? "true" : "false")
                << " parity=" << mechanism_name(cls.parity_mechanism)
                << " ground=" << ground_kind(spectrum)
                << " ground_branch=" << io::branch_name(gbranch) << "\n";
        }
        return kExitOk;
    } catch (const std::exception& e) {
        return map_error(e, std::cerr);
    }
}

int cmd_spectrum(const extensions::ExtensionParams& p, const spectral::RootFindConfig& cfg,
                 int count, bool with_oracle, Format fmt, std::ostream& out) {
    try {
        auto spectrum = spectral::full_spectrum(p, cfg);
        if (count >= 0 && spectrum.size() > static_cast<std::size_t>(count))
            spectrum.resize(static_cast<std::size_t>(count));

        std::vector<double> deltas;
        if (with_oracle) {
            oracle::Discretization d;
            d.a = p.a;
            int k = 0;
            for (const auto& l : spectrum) k += l.multiplicity;
            const auto sp = oracle::fd_spectrum_richardson(p, d, std::max(1, k));
            const auto& best = *sp.richardson;
            std::size_t oi = 0;
            for (const auto& l : spectrum) {
                for (int c = 0; c < l.multiplicity; ++c) {
                    if (oi < best.size()) {
                        const double den = std::max(1.0, std::abs(l.E));
                        if (c == 0) deltas.push_back((best[oi] - l.E) / den);
                        ++oi;
                    } else if (c == 0) {
                        deltas.push_back(std::numeric_limits<double>::quiet_NaN());
                    }
                }
            }
        }

        if (fmt == Format::Json) {
            io::json j = io::levels_to_json(spectrum);
            if (with_oracle) j["oracle_rel_delta"] = deltas;
            out << j.dump(2) << "\n";
        } else {
            if (!with_oracle) {
                out << io::levels_to_csv(spectrum);
            } else {
                out << "kind,s_or_r,E,branch,multiplicity,oracle_rel_delta\n";
                for (std::size_t i = 0; i < spectrum.size(); ++i) {
                    const auto& l = spectrum[i];
                    out << io::kind_name(l.kind) << "," << io::format_double(l.s) << ","
                        << io::format_double(l.E) << "," << io::branch_name(l.branch) << ","
                        << l.multiplicity << "," << io::format_double(deltas[i]) << "\n";
                }
            }
        }
        return kExitOk;
    } catch (const std::exception& e) {
        return map_error(e, std::cerr);
    }
}

namespace {

extensions::ExtensionParams params_from_angles(const SweepSpec& spec,
                                               std::map<std::string, double> ang) {
    auto get = [&ang](const std::string& name) {
        const auto it = ang.find(name);
        return it == ang.end() ? 0.0 : it->second;
    };
    if (spec.chart == "theta")
        return extensions::from_theta_angles(get("theta0"), get("theta1"), get("theta2"),
                                             get("psi"), spec.a);
    if (spec.chart == "beta")
        return extensions::from_beta_angles(get("beta0"), get("beta1"), get("psi"),
                                            spec.beta_n, spec.a);
    if (spec.chart == "omega")
        return extensions::from_omega_angles(get("omega0"), get("omega1"), get("omega2"),
                                             get("psi"), spec.a);
    if (spec.chart == "phi") {
        const double phi1 = get("phi1"), phi2 = get("phi2");
        return extensions::from_theta_angles(phi2 - phi1, 0.0, 0.0, phi1 + phi2, spec.a);
    }
    throw ConfigError("unknown chart: " + spec.chart);
}

}  // namespace

int cmd_scan(const SweepSpec& spec, std::ostream& out) {
    try {
        if (spec.vary1.empty() || spec.steps1 < 1)
            throw ConfigError("sweep needs a varying angle and at least one step");
        const bool two = spec.vary2.has_value();
        if (two && spec.steps2 < 1) throw ConfigError("second sweep needs steps");

        std::vector<double> v1(static_cast<std::size_t>(spec.steps1));
        for (int i = 0; i < spec.steps1; ++i)
            v1[static_cast<std::size_t>(i)] =
                spec.steps1 == 1 ? spec.lo1
                                 : spec.lo1 + (spec.hi1 - spec.lo1) * i / (spec.steps1 - 1);
        std::vector<double> v2;
        if (two) {
            v2.resize(static_cast<std::size_t>(spec.steps2));
            for (int i = 0; i < spec.steps2; ++i)
                v2[static_cast<std::size_t>(i)] =
                    spec.steps2 == 1 ? spec.lo2
                                     : spec.lo2 + (spec.hi2 - spec.lo2) * i / (spec.steps2 - 1);
        }

        const std::size_t total = v1.size() * (two ? v2.size() : 1);
        std::vector<double> index(total);
        for (std::size_t i = 0; i < total; ++i) index[i] = static_cast<double>(i);

        spectral::RootFindConfig cfg;
        cfg.s_max = 12.0 * kPi;
        auto job = [&](double idx) -> std::vector<double> {
            const auto i = static_cast<std::size_t>(idx);
            const double a1 = v1[two ? i / v2.size() : i];
            std::map<std::string, double> ang = spec.fixed;
            ang[spec.vary1] = a1;
            if (two) ang[*spec.vary2] = v2[i % v2.size()];
            const auto p = params_from_angles(spec, ang);
            const auto levels = spectral::positive_levels(p, cfg);
            std::vector<double> roots;
            for (const auto& l : levels) {
                for (int c = 0; c < l.multiplicity && static_cast<int>(roots.size()) < spec.roots; ++c)
                    roots.push_back(l.s);
                if (static_cast<int>(roots.size()) >= spec.roots) break;
            }
            return roots;
        };
        const auto rows = scan::ordered_map(job, index, spec.policy);

        out << "# chart=" << spec.chart << " vary=" << spec.vary1;
        if (two) out << "," << *spec.vary2;
        for (const auto& [k, v] : spec.fixed) out << " " << k << "=" << io::format_double(v);
        out << "\n";
        out << "# sweep_value" << (two ? ",sweep_value2" : "") << ",root_index,s\n";
        for (std::size_t i = 0; i < total; ++i) {
            const double a1 = v1[two ? i / v2.size() : i];
            for (std::size_t k = 0; k < rows[i].size(); ++k) {
                out << io::format_double(a1);
                if (two) out << "," << io::format_double(v2[i % v2.size()]);
                out << "," << k << "," << io::format_double(rows[i][k]) << "\n";
            }
        }
        return kExitOk;
    } catch (const std::exception& e) {
        return map_error(e, std::cerr);
    }
}

int cmd_susy(const extensions::ExtensionParams& p, int max_order, int samples,
             int state_cap, const std::string& out_dir, std::ostream& log) {
    try {
        const auto chain = susy::build_chain(p, max_order);
        std::filesystem::create_directories(out_dir);
        const auto [plo, phi_] = chain.pole_pair();
        const double guard = susy::kPoleGuardFraction * 2.0 * p.a;
        const double lo = plo + guard, hi = phi_ - guard;

        {
            std::ofstream f(out_dir + "/chain.json");
            f << io::chain_to_json(chain, state_cap).dump(2) << "\n";
        }
        {
            std::ofstream f(out_dir + "/energies.csv");
            f << "order,n,E\n";
            for (const auto& lvl : chain.orders)
                for (int n = lvl.lowest_n(); n <= lvl.lowest_n() + state_cap; ++n)
                    f << lvl.order << "," << n << "," << io::format_double(lvl.energy(n)) << "\n";
        }
        for (const auto& lvl : chain.orders) {
            std::ofstream f(out_dir + "/potential_" + std::to_string(lvl.order) + ".csv");
            f << "x,V1,V2\n";
            for (int i = 0; i < samples; ++i) {
                const double x = lo + (hi - lo) * i / (samples - 1);
                f << io::format_double(x) << "," << io::format_double(lvl.v1(x)) << ","
                  << io::format_double(lvl.v2(x)) << "\n";
            }
            std::ofstream g(out_dir + "/states_" + std::to_string(lvl.order) + ".csv");
            g << "x,re_phi,im_phi,n\n";
            for (int n = lvl.lowest_n(); n <= lvl.lowest_n() + state_cap; ++n) {
                const double nrm = susy::partner_state_norm(lvl.order, 2, n, chain.ground);
                for (int i = 0; i < samples; ++i) {
                    const double x = lo + (hi - lo) * i / (samples - 1);
                    const auto v = lvl.state(n, x) / nrm;
                    g << io::format_double(x) << "," << io::format_double(v.real()) << ","
                      << io::format_double(v.imag()) << "," << n << "\n";
                }
            }
        }
        {
            std::ofstream f(out_dir + "/ladder_residuals.csv");
            f << "order,n,metric,value\n";
            const int grid_n = 2001;
            for (const auto& lvl : chain.orders) {
                susy::LadderOperator ann{lvl.order,
                                         susy::LadderOperator::Direction::Annihilate,
                                         chain.ground};
                // kernel check: A applied to the generating ground state
                auto ground_fn = [&](double x) -> std::complex<double> {
                    return susy::partner_state(lvl.order, 1, lvl.order, chain.ground, x);
                };
                const auto gf = GridFunction::sampled(lo, hi, grid_n, ground_fn);
                const auto ag = susy::ladder_apply(ann, gf);
                double num = 0.0, den = 0.0;
                for (std::size_t i = 0; i < ag.size(); ++i) {
                    num += std::norm(ag.values[i]);
                    den += std::norm(gf.values[i + 2]);
                }
                f << lvl.order << "," << lvl.order << ",annihilate_ground_rel,"
                  << io::format_double(std::sqrt(num / den) * 2.0 * p.a / chain.ground.s0) << "\n";

                for (int n = lvl.lowest_n(); n <= lvl.lowest_n() + state_cap; ++n) {
                    auto upper = [&](double x) { return susy::partner_state(lvl.order, 1, n, chain.ground, x); };
                    const auto uf = GridFunction::sampled(lo, hi, grid_n, upper);
                    const auto au = susy::ladder_apply(ann, uf);
                    std::complex<double> dot{0.0, 0.0};
                    double na = 0.0, nb = 0.0;
                    for (std::size_t i = 0; i < au.size(); ++i) {
                        const auto target = lvl.state(n, au.x(i));
                        dot += std::conj(au.values[i]) * target;
                        na += std::norm(au.values[i]);
                        nb += std::norm(target);
                    }
                    const double cos_sim = std::abs(dot) / std::sqrt(na * nb);
                    f << lvl.order << "," << n << ",cosine_similarity,"
                      << io::format_double(cos_sim) << "\n";
                }
            }
        }
        log << "chain written to " << out_dir << " (s0=" << io::format_double(chain.ground.s0)
            << ", delta=" << io::format_double(chain.ground.delta) << ")\n";
        return kExitOk;
    } catch (const std::exception& e) {
        return map_error(e, std::cerr);
    }
}

int cmd_legendre(int ell, int n, int samples, std::ostream& out) {
    try {
        if (samples < 2) throw ConfigError("need at least 2 samples");
        out << "theta,re,im\n";
        for (int i = 0; i < samples; ++i) {
            const double theta = -kPi / 2.0 + kPi * i / (samples - 1);
            const auto v = legendre::q_trig({ell, n}, {theta});
            out << io::format_double(theta) << "," << io::format_double(v.real()) << ","
                << io::format_double(v.imag()) << "\n";
        }
        return kExitOk;
    } catch (const std::exception& e) {
        return map_error(e, std::cerr);
    }
}

int cmd_oracle(const extensions::ExtensionParams& p, int n_points, int k,
               std::ostream& out) {
    try {
        oracle::Discretization d;
        d.n_points = n_points;
        d.a = p.a;
        const auto sp = oracle::fd_spectrum_richardson(p, d, k);

        spectral::RootFindConfig cfg;
        const auto analytic = spectral::full_spectrum(p, cfg);
        std::vector<double> reference;
        for (const auto& l : analytic)
            for (int c = 0; c < l.multiplicity; ++c) reference.push_back(l.E);
        if (static_cast<int>(reference.size()) > k) reference.resize(static_cast<std::size_t>(k));

        out << io::oracle_to_json(sp, reference).dump(2) << "\n";
        return kExitOk;
    } catch (const std::exception& e) {
        return map_error(e, std::cerr);
    }
}

}  // namespace sawell::cli
