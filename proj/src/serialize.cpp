// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#include "sawell/serialize.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace sawell::io {

std::string format_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string_view kind_name(spectral::LevelKind k) {
    switch (k) {
        case spectral::LevelKind::Positive: return "positive";
        case spectral::LevelKind::Zero: return "zero";
        case spectral::LevelKind::Negative: return "negative";
    }
    return "positive";
}

std::string_view branch_name(spectral::Branch b) {
    using spectral::Branch;
    switch (b) {
        case Branch::Determinant: return "determinant";
        case Branch::QuadraticPlus: return "quadratic_plus";
        case Branch::QuadraticMinus: return "quadratic_minus";
        case Branch::ParityEven: return "parity_even";
        case Branch::ParityOdd: return "parity_odd";
        case Branch::SinZero: return "sin_zero";
        case Branch::OmegaAxis: return "omega_axis";
        case Branch::OmegaAligned: return "omega_aligned";
    }
    return "determinant";
}

spectral::LevelKind kind_from_name(std::string_view s) {
    if (s == "positive") return spectral::LevelKind::Positive;
    if (s == "zero") return spectral::LevelKind::Zero;
    if (s == "negative") return spectral::LevelKind::Negative;
    throw Error("unknown level kind: " + std::string(s));
}

spectral::Branch branch_from_name(std::string_view s) {
    using spectral::Branch;
    if (s == "determinant") return Branch::Determinant;
    if (s == "quadratic_plus") return Branch::QuadraticPlus;
    if (s == "quadratic_minus") return Branch::QuadraticMinus;
    if (s == "parity_even") return Branch::ParityEven;
    if (s == "parity_odd") return Branch::ParityOdd;
    if (s == "sin_zero") return Branch::SinZero;
    if (s == "omega_axis") return Branch::OmegaAxis;
    if (s == "omega_aligned") return Branch::OmegaAligned;
    throw Error("unknown branch: " + std::string(s));
}

json params_to_json(const extensions::ExtensionParams& p) {
    return json{{"psi", p.psi}, {"m", p.m}, {"a", p.a}};
}

extensions::ExtensionParams params_from_json(const json& j) {
    const double a = j.value("a", 0.5);
    if (j.contains("parametrization")) {
        const std::string chart = j.at("parametrization").get<std::string>();
        const auto angles = j.at("angles").get<std::vector<double>>();
        const double psi = j.at("psi").get<double>();
        if (chart == "theta") {
            if (angles.size() != 3) throw Error("theta chart needs 3 angles");
            return extensions::from_theta_angles(angles[0], angles[1], angles[2], psi, a);
        }
        if (chart == "beta") {
            if (angles.size() != 2) throw Error("beta chart needs 2 angles");
            return extensions::from_beta_angles(angles[0], angles[1], psi, j.value("n", 1), a);
        }
        if (chart == "omega") {
            if (angles.size() != 3) throw Error("omega chart needs 3 angles");
            return extensions::from_omega_angles(angles[0], angles[1], angles[2], psi, a);
        }
        throw Error("unknown parametrization: " + chart);
    }
    const auto m = j.at("m").get<std::array<double, 4>>();
    return extensions::ExtensionParams::checked(j.at("psi").get<double>(), m, a);
}

json levels_to_json(std::span<const spectral::EnergyLevel> levels) {
    json arr = json::array();
    for (const auto& l : levels) {
        arr.push_back(json{{"kind", kind_name(l.kind)},
                           {"s", l.s},
                           {"E", l.E},
                           {"branch", branch_name(l.branch)},
                           {"multiplicity", l.multiplicity}});
    }
    return json{{"levels", std::move(arr)}};
}

std::vector<spectral::EnergyLevel> levels_from_json(const json& j) {
    std::vector<spectral::EnergyLevel> out;
    for (const auto& e : j.at("levels")) {
        out.push_back({kind_from_name(e.at("kind").get<std::string>()),
                       e.at("s").get<double>(),
                       e.at("E").get<double>(),
                       branch_from_name(e.at("branch").get<std::string>()),
                       e.at("multiplicity").get<int>()});
    }
    return out;
}

std::string levels_to_csv(std::span<const spectral::EnergyLevel> levels) {
    std::string out = "kind,s_or_r,E,branch,multiplicity\n";
    for (const auto& l : levels) {
        out += std::string(kind_name(l.kind)) + "," + format_double(l.s) + ","
             + format_double(l.E) + "," + std::string(branch_name(l.branch)) + ","
             + std::to_string(l.multiplicity) + "\n";
    }
    return out;
}

json eigenfunction_to_json(const eigenfunctions::Eigenfunction& f) {
    return json{{"A", {f.c.A.real(), f.c.A.imag()}},
                {"B", {f.c.B.real(), f.c.B.imag()}},
                {"s", f.c.s},
                {"a", f.a},
                {"scale", f.scale}};
}

eigenfunctions::Eigenfunction eigenfunction_from_json(const json& j) {
    const auto a2 = j.at("A").get<std::array<double, 2>>();
    const auto b2 = j.at("B").get<std::array<double, 2>>();
    return {{std::complex<double>{a2[0], a2[1]}, std::complex<double>{b2[0], b2[1]},
             j.at("s").get<double>()},
            j.at("a").get<double>(),
            j.at("scale").get<double>()};
}

std::string eigenfunction_to_csv(const eigenfunctions::Eigenfunction& f,
                                 double lo, double hi, int n) {
    std::string out = "x,re_phi,im_phi\n";
    const double h = n > 1 ? (hi - lo) / (n - 1) : 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = lo + i * h;
        const auto v = f(x);
        out += format_double(x) + "," + format_double(v.real()) + ","
             + format_double(v.imag()) + "\n";
    }
    return out;
}

json chain_to_json(const susy::SusyChain& chain, int n_cap) {
    json orders = json::array();
    for (const auto& lvl : chain.orders) {
        json table = json::array();
        for (int n = lvl.lowest_n(); n <= lvl.lowest_n() + n_cap; ++n)
            table.push_back(json{{"n", n}, {"E", lvl.energy(n)}});
        orders.push_back(json{{"order", lvl.order}, {"energies", std::move(table)}});
    }
    const auto poles = chain.pole_pair();
    return json{{"base", params_to_json(chain.base)},
                {"s0", chain.ground.s0},
                {"delta", chain.ground.delta},
                {"phase", chain.ground.phase},
                {"poles", {poles.first, poles.second}},
                {"orders", std::move(orders)}};
}

json oracle_to_json(const oracle::OracleSpectrum& sp, std::span<const double> reference) {
    json j{{"eigenvalues", sp.eigenvalues}, {"h", sp.h}};
    if (sp.richardson) j["extrapolated"] = *sp.richardson;
    if (!reference.empty()) {
        const auto& best = sp.richardson ? *sp.richardson : sp.eigenvalues;
        json cmp = json::array();
        const std::size_t k = std::min(best.size(), reference.size());
        for (std::size_t i = 0; i < k; ++i) {
            const double denom = std::max(1.0, std::abs(reference[i]));
            cmp.push_back(json{{"analytic", reference[i]},
                               {"oracle", best[i]},
                               {"rel_delta", (best[i] - reference[i]) / denom}});
        }
        j["comparison"] = std::move(cmp);
    }
    return j;
}

}  // namespace sawell::io
