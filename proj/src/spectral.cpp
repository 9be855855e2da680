// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#include "sawell/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>

namespace sawell::spectral {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSpuriousFloor = 1e-5;   // roots at/below this are the s = 0 artifact
constexpr double kScanFloor = 1e-6;       // first grid point of the bracket scan

double branch_tol(double s) { return 1e-8 * (1.0 + s * s); }

double energy_of(double s, double a) { return (s / (2.0 * a)) * (s / (2.0 * a)); }

struct Root {
    double s;
    int multiplicity;
};

// Bracketing + bisection roots of f on [floor, xmax], tangential roots by
// |f|-minimization under threshold(x).
std::vector<Root> scan_roots(const std::function<double(double)>& f, double floor,
                             double xmax, const RootFindConfig& cfg,
                             const std::function<double(double)>& threshold) {
    const int n = std::max(8, static_cast<int>(std::ceil((xmax - floor) / cfg.grid_step)));
    const auto samples = scan::sample_grid(f, floor, xmax, n, cfg.policy);
    const double step = (xmax - floor) / n;
    const auto brackets = scan::find_brackets(samples, floor, step);

    std::vector<Root> roots;
    const auto refined = scan::refine_brackets(f, brackets.sign_changes, cfg.tol, cfg.policy);
    for (double s : refined) roots.push_back({s, 1});

    for (const auto& cell : brackets.minima) {
        const double s = scan::minimize_abs(f, cell.lo, cell.hi, cfg.tol);
        if (std::abs(f(s)) <= threshold(s)) roots.push_back({s, 2});
    }

    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.s < b.s; });
    // merge near-coincident refinements
    std::vector<Root> merged;
    for (const auto& r : roots) {
        if (!merged.empty() && std::abs(r.s - merged.back().s) < 1e-9 * (1.0 + r.s))
            merged.back().multiplicity = std::max(merged.back().multiplicity, r.multiplicity);
        else
            merged.push_back(r);
    }
    return merged;
}

std::once_flag g_continuation_checked;

}  // namespace

void RootFindConfig::validate() const {
    if (!(grid_step > 0.0) || !(grid_step < s_max)) throw ConfigError("grid_step must satisfy 0 < grid_step < s_max");
    if (!(tol > 0.0)) throw ConfigError("tol must be positive");
    if (!(r_max > 0.0)) throw ConfigError("r_max must be positive");
    if (!(s_max > 0.0)) throw ConfigError("s_max must be positive");
}

double reduced_det(double s, const ExtensionParams& p) {
    const auto [m0, m1, m2, m3] = p.m;
    const double cp = std::cos(p.psi), sp = std::sin(p.psi);
    return (m0 + cp) * std::sin(s) + 2.0 * s * (m1 - std::cos(s) * sp)
         - s * s * (m0 - cp) * std::sin(s);
}

Complex reduced_det(Complex s, const ExtensionParams& p) {
    const auto [m0, m1, m2, m3] = p.m;
    const double cp = std::cos(p.psi), sp = std::sin(p.psi);
    return (m0 + cp) * std::sin(s) + 2.0 * s * (m1 - std::cos(s) * sp)
         - s * s * (m0 - cp) * std::sin(s);
}

double hyperbolic_det(double r, const ExtensionParams& p) {
    const auto [m0, m1, m2, m3] = p.m;
    const double cp = std::cos(p.psi), sp = std::sin(p.psi);
    return (m0 + cp) * std::sinh(r) + 2.0 * r * (m1 - std::cosh(r) * sp)
         + r * r * (m0 - cp) * std::sinh(r);
}

Complex trace_n(double s, const ExtensionParams& p) {
    const auto [m0, m1, m2, m3] = p.m;
    const Complex i{0.0, 1.0};
    return std::exp(-0.5 * i * (s - 2.0 * p.psi))
         * (-m3 * (s + 1.0) + i * m2 * std::exp(i * s) * (s - 1.0));
}

double quadratic_rhs(double s, const ExtensionParams& p, Sign sign) {
    const auto [m0, m1, m2, m3] = p.m;
    const double cp = std::cos(p.psi), sp = std::sin(p.psi);
    const double den = m0 - cp;
    if (std::abs(den) <= 1e-10)
        throw DegenerateDenominator("m0 ~ cos(psi): use reduced_det root-finding");
    const double num = (m1 - std::cos(s) * sp) / den;
    const double disc = num * num + (m0 + cp) / den * std::sin(s) * std::sin(s);
    if (disc < 0.0) return std::numeric_limits<double>::quiet_NaN();
    return sign == Sign::Plus ? num + std::sqrt(disc) : num - std::sqrt(disc);
}

std::optional<Sign> quadratic_branch_of(double s, const ExtensionParams& p, double tol) {
    try {
        const double lhs = s * std::sin(s);
        for (Sign sign : {Sign::Plus, Sign::Minus}) {
            const double rhs = quadratic_rhs(s, p, sign);
            if (std::isfinite(rhs) && std::abs(lhs - rhs) <= tol * (1.0 + std::abs(lhs) + std::abs(rhs)))
                return sign;
        }
    } catch (const DegenerateDenominator&) {
    }
    return std::nullopt;
}

std::vector<EnergyLevel> positive_levels(const ExtensionParams& p, const RootFindConfig& cfg) {
    cfg.validate();
    auto f = [&p](double s) { return reduced_det(s, p); };
    auto roots = scan_roots(f, kScanFloor, cfg.s_max, cfg, branch_tol);

    std::vector<EnergyLevel> out;
    for (const auto& r : roots) {
        if (r.s <= kSpuriousFloor) continue;   // the universal s = 0 zero
        out.push_back({LevelKind::Positive, r.s, energy_of(r.s, p.a), Branch::Determinant,
                       r.multiplicity});
    }
    return out;
}

void verify_hyperbolic_continuation() {
    std::mt19937_64 rng(0x5a3e11u);
    std::uniform_real_distribution<double> upsi(0.0, kPi), ur(0.05, 25.0);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 100; ++trial) {
        std::array<double, 4> m;
        double norm = 0.0;
        for (auto& mi : m) { mi = gauss(rng); norm += mi * mi; }
        norm = std::sqrt(norm);
        for (auto& mi : m) mi /= norm;
        const auto p = ExtensionParams::checked(upsi(rng), m, 0.5);
        const double r = ur(rng);
        const Complex det = extensions::wave_matrix_pw(Complex{0.0, -r}, p).determinant();
        const Complex expected = -4.0 * std::exp(Complex{0.0, p.psi}) * hyperbolic_det(r, p);
        const double scale = std::max(1.0, std::abs(expected));
        if (std::abs(det - expected) > 1e-9 * scale)
            throw Error("hyperbolic continuation self-test failed");
    }
}

std::vector<EnergyLevel> negative_levels(const ExtensionParams& p, const RootFindConfig& cfg) {
    cfg.validate();
    std::call_once(g_continuation_checked, verify_hyperbolic_continuation);

    auto g = [&p](double r) { return hyperbolic_det(r, p); };
    auto thr = [](double r) {
        return 1e-8 * ((1.0 + r * r) * (1.0 + std::sinh(std::min(r, 700.0)))
                       + r * (1.0 + std::cosh(std::min(r, 700.0))));
    };
    RootFindConfig hcfg = cfg;
    auto roots = scan_roots(g, kScanFloor, cfg.r_max, hcfg, thr);

    std::vector<EnergyLevel> out;
    int count = 0;
    for (const auto& r : roots) {
        if (r.s <= kSpuriousFloor) continue;
        count += r.multiplicity;
        out.push_back({LevelKind::Negative, r.s, -energy_of(r.s, p.a), Branch::Determinant,
                       r.multiplicity});
    }
    if (count > 2)
        throw TooManyNegativeLevels("found more than two hyperbolic roots; numerics bug");
    // ascending in energy, i.e. descending in the hyperbolic root
    std::sort(out.begin(), out.end(),
              [](const EnergyLevel& x, const EnergyLevel& y) { return x.E < y.E; });
    return out;
}

ZeroEnergyResult zero_energy_exists(const ExtensionParams& p) {
    // phi = c1 + c2 x inserted into the wall condition gives K (c1, c2)^T = 0
    const Complex i{0.0, 1.0};
    const auto u = extensions::unitary_from_params(p);
    const double a = p.a;
    Eigen::Vector2cd lhs1, rhs1, lhs2, rhs2;
    lhs1 << -i, i;                          // c1 column
    rhs1 << i, -i;
    lhs2 << Complex{2.0 * a, a}, Complex{2.0 * a, a};   // c2 column
    rhs2 << Complex{2.0 * a, -a}, Complex{2.0 * a, -a};
    Eigen::Matrix2cd k;
    k.col(0) = lhs1 - u * rhs1;
    k.col(1) = lhs2 - u * rhs2;

    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(k);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(1);
    ZeroEnergyResult res;
    res.sigma_min = smin;
    const double tol = 1e-10 * std::max(1.0, smax);
    res.dimension = (smax <= tol ? 2 : (smin <= tol ? 1 : 0));
    res.exists = res.dimension > 0;
    return res;
}

std::vector<EnergyLevel> levels_parity_time(double phi1, double phi2,
                                            const RootFindConfig& cfg, double a) {
    cfg.validate();
    // pole-free forms of s tan(s/2) = -cot(phi2) and s cot(s/2) = cot(phi1)
    auto ev = [phi2](double s) {
        return s * std::sin(s / 2.0) * std::sin(phi2) + std::cos(s / 2.0) * std::cos(phi2);
    };
    auto od = [phi1](double s) {
        return s * std::cos(s / 2.0) * std::sin(phi1) - std::sin(s / 2.0) * std::cos(phi1);
    };
    auto even_roots = scan_roots(ev, kScanFloor, cfg.s_max, cfg, branch_tol);
    auto odd_roots = scan_roots(od, kScanFloor, cfg.s_max, cfg, branch_tol);

    // cross-validate against the determinant of the equivalent extension
    const double theta0 = phi2 - phi1, psi = phi1 + phi2;
    const auto p = extensions::from_theta_angles(theta0, 0.0, 0.0, psi, a);

    std::vector<EnergyLevel> out;
    auto add = [&](const Root& r, Branch b) {
        if (r.s <= kSpuriousFloor) return;
        if (std::abs(reduced_det(r.s, p)) > branch_tol(r.s)) return;
        out.push_back({LevelKind::Positive, r.s, energy_of(r.s, a), b, r.multiplicity});
    };
    for (const auto& r : even_roots) add(r, Branch::ParityEven);
    for (const auto& r : odd_roots) add(r, Branch::ParityOdd);
    std::sort(out.begin(), out.end(),
              [](const EnergyLevel& x, const EnergyLevel& y) { return x.E < y.E; });
    return out;
}

std::vector<EnergyLevel> levels_sin_zero(int count, double a) {
    if (count < 1) throw ConfigError("count must be >= 1");
    std::vector<EnergyLevel> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int n = 1; n <= count; ++n) {
        const double s = n * kPi;
        out.push_back({LevelKind::Positive, s, energy_of(s, a), Branch::SinZero, 1});
    }
    return out;
}

namespace {

// Polish a closed-form candidate against F and classify crossing/touching.
std::optional<Root> validate_candidate(double s0, const ExtensionParams& p,
                                       const RootFindConfig& cfg) {
    auto f = [&p](double s) { return reduced_det(s, p); };
    const double w = cfg.grid_step;
    double s = s0;
    const double flo = f(std::max(kScanFloor, s0 - w)), fhi = f(s0 + w);
    if (flo * fhi < 0.0) {
        double lo = std::max(kScanFloor, s0 - w), hi = s0 + w, fa = flo;
        for (int it = 0; it < 200 && hi - lo > cfg.tol; ++it) {
            const double mid = 0.5 * (lo + hi), fm = f(mid);
            if (fm == 0.0) { lo = hi = mid; break; }
            if (fa * fm < 0.0) hi = mid;
            else { lo = mid; fa = fm; }
        }
        s = 0.5 * (lo + hi);
    } else {
        s = scan::minimize_abs(f, std::max(kScanFloor, s0 - w), s0 + w, cfg.tol);
    }
    if (std::abs(f(s)) > branch_tol(s)) return std::nullopt;
    const double eps = 10.0 * std::sqrt(cfg.tol);
    const int mult = (f(std::max(kScanFloor, s - eps)) * f(s + eps) < 0.0) ? 1 : 2;
    return Root{s, mult};
}

}  // namespace

std::vector<EnergyLevel> levels_omega(double w0, double w1, double w2, double psi,
                                      OmegaBranch branch, const RootFindConfig& cfg,
                                      double a) {
    cfg.validate();
    const auto p = extensions::from_omega_angles(w0, w1, w2, psi, a);

    std::vector<double> candidates;
    if (branch == OmegaBranch::Axis) {
        if (std::abs(std::sin(w1)) > 1e-9)
            throw PreconditionViolated("axis family requires sin(omega1) = 0");
        const double off = w0 + psi;
        for (int n = -1; n * kPi - std::abs(off) <= cfg.s_max; ++n) {
            for (double sgn : {1.0, -1.0}) {
                const double s = n * kPi + sgn * off;
                if (s > kSpuriousFloor && s <= cfg.s_max) candidates.push_back(s);
            }
        }
    } else {
        if (std::abs(std::sin(w2 - psi)) > 1e-9)
            throw PreconditionViolated("aligned family requires sin(omega2 - psi) = 0");
        const double k = std::cos(w1) * std::cos(w0 + psi);
        for (double sgn : {1.0, -1.0}) {
            const double c = sgn * k;
            if (std::abs(c) > 1.0) continue;
            const double base = std::acos(c);   // every branch of the arccos
            for (int n = 0; 2.0 * n * kPi - base <= cfg.s_max; ++n) {
                for (double s : {2.0 * n * kPi + base, 2.0 * n * kPi - base}) {
                    if (s > kSpuriousFloor && s <= cfg.s_max) candidates.push_back(s);
                }
            }
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end(),
                                 [](double x, double y) { return std::abs(x - y) < 1e-12 * (1.0 + x); }),
                     candidates.end());

    const Branch tag = branch == OmegaBranch::Axis ? Branch::OmegaAxis : Branch::OmegaAligned;
    std::vector<EnergyLevel> out;
    for (double c : candidates) {
        if (auto r = validate_candidate(c, p, cfg)) {
            if (!out.empty() && std::abs(out.back().s - r->s) < 1e-9 * (1.0 + r->s)) continue;
            out.push_back({LevelKind::Positive, r->s, energy_of(r->s, a), tag, r->multiplicity});
        }
    }
    return out;
}

std::pair<double, double> omega_offaxis_cos_candidates(double w0, double w1, double w2,
                                                       double psi) {
    if (std::abs(std::cos(w0 + w2)) > 1e-9)
        throw PreconditionViolated("off-axis diagnostic requires cos(omega0 + omega2) = 0");
    const double v = std::sin(w2 - psi) / std::cos(w1);
    return {v, -v};
}

std::vector<EnergyLevel> full_spectrum(const ExtensionParams& p, const RootFindConfig& cfg) {
    std::vector<EnergyLevel> out = negative_levels(p, cfg);
    if (const auto z = zero_energy_exists(p); z.exists)
        out.push_back({LevelKind::Zero, 0.0, 0.0, Branch::Determinant, z.dimension});
    const auto pos = positive_levels(p, cfg);
    out.insert(out.end(), pos.begin(), pos.end());
    std::sort(out.begin(), out.end(),
              [](const EnergyLevel& x, const EnergyLevel& y) { return x.E < y.E; });
    return out;
}

}  // namespace sawell::spectral
