// Copyright 2026 The Sawell Authors
// SPDX-License-Identifier: Apache-2.0

#include "sawell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#ifdef SAWELL_HAVE_LAPACKE
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>
#endif

#if defined(SAWELL_HAVE_LAPACKE)
extern "C" void openblas_set_num_threads(int) __attribute__((weak));
#endif

namespace sawell::oracle {

namespace {

constexpr int kMaxPoints = 4000;   // dense solves only; refuse beyond this

void check_size(int n) {
    if (n > kMaxPoints)
        throw ConfigError("oracle grid exceeds the dense-solver ceiling of 4000 points");
    if (n < 64) throw ConfigError("oracle grid needs at least 64 points");
}

// The tridiagonalization inside *heev is memory bound; on small core counts
// OpenBLAS threading slows it down, so pin it once.
void pin_blas_threads() {
#if defined(SAWELL_HAVE_LAPACKE)
    static const bool done = [] {
        if (openblas_set_num_threads) openblas_set_num_threads(1);
        return true;
    }();
    (void)done;
#endif
}

std::vector<double> eig_complex(Eigen::MatrixXcd& h, int k, Eigen::MatrixXcd* vectors) {
    pin_blas_threads();
    const int n = static_cast<int>(h.rows());
#ifdef SAWELL_HAVE_LAPACKE
    std::vector<double> w(static_cast<std::size_t>(n));
    const char jobz = vectors ? 'V' : 'N';
    const int info = LAPACKE_zheev(LAPACK_COL_MAJOR, jobz, 'L', n,
                                   h.data(), n, w.data());
    if (info != 0) throw Error("zheev failed");
    if (vectors) *vectors = h.leftCols(k);
    w.resize(static_cast<std::size_t>(std::min(k, n)));
    return w;
#else
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        h, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (vectors) *vectors = es.eigenvectors().leftCols(k);
    std::vector<double> w(es.eigenvalues().data(),
                          es.eigenvalues().data() + std::min<int>(k, n));
    return w;
#endif
}

std::vector<double> eig_real(Eigen::MatrixXd& h, int k, Eigen::MatrixXd* vectors) {
    pin_blas_threads();
    const int n = static_cast<int>(h.rows());
#ifdef SAWELL_HAVE_LAPACKE
    std::vector<double> w(static_cast<std::size_t>(n));
    const char jobz = vectors ? 'V' : 'N';
    const int info = LAPACKE_dsyev(LAPACK_COL_MAJOR, jobz, 'L', n,
                                   h.data(), n, w.data());
    if (info != 0) throw Error("dsyev failed");
    if (vectors) *vectors = h.leftCols(k);
    w.resize(static_cast<std::size_t>(std::min(k, n)));
    return w;
#else
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        h, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (vectors) *vectors = es.eigenvectors().leftCols(k);
    std::vector<double> w(es.eigenvalues().data(),
                          es.eigenvalues().data() + std::min<int>(k, n));
    return w;
#endif
}

// Second-difference matrix with the wall constraints eliminated through ghost
// points. Half-weight wall rows plus the diag(1/sqrt(w)) similarity make the
// result exactly Hermitian for unitary U.
Eigen::MatrixXcd assemble(const ExtensionParams& p, int n) {
    using Complex = std::complex<double>;
    const double a = p.a;
    const double h = 2.0 * a / (n - 1);
    const Eigen::Matrix2cd u = extensions::unitary_from_params(p);
    const Eigen::Matrix2cd pm = Eigen::Matrix2cd::Identity() - u;
    const Eigen::Matrix2cd qm = Complex{0.0, 1.0} * (Eigen::Matrix2cd::Identity() + u);

    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(pm);
    const double smin = svd.singularValues()(1);
    if (smin < 1e-8) {
        if (pm.norm() < 1e-10) {
            // Dirichlet specialization: phi vanishes at both walls
            const int m = n - 2;
            Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(m, m);
            for (int i = 0; i < m; ++i) {
                k(i, i) = 2.0 / (h * h);
                if (i > 0) k(i, i - 1) = -1.0 / (h * h);
                if (i + 1 < m) k(i, i + 1) = -1.0 / (h * h);
            }
            return k;
        }
        throw SingularConstraint("I - U is rank deficient; no specialization applies");
    }

    // (a/h) P (phi1 - g1, g2 - phiN2)^T = Q (phi0, -phiN1)^T, g = ghosts
    const Eigen::Matrix2cd c = (a / h) * pm * Eigen::Vector2cd(-1.0, 1.0).asDiagonal();
    const Eigen::Matrix2cd cinv = c.inverse();
    Eigen::Matrix<Complex, 2, 4> gfrom;   // columns: phi0, phi1, phiN2, phiN1
    gfrom.col(0) = cinv * qm.col(0);
    gfrom.col(3) = cinv * (-qm.col(1));
    gfrom.col(1) = cinv * (-(a / h) * pm.col(0));
    gfrom.col(2) = cinv * ((a / h) * pm.col(1));

    Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        k(i, i) = 2.0 / (h * h);
        if (i > 0) k(i, i - 1) = -1.0 / (h * h);
        if (i + 1 < n) k(i, i + 1) = -1.0 / (h * h);
    }
    const int cols[4] = {0, 1, n - 2, n - 1};
    for (int c4 = 0; c4 < 4; ++c4) {
        k(0, cols[c4]) += -(1.0 / (h * h)) * gfrom(0, c4);
        k(n - 1, cols[c4]) += -(1.0 / (h * h)) * gfrom(1, c4);
    }
    k.row(0) *= 0.5;
    k.row(n - 1) *= 0.5;
    Eigen::VectorXd d = Eigen::VectorXd::Ones(n);
    d(0) = d(n - 1) = std::sqrt(2.0);   // 1/sqrt(1/2)
    return d.asDiagonal() * k * d.asDiagonal();
}

}  // namespace

Eigen::MatrixXcd assemble_hamiltonian(const ExtensionParams& p, int n_points) {
    check_size(n_points);
    return assemble(p, n_points);
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& h, int k) {
    check_size(static_cast<int>(h.rows()));
    Eigen::MatrixXcd work = 0.5 * (h + h.adjoint());
    return eig_complex(work, k, nullptr);
}

OracleSpectrum fd_spectrum(const ExtensionParams& p, const Discretization& d, int k) {
    check_size(d.n_points);
    if (k > d.n_points / 4) throw ConfigError("k must not exceed n_points/4");
    Eigen::MatrixXcd h = assemble(p, d.n_points);
    Eigen::MatrixXcd herm = 0.5 * (h + h.adjoint());
    OracleSpectrum sp;
    sp.h = 2.0 * p.a / (d.n_points - 1);
    sp.eigenvalues = eig_complex(herm, k, nullptr);
    return sp;
}

OracleSpectrum fd_spectrum_richardson(const ExtensionParams& p, const Discretization& d,
                                      int k) {
    OracleSpectrum coarse = fd_spectrum(p, d, k);
    Discretization fine = d;
    fine.n_points = 2 * d.n_points - 1;
    OracleSpectrum f = fd_spectrum(p, fine, k);
    std::vector<double> rich(coarse.eigenvalues.size());
    for (std::size_t i = 0; i < rich.size(); ++i)
        rich[i] = (4.0 * f.eigenvalues[i] - coarse.eigenvalues[i]) / 3.0;
    coarse.richardson = std::move(rich);
    return coarse;
}

namespace {

struct PartnerDomain {
    double lo, hi, h;
    int interior;
};

PartnerDomain partner_domain(const susy::SusyChain& chain, const Discretization& d) {
    const auto [lo, hi] = chain.pole_pair();
    // Poles strictly inside the box leave no single interval carrying the
    // whole domain; such chains are verified by residual checks only.
    if (hi < d.a - 1e-9 || lo > -d.a + 1e-9)
        throw PoleInsideDomain("superpotential poles lie strictly inside the box");
    const double h = (hi - lo) / (d.n_points - 1);
    return {lo, hi, h, d.n_points - 2};
}

Eigen::MatrixXd assemble_partner(const susy::SusyChain& chain, int ell,
                                 const Discretization& d, const PartnerDomain& dom) {
    if (ell < 1 || ell > static_cast<int>(chain.orders.size()))
        throw ConfigError("chain does not hold the requested order");
    const auto& level = chain.orders[static_cast<std::size_t>(ell - 1)];
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(dom.interior, dom.interior);
    for (int i = 0; i < dom.interior; ++i) {
        const double x = dom.lo + (i + 1) * dom.h;
        k(i, i) = 2.0 / (dom.h * dom.h) + level.v2(x);
        if (i > 0) k(i, i - 1) = -1.0 / (dom.h * dom.h);
        if (i + 1 < dom.interior) k(i, i + 1) = -1.0 / (dom.h * dom.h);
    }
    return k;
}

}  // namespace

OracleSpectrum fd_partner_spectrum(const susy::SusyChain& chain, int ell,
                                   const Discretization& d, int k) {
    check_size(d.n_points);
    if (k > d.n_points / 4) throw ConfigError("k must not exceed n_points/4");
    const auto dom = partner_domain(chain, d);
    Eigen::MatrixXd h = assemble_partner(chain, ell, d, dom);
    OracleSpectrum sp;
    sp.h = dom.h;
    sp.eigenvalues = eig_real(h, k, nullptr);
    return sp;
}

OracleSpectrum fd_partner_spectrum_richardson(const susy::SusyChain& chain, int ell,
                                              const Discretization& d, int k) {
    OracleSpectrum coarse = fd_partner_spectrum(chain, ell, d, k);
    Discretization fine = d;
    fine.n_points = 2 * d.n_points - 1;
    OracleSpectrum f = fd_partner_spectrum(chain, ell, fine, k);
    std::vector<double> rich(coarse.eigenvalues.size());
    for (std::size_t i = 0; i < rich.size(); ++i)
        rich[i] = (4.0 * f.eigenvalues[i] - coarse.eigenvalues[i]) / 3.0;
    coarse.richardson = std::move(rich);
    return coarse;
}

GridFunction fd_partner_ground(const susy::SusyChain& chain, int ell,
                               const Discretization& d) {
    check_size(d.n_points);
    const auto dom = partner_domain(chain, d);
    Eigen::MatrixXd h = assemble_partner(chain, ell, d, dom);
    Eigen::MatrixXd vecs;
    eig_real(h, 1, &vecs);
    GridFunction g;
    g.x0 = dom.lo + dom.h;
    g.dx = dom.h;
    g.values.resize(static_cast<std::size_t>(dom.interior));
    for (int i = 0; i < dom.interior; ++i) g.values[static_cast<std::size_t>(i)] = vecs(i, 0);
    return g;
}

double schrodinger_residual(const std::function<double(double)>& V,
                            const std::function<std::complex<double>(double)>& phi,
                            double E, const Discretization& d, double lo, double hi) {
    const int pad = d.order == 4 ? 2 : 1;
    if (d.order != 2 && d.order != 4) throw ConfigError("stencil order must be 2 or 4");
    if (d.n_points < 4 * pad + 8) throw GridTooCoarse("too few points for the stencil");
    const int n = d.n_points;
    const double h = (hi - lo) / (n - 1);

    std::vector<std::complex<double>> f(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) f[static_cast<std::size_t>(i)] = phi(lo + i * h);

    double peak = 0.0;
    for (const auto& v : f) peak = std::max(peak, std::abs(v));
    const double floor_den = 0.01 * std::abs(E) * peak;

    double worst = 0.0;
    for (int i = pad; i < n - pad; ++i) {
        const double x = lo + i * h;
        std::complex<double> dd;
        if (d.order == 2) {
            dd = (f[i - 1] - 2.0 * f[i] + f[i + 1]) / (h * h);
        } else {
            dd = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2])
               / (12.0 * h * h);
        }
        const std::complex<double> r = -dd + V(x) * f[i] - E * f[i];
        const double den = std::max(std::abs(E * f[i]), floor_den);
        if (den > 0.0) worst = std::max(worst, std::abs(r) / den);
    }
    return worst;
}

}  // namespace sawell::oracle
