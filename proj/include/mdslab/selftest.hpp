#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "mdslab/effective_medium.hpp"
#include "mdslab/kinematics.hpp"
#include "mdslab/lorentz.hpp"
#include "mdslab/scattering.hpp"

namespace mdslab {

struct SuiteResult {
    std::string name;
    std::size_t samples = 0;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SelftestReport {
    std::vector<SuiteResult> suites;

    bool all_pass() const {
        for (const auto& s : suites)
            if (!s.pass) return false;
        return true;
    }
};

namespace selftest_detail {

inline double grid_value(double lo, double hi, std::size_t i, std::size_t count) {
    if (count <= 1) return lo;
    return lo + static_cast<double>(i) * (hi - lo) / static_cast<double>(count - 1);
}

inline SuiteResult finish(std::string name, std::size_t samples, double dev, double tol) {
    return {std::move(name), samples, dev, tol, dev < tol};
}

}  // namespace selftest_detail

/// Closed-form coefficients vs the interface/propagation composition over a
/// (w, beta) grid, both polarizations, including shifted normalizations.
inline SuiteResult suite_oracle_equivalence(std::size_t nw = 100, std::size_t nb = 100) {
    using namespace selftest_detail;
    double dev = 0.0;
    std::size_t samples = 0;
    for (std::size_t i = 0; i < nw; ++i) {
        const double w = grid_value(0.5, 2.0, i, nw);
        for (std::size_t j = 0; j < nb; ++j) {
            const double beta = grid_value(-0.95, 0.95, j, nb);
            const MediumPoint p = evaluate_medium(fig2_material, w, beta);
            for (const cplx zeta : {p.med.zeta_x, p.med.zeta_y}) {
                const auto [Rc, Tc] = fresnel_slab(p.kin.n_eff, zeta, w, 1.0);
                const auto [Rt, Tt] = transfer_matrix_rt(p.kin.n_eff, zeta, w, 1.0);
                const auto [Rs, Ts] = transfer_matrix_rt(p.kin.n_eff, zeta, w, 1.0, 2.7, 0.3);
                dev = std::max({dev, std::abs(Rc - Rt), std::abs(Tc - Tt), std::abs(Rc - Rs),
                                std::abs(Tc - Ts)});
                ++samples;
            }
        }
    }
    return finish("oracle-equivalence", samples, dev, 1e-10);
}

/// |R|^2 and |T|^2 must be even in beta.
inline SuiteResult suite_beta_parity(std::size_t nw = 50, std::size_t nb = 50) {
    using namespace selftest_detail;
    double dev = 0.0;
    std::size_t samples = 0;
    const SlabGeometry geom{1.0};
    for (std::size_t i = 0; i < nw; ++i) {
        const double w = grid_value(0.5, 2.0, i, nw);
        for (std::size_t j = 0; j < nb; ++j) {
            const double beta = grid_value(0.0, 0.95, j, nb);
            for (const Polarization pol : {Polarization::x, Polarization::y}) {
                const ScatteringResult fwd = sweep_point(fig2_material, geom, w, beta, pol);
                const ScatteringResult bwd = sweep_point(fig2_material, geom, w, -beta, pol);
                dev = std::max({dev, std::abs(fwd.R2() - bwd.R2()), std::abs(fwd.T2() - bwd.T2())});
                ++samples;
            }
        }
    }
    return finish("beta-parity", samples, dev, 1e-12);
}

/// Commutator preservation: both row norms of the noise-coupling matrix
/// equal the absorptance wherever absorption is resolvable. The corruption
/// argument scales one matrix entry and exists as a negative-control hook.
inline SuiteResult suite_row_norm(std::size_t nw = 100, std::size_t nb = 100,
                                  double corruption = 0.0) {
    using namespace selftest_detail;
    double dev = 0.0;
    std::size_t samples = 0;
    for (std::size_t i = 0; i < nw; ++i) {
        const double w = grid_value(0.5, 2.0, i, nw);
        for (std::size_t j = 0; j < nb; ++j) {
            const double beta = grid_value(-0.95, 0.95, j, nb);
            const MediumPoint p = evaluate_medium(fig2_material, w, beta);
            for (const Polarization pol : {Polarization::x, Polarization::y}) {
                const cplx zeta = (pol == Polarization::x) ? p.med.zeta_x : p.med.zeta_y;
                const auto [R, T] = fresnel_slab(p.kin.n_eff, zeta, w, 1.0);
                const double absorptance = 1.0 - std::norm(R) - std::norm(T);
                if (absorptance <= 1e-6) continue;
                AbsorptionMatrix am = absorption_matrix(p.med, p.kin, w, 1.0, pol);
                am.entries(0, 0) *= (1.0 + corruption);
                for (int r = 0; r < 2; ++r)
                    dev = std::max(dev, std::abs(am.row_norm(r) - absorptance) / absorptance);
                ++samples;
            }
        }
    }
    return finish("absorption-row-norm", samples, dev, 1e-8);
}

/// Root product identity over random passive parameter triples drawn from
/// the domain where the on-shell absorption blocks are semidefinite.
inline SuiteResult suite_sqrt_product(std::size_t count = 1000) {
    using namespace selftest_detail;
    std::mt19937 rng(20240917u);
    std::uniform_real_distribution<double> re_eps(1.0, 2.0), im_eps(0.6, 1.4);
    std::uniform_real_distribution<double> re_mu(0.9, 1.6), im_mu(0.5, 1.2);
    std::uniform_real_distribution<double> beta_dist(-0.2, 0.2);
    double dev = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const cplx eps{re_eps(rng), im_eps(rng)};
        const cplx mu{re_mu(rng), im_mu(rng)};
        const Kinematics kin = make_kinematics(refractive_index(eps, mu), beta_dist(rng));
        const auto [eps_eff, mu_eff] = effective_tensors(eps, mu, kin, 1.0);
        const Mat3 x_e = antihermitian_part(eps_eff);
        const Mat3 x_m = antihermitian_part(mu_eff.inverse());
        const Mat3 se = noise_root_electric(eps_eff);
        const Mat3 sm = noise_root_magnetic(mu_eff.inverse());
        dev = std::max({dev, max_abs_diff(se * se.adjoint(), x_e),
                        max_abs_diff(sm * sm.adjoint(), -x_m)});
    }
    return finish("sqrt-product-identity", count, dev, 1e-10);
}

/// The reciprocal-space kernel against its defining identity at random
/// (k_z, w, beta) samples, away from the propagating pole.
inline SuiteResult suite_helmholtz(std::size_t count = 100) {
    using namespace selftest_detail;
    std::mt19937 rng(7151321u);
    std::uniform_real_distribution<double> w_dist(0.5, 2.0), beta_dist(-0.9, 0.9),
        kz_dist(-3.0, 3.0);
    double dev = 0.0;
    std::size_t done = 0;
    while (done < count) {
        const double w = w_dist(rng);
        const double beta = beta_dist(rng);
        const cplx k_z = kz_dist(rng);
        const RestFrameResponse rf = rest_frame_response(w, fig2_material);
        const Kinematics kin = make_kinematics(rf.n, beta);
        if (std::abs(k_z * k_z - kin.n_eff * kin.n_eff * w * w) < 1e-2) continue;
        const auto [eps_eff, mu_eff] = effective_tensors(rf.eps, rf.mu, kin, k_z, w);
        const Mat3 g = green_tensor_reciprocal(k_z, w, rf.eps, rf.mu, kin);
        Mat3 kbar;
        kbar(0, 1) = -k_z;
        kbar(1, 0) = k_z;
        const Mat3 op = kbar * mu_eff.inverse() * kbar + cplx(w * w) * eps_eff;
        dev = std::max(dev, max_abs_diff(op * g, Mat3::identity()));
        ++done;
    }
    return finish("helmholtz-identity", count, dev, 1e-10);
}

/// Without damping the slab conserves flux: |R|^2 + |T|^2 = 1.
inline SuiteResult suite_lossless_conservation(std::size_t nw = 50, std::size_t nb = 21) {
    using namespace selftest_detail;
    const LorentzParams lossless{2.0, 1.0, 0.1, 0.05, 0.0, 0.0};
    double dev = 0.0;
    std::size_t samples = 0;
    for (std::size_t i = 0; i < nw; ++i) {
        const double w = grid_value(0.5, 2.0, i, nw);
        if (std::abs(w - 1.0) < 1e-9) continue;
        const RestFrameResponse rf = rest_frame_response(w, lossless);
        for (std::size_t j = 0; j < nb; ++j) {
            const double beta = grid_value(-0.9, 0.9, j, nb);
            const cplx n_eff = effective_index(rf.n, beta);
            const cplx zeta_y = n_eff * n_eff / rf.eps;
            for (const cplx zeta : {rf.mu, zeta_y}) {
                const auto [R, T] = fresnel_slab(n_eff, zeta, w, 1.0);
                dev = std::max(dev, std::abs(1.0 - std::norm(R) - std::norm(T)));
                ++samples;
            }
        }
    }
    return finish("lossless-conservation", samples, dev, 1e-10);
}

/// Runs every suite; a nonzero corruption makes the row-norm suite fail by
/// construction (negative control for the test harness).
inline SelftestReport run_selftest(double absorption_corruption = 0.0) {
    SelftestReport report;
    report.suites.push_back(suite_oracle_equivalence());
    report.suites.push_back(suite_beta_parity());
    report.suites.push_back(suite_row_norm(100, 100, absorption_corruption));
    report.suites.push_back(suite_sqrt_product());
    report.suites.push_back(suite_helmholtz());
    report.suites.push_back(suite_lossless_conservation());
    return report;
}

}  // namespace mdslab
