#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>

#include "mdslab/complex_mat.hpp"
#include "mdslab/errors.hpp"
#include "mdslab/kinematics.hpp"

namespace mdslab {

inline constexpr double degenerate_block_tolerance = 1e-14;
inline constexpr double lossless_kappa_tolerance = 1e-14;
inline constexpr double green_pole_tolerance = 1e-12;

/// Laboratory-frame constitutive tensors for velocity along y and wave
/// vector (0, 0, k_z). Only the xx, yy, zz and zy entries are populated;
/// both tensors share the same dimensionless matrix factor.
///
/// The zy coupling carries k_z/w; the on-shell overload fixes it at the
/// propagating value k_z = n_eff*w, where it reduces to n_eff*m/(alpha*n^2).
inline std::pair<Mat3, Mat3> effective_tensors(cplx eps, cplx mu, const Kinematics& kin,
                                               cplx k_z, double w) {
    const cplx n2 = eps * mu;
    const cplx diag = (kin.alpha * kin.alpha * n2 - kin.m * kin.m) / (kin.alpha * n2);
    const cplx zy = (k_z / w) * kin.m / (kin.alpha * n2);
    Mat3 factor;
    factor(0, 0) = diag;
    factor(1, 1) = 1.0;
    factor(2, 2) = diag;
    factor(2, 1) = zy;
    return {eps * factor, mu * factor};
}

inline std::pair<Mat3, Mat3> effective_tensors(cplx eps, cplx mu, const Kinematics& kin,
                                               double w) {
    return effective_tensors(eps, mu, kin, kin.n_eff * w, w);
}

/// Hermitian matrix X = (i/2) * conj(T - adj(T)), elementwise
/// X_ij = (i/2) * (conj(T_ij) - T_ji).
inline Mat3 antihermitian_part(const Mat3& t) {
    Mat3 x;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) x(r, c) = 0.5 * iu * (std::conj(t(r, c)) - t(c, r));
    return x;
}

/// Closed-form Hermitian square root for the xx + (yy,zz,zy) block pattern:
/// S*adj(S) = X. Defined only where X is positive semidefinite; reports a
/// non-semidefinite block otherwise. A vanishing zy entry degenerates to
/// elementwise roots of the diagonal.
inline Mat3 hermitian_block_sqrt(const Mat3& x) {
    const double xx = x(0, 0).real();
    const double a = x(1, 1).real();
    const double c = x(2, 2).real();
    const cplx b = x(2, 1);

    const double scale = std::max({std::abs(xx), std::abs(a), std::abs(c), std::abs(b), 1e-30});
    const double negtol = 1e-13 * scale;
    if (xx < -negtol || a < -negtol || c < -negtol)
        throw nonpassive_error("matrix root: negative diagonal in the absorption tensor");

    Mat3 s;
    s(0, 0) = std::sqrt(std::max(xx, 0.0));
    if (std::abs(b) < degenerate_block_tolerance) {
        s(1, 1) = std::sqrt(std::max(a, 0.0));
        s(2, 2) = std::sqrt(std::max(c, 0.0));
        return s;
    }

    const double gap = std::hypot(a - c, 2.0 * std::abs(b));
    const double lam_lo = 0.5 * (a + c - gap);
    const double lam_hi = 0.5 * (a + c + gap);
    if (lam_lo < -negtol)
        throw nonpassive_error("matrix root: absorption block is not positive semidefinite");
    const double root_lo = std::sqrt(std::max(lam_lo, 0.0));
    const double root_hi = std::sqrt(lam_hi);
    const double t = root_lo + root_hi;
    s(1, 1) = (a + root_lo * root_hi) / t;
    s(2, 2) = (c + root_lo * root_hi) / t;
    s(2, 1) = b / t;
    s(1, 2) = std::conj(b) / t;
    return s;
}

/// Root of the electric absorption tensor: S*adj(S) = X_e.
inline Mat3 noise_root_electric(const Mat3& eps_eff) {
    return hermitian_block_sqrt(antihermitian_part(eps_eff));
}

/// Root of the magnetic absorption tensor. X_m is negative semidefinite for
/// passive media, so the meaningful root satisfies S*adj(S) = -X_m.
inline Mat3 noise_root_magnetic(const Mat3& mu_eff_inv) {
    return hermitian_block_sqrt(-antihermitian_part(mu_eff_inv));
}

/// Noise-coupling strengths and the mode normalizations.
///
/// E_e and E_m are the squared norms of the electric and magnetic coupling
/// rows, written through the Hermitian absorption tensors:
///   E_e = X_e,yy + |f|^2 X_e,zz - 2 Re(f X_e,zy),  f = m n_eff/(eps alpha mu_eff,xx)
///   E_m = -X_m,yy
/// On the positive-semidefinite domain these coincide with the root-element
/// combinations |e22 - f e32|^2 + |e23 - f e33|^2 and |m22|^2 + |m23|^2; this
/// form stays exact where the root does not exist, which is what preserves
/// the output commutators (the absorption row norms equal the absorptance).
struct CouplingConstants {
    double E_e = 0.0;
    double E_m = 0.0;
    double kappa_xi = 0.0;        // kappa * xi, finite in the lossless limit
    double kappa_xi_prime = 0.0;  // kappa * xi'
    double xi = 0.0;              // defined only for kappa > 0
    double xi_prime = 0.0;
    bool lossless = false;        // true when xi/xi' are not defined
};

inline CouplingConstants coupling_constants(const Mat3& x_e, const Mat3& x_m,
                                            const Kinematics& kin, cplx eps, cplx mu_eff_xx) {
    const cplx f = kin.m * kin.n_eff / (eps * kin.alpha * mu_eff_xx);
    CouplingConstants cc;
    cc.E_e = x_e(1, 1).real() + std::norm(f) * x_e(2, 2).real() - 2.0 * (f * x_e(2, 1)).real();
    cc.E_m = -x_m(1, 1).real();

    const double n_abs2 = std::norm(kin.n_eff);
    const double eps_xx_im = x_e(0, 0).real();       // Im(eps_eff,xx)
    const double mu_inv_xx_im = x_m(0, 0).real();    // Im(mu_eff_inv,xx), <= 0 for passive media
    cc.kappa_xi = 0.5 * (eps_xx_im + n_abs2 * cc.E_m);
    cc.kappa_xi_prime = 0.5 * (cc.E_e - n_abs2 * mu_inv_xx_im);

    if (kin.kappa < lossless_kappa_tolerance) {
        cc.lossless = true;
    } else {
        cc.xi = cc.kappa_xi / kin.kappa;
        cc.xi_prime = cc.kappa_xi_prime / kin.kappa;
    }
    return cc;
}

/// Everything the scattering layer needs at one (material, w, beta) point.
/// The matrix roots are absent where the on-shell absorption blocks are
/// indefinite; the coupling constants never depend on them.
struct EffectiveMedium {
    Mat3 eps_eff;
    Mat3 mu_eff;
    Mat3 mu_eff_inv;
    Mat3 x_e;  // (i/2) conj(eps_eff - adj(eps_eff))
    Mat3 x_m;
    std::optional<Mat3> sqrt_eps_I;
    std::optional<Mat3> sqrt_mu_inv_I;
    CouplingConstants coupling;
    cplx zeta_x;  // mu_eff,yy
    cplx zeta_y;  // mu_eff,xx
};

inline EffectiveMedium make_effective_medium(cplx eps, cplx mu, const Kinematics& kin, double w) {
    EffectiveMedium em;
    std::tie(em.eps_eff, em.mu_eff) = effective_tensors(eps, mu, kin, w);
    em.mu_eff_inv = em.mu_eff.inverse();
    em.x_e = antihermitian_part(em.eps_eff);
    em.x_m = antihermitian_part(em.mu_eff_inv);
    try {
        em.sqrt_eps_I = hermitian_block_sqrt(em.x_e);
    } catch (const nonpassive_error&) {
    }
    try {
        em.sqrt_mu_inv_I = hermitian_block_sqrt(-em.x_m);
    } catch (const nonpassive_error&) {
    }
    em.zeta_x = em.mu_eff(1, 1);
    em.zeta_y = em.mu_eff(0, 0);
    em.coupling = coupling_constants(em.x_e, em.x_m, kin, eps, em.mu_eff(0, 0));
    return em;
}

/// Exact inverse of the wave operator kbar*inv(mu_eff)*kbar + w^2*eps_eff
/// for k = (0, 0, k_z). The operator couples only (z <- y), so the inverse
/// has a single zy corner and a pole-free zz entry.
inline Mat3 green_tensor_reciprocal(cplx k_z, double w, cplx eps, cplx mu,
                                    const Kinematics& kin) {
    const cplx n2 = eps * mu;
    const cplx alpha = kin.alpha;
    const cplx m = kin.m;
    const double w2 = w * w;
    const cplx pole = k_z * k_z * alpha + w2 * m * m - n2 * w2 * alpha * alpha;
    const cplx diag = (alpha * alpha * n2 - m * m) / (alpha * n2);  // eps_eff,zz / eps
    if (std::abs(pole) < green_pole_tolerance || std::abs(w2 * eps * diag) < green_pole_tolerance)
        throw pole_error("reciprocal-space kernel evaluated at a propagating pole");
    const cplx scale = w2 * eps * pole;
    Mat3 g;
    g(0, 0) = -n2 * w2 * alpha / scale;
    g(1, 1) = (w2 * m * m - n2 * w2 * alpha * alpha) / scale;
    g(2, 1) = w * m * k_z / scale;
    g(2, 2) = 1.0 / (w2 * eps * diag);
    return g;
}

/// Propagating (pole) part of the coordinate-space kernel with
/// k = n_eff*w; symmetric in (z, z') through the |z - z'| dependence.
inline Mat3 green_tensor_coordinate(double z, double z_prime, double w, cplx eps, cplx mu,
                                    const Kinematics& kin) {
    const cplx n2 = eps * mu;
    const cplx k = kin.n_eff * w;
    const cplx mu_eff_xx = mu * (kin.alpha * kin.alpha * n2 - kin.m * kin.m) / (kin.alpha * n2);
    const cplx phase = std::exp(iu * k * std::abs(z - z_prime));
    Mat3 g;
    g(0, 0) = -iu * mu / (2.0 * k);
    g(1, 1) = -iu * mu_eff_xx / (2.0 * k);
    g(1, 2) = iu * kin.m / (2.0 * kin.alpha * eps * w);
    g(2, 1) = g(1, 2);
    g(2, 2) = iu * (kin.n_eff * kin.n_eff - n2 * kin.alpha * kin.alpha) /
              (2.0 * kin.alpha * eps * k);
    return phase * g;
}

}  // namespace mdslab
