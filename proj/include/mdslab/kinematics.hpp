#pragma once

#include <cmath>
#include <tuple>

#include "mdslab/complex_mat.hpp"
#include "mdslab/errors.hpp"

namespace mdslab {

inline constexpr double cherenkov_tolerance = 1e-12;

/// Relativistic parameters of the slab moving parallel to its faces.
/// n_eff is the laboratory-frame index gamma*sqrt(n^2 - beta^2) on the
/// Im >= 0 branch; eta/kappa are its real and imaginary parts.
struct Kinematics {
    double beta = 0.0;
    double gamma_lorentz = 1.0;
    cplx alpha{1.0, 0.0};
    cplx m{0.0, 0.0};
    cplx n_eff{1.0, 0.0};
    double eta = 1.0;
    double kappa = 0.0;
};

inline double doppler_factor(double beta) {
    if (!(std::abs(beta) < 1.0)) throw error("speed ratio must satisfy |beta| < 1");
    return 1.0 / std::sqrt(1.0 - beta * beta);
}

/// gamma, alpha = (1-b^2)/(1-n^2 b^2), m = b(n^2-1)/(1-n^2 b^2).
/// The shared denominator vanishes only for effectively lossless media at
/// the Cherenkov condition n*beta = 1.
inline std::tuple<double, cplx, cplx> kinematic_params(cplx n, double beta) {
    const double gamma = doppler_factor(beta);
    const cplx n2 = n * n;
    const cplx denom = 1.0 - n2 * beta * beta;
    if (std::abs(denom) < cherenkov_tolerance)
        throw cherenkov_error("kinematic parameters singular: n*beta at the Cherenkov condition");
    const cplx alpha = (1.0 - beta * beta) / denom;
    const cplx m = beta * (n2 - 1.0) / denom;
    return {gamma, alpha, m};
}

inline cplx effective_index(cplx n, double beta) {
    const double gamma = doppler_factor(beta);
    return gamma * sqrt_upper(n * n - beta * beta);
}

inline Kinematics make_kinematics(cplx n, double beta) {
    Kinematics k;
    k.beta = beta;
    std::tie(k.gamma_lorentz, k.alpha, k.m) = kinematic_params(n, beta);
    k.n_eff = effective_index(n, beta);
    k.eta = k.n_eff.real();
    k.kappa = k.n_eff.imag();
    return k;
}

}  // namespace mdslab
