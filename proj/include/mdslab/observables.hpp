#pragma once

#include <cmath>
#include <limits>
#include <utility>

#include "mdslab/complex_mat.hpp"
#include "mdslab/scattering.hpp"

namespace mdslab {

/// Thermal state of the slab through the single dimensionless ratio
/// t = (resonance quantum)/(k_B * temperature); +infinity encodes T = 0.
struct ThermalEnvironment {
    double t = std::numeric_limits<double>::infinity();

    static ThermalEnvironment zero_temperature() { return {}; }
    bool is_zero_temperature() const { return std::isinf(t); }
};

/// Mean thermal occupation at the Doppler-shifted frequency gamma*w.
/// Underflows cleanly to 0 for large arguments and at zero temperature.
inline double thermal_occupation(double w, double gamma, const ThermalEnvironment& env) {
    if (env.is_zero_temperature()) return 0.0;
    const double x = gamma * w * env.t;
    const double e = std::expm1(x);
    if (!std::isfinite(e)) return 0.0;
    return 1.0 / e;
}

/// <F+ F> = N * (1 - |R|^2 - |T|^2).
inline double noise_flux(double occupation, double absorptance) {
    return occupation * absorptance;
}

/// Squeezing parameters 4*Var - 1 of both output quadratures; the two
/// variances are equal, so S_X = S_Y = 2 <F+ F>.
inline std::pair<double, double> squeezing_parameter(double flux) {
    return {2.0 * flux, 2.0 * flux};
}

struct CoherentInput {
    double alpha_sq = 0.0;  // mean photon number of the incident coherent state
    Polarization pol = Polarization::x;
};

/// Photon-number statistics of the transmitted state:
///   Q = (2 P N A - (N A)^2) / (P + N A),  P = |T|^2 alpha_sq, A = absorptance.
/// Vacuum input on a lossless slab is the removable 0/0, defined as 0.
inline double mandel_q(cplx T, cplx R, const CoherentInput& input, double occupation) {
    const double absorptance = 1.0 - std::norm(T) - std::norm(R);
    const double p = std::norm(T) * input.alpha_sq;
    const double x = occupation * absorptance;
    const double denom = p + x;
    if (denom < 1e-300) return 0.0;
    return (2.0 * p * x - x * x) / denom;
}

struct ObservablePoint {
    double N = 0.0;
    double noise_flux = 0.0;
    double S_X = 0.0;
    double S_Y = 0.0;
    double Q = 0.0;
};

inline ObservablePoint observables_at(const ScatteringResult& sc, double w, double beta,
                                      const ThermalEnvironment& env, const CoherentInput& input) {
    ObservablePoint o;
    o.N = thermal_occupation(w, doppler_factor(beta), env);
    o.noise_flux = noise_flux(o.N, sc.absorptance);
    std::tie(o.S_X, o.S_Y) = squeezing_parameter(o.noise_flux);
    o.Q = mandel_q(sc.T, sc.R, input, o.N);
    return o;
}

}  // namespace mdslab
