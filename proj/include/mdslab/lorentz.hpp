#pragma once

#include "mdslab/complex_mat.hpp"
#include "mdslab/errors.hpp"

namespace mdslab {

/// Rest-frame single-resonance oscillator constants. All frequencies are in
/// units of the resonance frequency, so no resonance field appears here.
struct LorentzParams {
    double eps_inf = 1.0;
    double mu_inf = 1.0;
    double omega_pe = 0.0;
    double omega_pm = 0.0;
    double gamma_e = 0.0;
    double gamma_m = 0.0;
};

/// Canonical parameter set used by the bundled presets.
inline constexpr LorentzParams fig2_material{2.0, 1.0, 0.1, 0.05, 0.1, 0.2};

namespace detail {
inline cplx oscillator(double w, double f_inf, double f_p, double damping, const char* which) {
    if (f_p == 0.0) return f_inf;  // no oscillator, no resonance
    const cplx denom = 1.0 - w * w - iu * damping * w;
    if (denom == cplx{0.0, 0.0})
        throw pole_error(std::string("undamped oscillator evaluated on resonance (") + which + ")");
    return f_inf * (1.0 + f_p * f_p / denom);
}
}  // namespace detail

inline cplx lorentz_eps(double w, const LorentzParams& p) {
    return detail::oscillator(w, p.eps_inf, p.omega_pe, p.gamma_e, "eps");
}

inline cplx lorentz_mu(double w, const LorentzParams& p) {
    return detail::oscillator(w, p.mu_inf, p.omega_pm, p.gamma_m, "mu");
}

/// Decaying-wave branch: Im(n) >= 0, and n = sqrt(eps*mu) exactly.
inline cplx refractive_index(cplx eps, cplx mu) { return sqrt_upper(eps * mu); }

struct RestFrameResponse {
    cplx eps;
    cplx mu;
    cplx n;
};

inline RestFrameResponse rest_frame_response(double w, const LorentzParams& p) {
    const cplx eps = lorentz_eps(w, p);
    const cplx mu = lorentz_mu(w, p);
    return {eps, mu, refractive_index(eps, mu)};
}

}  // namespace mdslab
