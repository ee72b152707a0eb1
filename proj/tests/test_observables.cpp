#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mdslab/observables.hpp"
#include "test_support.hpp"

using mdslab::cplx;
using mdslab::CoherentInput;
using mdslab::fig2_material;
using mdslab::Polarization;
using mdslab::ThermalEnvironment;
using test_support::check_close;

namespace {
const mdslab::SlabGeometry unit_slab{1.0};
const ThermalEnvironment fig4_env{10.0 / 6.0};
}  // namespace

TEST_CASE("thermal occupation") {
    CHECK(mdslab::thermal_occupation(1.0, 1.0, ThermalEnvironment::zero_temperature()) == 0.0);
    check_close(mdslab::thermal_occupation(1.0, 1.0, {std::log(2.0)}), 1.0, 1e-14);
    check_close(mdslab::thermal_occupation(1.0, 1.0, fig4_env), 0.23285651806098622, 1e-14);
    // overflow-safe underflow
    CHECK(mdslab::thermal_occupation(1.0, 1.0, {1e6}) == 0.0);
    CHECK(mdslab::thermal_occupation(1000.0, 7.0, fig4_env) == 0.0);
}

TEST_CASE("noise flux") {
    CHECK(mdslab::noise_flux(0.5, 0.0) == 0.0);
    CHECK(mdslab::noise_flux(0.0, 0.3) == 0.0);
    check_close(mdslab::noise_flux(0.23285651806098622, 0.13971549569575655),
                0.032533663846878577, 1e-14);
}

TEST_CASE("squeezing parameter doubles the flux, both quadratures") {
    const auto [sx0, sy0] = mdslab::squeezing_parameter(0.0);
    CHECK(sx0 == 0.0);
    CHECK(sy0 == 0.0);
    const auto [sx, sy] = mdslab::squeezing_parameter(0.032533663846878577);
    CHECK(sx == sy);
    check_close(sx, 0.065067327693757153, 1e-14);
}

TEST_CASE("photon statistics of the transmitted state") {
    const CoherentInput input{16.0, Polarization::x};

    // zero temperature keeps the coherent statistics
    CHECK(mdslab::mandel_q({0.8, 0.1}, {0.1, 0.0}, input, 0.0) == 0.0);

    // no absorption keeps the coherent statistics
    CHECK(mdslab::mandel_q({1.0, 0.0}, {0.0, 0.0}, input, 0.7) == 0.0);
    // ... also when the flux balance closes only to rounding
    const cplx T{0.6, 0.0}, R{0.0, 0.8};
    CHECK(std::abs(mdslab::mandel_q(T, R, input, 0.7)) < 1e-15);

    // vacuum input through a lossless slab is the removable 0/0
    CHECK(mdslab::mandel_q({1.0, 0.0}, {0.0, 0.0}, {0.0, Polarization::x}, 0.7) == 0.0);

    // frozen point: resonance, slab at rest, coherent input of 16 photons
    const auto sc = mdslab::sweep_point(fig2_material, unit_slab, 1.0, 0.0, Polarization::x);
    const double n_th = mdslab::thermal_occupation(1.0, 1.0, fig4_env);
    check_close(sc.T2(), 0.76369291210140378, 1e-13);
    check_close(mdslab::mandel_q(sc.T, sc.R, input, n_th), 0.064808152353420497, 1e-12);
}

TEST_CASE("super-Poissonian whenever thermal noise feeds the output") {
    const CoherentInput input{16.0, Polarization::x};
    for (const double beta : {0.0, 0.2, 0.5})
        for (const double w : {0.9, 1.0, 1.1}) {
            const auto sc = mdslab::sweep_point(fig2_material, unit_slab, w, beta, Polarization::x);
            const double n_th =
                mdslab::thermal_occupation(w, mdslab::doppler_factor(beta), fig4_env);
            const double x = n_th * sc.absorptance;
            if (x > 0.0 && 2.0 * sc.T2() * input.alpha_sq > x)
                CHECK(mdslab::mandel_q(sc.T, sc.R, input, n_th) > 0.0);
        }
}

TEST_CASE("near-luminal output returns to the vacuum noise level") {
    const auto sc = mdslab::sweep_point(fig2_material, unit_slab, 1.0, 0.999, Polarization::x);
    const auto o = mdslab::observables_at(sc, 1.0, 0.999, fig4_env, {16.0, Polarization::x});
    CHECK(o.S_X < 1e-2);
    CHECK(o.S_X >= 0.0);
}

TEST_CASE("squeezing decreases monotonically with the temperature ratio") {
    const auto sc = mdslab::sweep_point(fig2_material, unit_slab, 1.0, 0.3, Polarization::x);
    double last = std::numeric_limits<double>::infinity();
    for (const double t : {0.5, 1.0, 10.0 / 6.0, 2.5, 5.0, 10.0}) {
        const auto o = mdslab::observables_at(sc, 1.0, 0.3, {t}, {16.0, Polarization::x});
        CHECK(o.S_X <= last);
        last = o.S_X;
    }
}

TEST_CASE("occupation is evaluated at the boosted frequency") {
    const double w = 1.0, beta = 0.6;
    const auto sc = mdslab::sweep_point(fig2_material, unit_slab, w, beta, Polarization::x);
    REQUIRE(sc.absorptance > 0.0);
    const auto o = mdslab::observables_at(sc, w, beta, fig4_env, {16.0, Polarization::x});
    const double miswired = 2.0 * mdslab::thermal_occupation(w, 1.0, fig4_env) * sc.absorptance;
    CHECK(o.S_X != miswired);
    check_close(o.N, mdslab::thermal_occupation(w, mdslab::doppler_factor(beta), fig4_env),
                1e-16);
}

TEST_CASE("composition in the trivial limits") {
    const mdslab::LorentzParams vacuum{1.0, 1.0, 0.0, 0.0, 0.0, 0.0};
    const auto sc = mdslab::sweep_point(vacuum, unit_slab, 1.0, 0.0, Polarization::x);
    const auto o = mdslab::observables_at(sc, 1.0, 0.0, fig4_env, {16.0, Polarization::x});
    CHECK(std::abs(o.S_X) < 1e-14);
    CHECK(std::abs(o.Q) < 1e-13);
    CHECK(o.S_X == o.S_Y);

    // definitional identity S_X = 2 N A
    const auto sc2 = mdslab::sweep_point(fig2_material, unit_slab, 1.0, 0.4, Polarization::y);
    const auto o2 = mdslab::observables_at(sc2, 1.0, 0.4, fig4_env, {16.0, Polarization::y});
    CHECK(std::abs(o2.S_X - 2.0 * o2.N * sc2.absorptance) <= 1e-14);
}
