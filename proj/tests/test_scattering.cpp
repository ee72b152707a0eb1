#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mdslab/scattering.hpp"
#include "mdslab/selftest.hpp"
#include "test_support.hpp"

using mdslab::cplx;
using mdslab::fig2_material;
using mdslab::Polarization;
using test_support::airy_stationary_slab;
using test_support::check_close;

namespace {
const mdslab::SlabGeometry unit_slab{1.0};
}

TEST_CASE("vacuum slab is transparent") {
    const auto [R, T] = mdslab::fresnel_slab(1.0, 1.0, 0.8, 1.0);
    CHECK(std::abs(R) < 1e-15);
    CHECK(std::abs(T - 1.0) < 1e-15);

    const auto [Rt, Tt] = mdslab::transfer_matrix_rt(1.0, 1.0, 0.8, 1.0);
    CHECK(std::abs(Rt) < 1e-15);
    CHECK(std::abs(Tt - 1.0) < 1e-15);
}

TEST_CASE("lossless interference transparency") {
    // n = 2, mu = 1 at rest; a full round-trip phase makes the slab invisible
    const double w = 3.14159265358979323846 / 2.0;
    const auto [R, T] = mdslab::fresnel_slab(2.0, 1.0, w, 1.0);
    CHECK(std::abs(R) < 1e-14);
    check_close(std::norm(T), 1.0, 1e-14);
}

TEST_CASE("interface coefficients") {
    const auto vac = mdslab::interface_coefficients(1.0, 1.0);
    CHECK(std::abs(vac.r12) == 0.0);
    CHECK(vac.t12 == cplx{1.0, 0.0});
    CHECK(vac.t21 == cplx{1.0, 0.0});

    const auto glass = mdslab::interface_coefficients(3.0, 1.0);
    check_close(glass.r12, cplx{-0.5, 0.0}, 1e-15);
    check_close(glass.t12, cplx{0.5, 0.0}, 1e-15);
    check_close(glass.t21, cplx{1.5, 0.0}, 1e-15);

    const auto p = mdslab::evaluate_medium(fig2_material, 1.0, 0.5);
    const auto icx = mdslab::interface_coefficients(p.kin.n_eff, p.med.zeta_x);
    check_close(icx.r12, cplx{-0.21043160379917848, -0.024628388014866898}, 1e-13);
    check_close(icx.t12, cplx{0.78956839620082152, -0.024628388014866898}, 1e-13);
    check_close(icx.t21, cplx{1.2104316037991785, 0.024628388014866898}, 1e-13);
    const auto icy = mdslab::interface_coefficients(p.kin.n_eff, p.med.zeta_y);
    check_close(icy.r12, cplx{-0.13475694043538229, -0.017499934693560721}, 1e-13);
    check_close(icy.t12, cplx{0.86524305956461771, -0.017499934693560721}, 1e-13);
    check_close(icy.t21, cplx{1.1347569404353823, 0.017499934693560721}, 1e-13);
}

TEST_CASE("frozen slab coefficients") {
    const auto p0 = mdslab::evaluate_medium(fig2_material, 1.0, 0.0);
    const auto [R0, T0] = mdslab::fresnel_slab(p0.kin.n_eff, p0.med.zeta_x, 1.0, 1.0);
    check_close(R0, cplx{-0.16281605364010813, 0.26473104253166289}, 1e-13);
    check_close(T0, cplx{0.80156525395161700, 0.34811787624148738}, 1e-13);
    check_close(1.0 - std::norm(R0) - std::norm(T0), 0.13971549569575655, 1e-12);

    const auto p5 = mdslab::evaluate_medium(fig2_material, 1.0, 0.5);
    const auto [Rx, Tx] = mdslab::fresnel_slab(p5.kin.n_eff, p5.med.zeta_x, 1.0, 1.0);
    check_close(Rx, cplx{-0.22364037710585417, 0.29739432344330156}, 1e-13);
    check_close(Tx, cplx{0.72867388870087751, 0.41085158901293867}, 1e-13);
    const auto [Ry, Ty] = mdslab::fresnel_slab(p5.kin.n_eff, p5.med.zeta_y, 1.0, 1.0);
    check_close(Ry, cplx{-0.14945789558922029, 0.19252025698012921}, 1e-13);
    check_close(Ty, cplx{0.76039441485394798, 0.43755888584662447}, 1e-13);

    const auto p7 = mdslab::evaluate_medium(fig2_material, 1.1, 0.7);
    const auto [R7, T7] = mdslab::fresnel_slab(p7.kin.n_eff, p7.med.zeta_x, 1.1, 1.0);
    check_close(R7, cplx{-0.29762756574066624, 0.33962608386138940}, 1e-13);
    check_close(T7, cplx{0.65668272330038850, 0.55761054091538898}, 1e-13);
}

TEST_CASE("transfer-matrix route agrees with the closed form") {
    const auto p = mdslab::evaluate_medium(fig2_material, 1.1, 0.7);
    for (const cplx zeta : {p.med.zeta_x, p.med.zeta_y}) {
        const auto [Rc, Tc] = mdslab::fresnel_slab(p.kin.n_eff, zeta, 1.1, 1.0);
        const auto [Rt, Tt] = mdslab::transfer_matrix_rt(p.kin.n_eff, zeta, 1.1, 1.0);
        CHECK(std::abs(Rc - Rt) < 1e-12);
        CHECK(std::abs(Tc - Tt) < 1e-12);
    }
}

TEST_CASE("mode normalizations cancel in the composition") {
    const auto p = mdslab::evaluate_medium(fig2_material, 0.9, -0.6);
    const auto [R1, T1] = mdslab::transfer_matrix_rt(p.kin.n_eff, p.med.zeta_x, 0.9, 1.0);
    const auto [R2, T2] =
        mdslab::transfer_matrix_rt(p.kin.n_eff, p.med.zeta_x, 0.9, 1.0, 3.7, 0.11);
    CHECK(std::abs(R1 - R2) < 1e-13);
    CHECK(std::abs(T1 - T2) < 1e-13);
}

TEST_CASE("stationary slab: three independent routes") {
    const cplx n{1.5, 0.1};
    for (const double w : {0.6, 1.0, 1.7}) {
        const auto [Rc, Tc] = mdslab::fresnel_slab(n, 1.0, w, 1.0);
        const auto [Rt, Tt] = mdslab::transfer_matrix_rt(n, 1.0, w, 1.0);
        const auto [Ra, Ta] = airy_stationary_slab(n, w, 1.0);
        CHECK(std::abs(Rc - Rt) < 1e-12);
        CHECK(std::abs(Tc - Tt) < 1e-12);
        CHECK(std::abs(Rc - Ra) < 1e-12);
        CHECK(std::abs(Tc - Ta) < 1e-12);
    }
}

TEST_CASE("stationary reduction over a non-magnetic material grid") {
    mdslab::LorentzParams dielectric{2.25, 1.0, 0.3, 0.0, 0.25, 0.0};
    double worst = 0.0;
    for (int i = 0; i < 60; ++i) {
        const double w = 0.5 + 1.5 * i / 59.0;
        const auto rf = mdslab::rest_frame_response(w, dielectric);
        const auto [Rc, Tc] = mdslab::fresnel_slab(rf.n, rf.mu, w, 1.0);
        const auto [Ra, Ta] = airy_stationary_slab(rf.n, w, 1.0);
        worst = std::max({worst, std::abs(Rc - Ra), std::abs(Tc - Ta)});
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("absorption matrix row norms equal the absorptance") {
    const auto p0 = mdslab::evaluate_medium(fig2_material, 1.0, 0.0);
    const auto am0 = mdslab::absorption_matrix(p0.med, p0.kin, 1.0, 1.0, Polarization::x);
    const auto [R0, T0] = mdslab::fresnel_slab(p0.kin.n_eff, p0.med.zeta_x, 1.0, 1.0);
    const double a0 = 1.0 - std::norm(R0) - std::norm(T0);
    check_close(am0.row_norm(0), a0, 1e-10);
    check_close(am0.row_norm(1), a0, 1e-10);
    check_close(a0, 0.13971549569575655, 1e-12);

    for (const double beta : {0.3, -0.5, 0.7, 0.9}) {
        const auto p = mdslab::evaluate_medium(fig2_material, 1.1, beta);
        for (const auto pol : {Polarization::x, Polarization::y}) {
            const cplx zeta = pol == Polarization::x ? p.med.zeta_x : p.med.zeta_y;
            const auto am = mdslab::absorption_matrix(p.med, p.kin, 1.1, 1.0, pol);
            const auto [R, T] = mdslab::fresnel_slab(p.kin.n_eff, zeta, 1.1, 1.0);
            const double a = 1.0 - std::norm(R) - std::norm(T);
            CHECK(std::abs(am.row_norm(0) - a) < 1e-8 * a);
            CHECK(std::abs(am.row_norm(1) - a) < 1e-8 * a);
        }
    }
}

TEST_CASE("frozen absorption matrix at w=1, beta=0.5, x polarization") {
    const auto p = mdslab::evaluate_medium(fig2_material, 1.0, 0.5);
    const auto am = mdslab::absorption_matrix(p.med, p.kin, 1.0, 1.0, Polarization::x);
    check_close(am.entries(0, 0), cplx{0.32830142184272800, -0.11782451461201412}, 1e-12);
    check_close(am.entries(0, 1), cplx{0.15015830328793222, -0.13253293163931967}, 1e-12);
    check_close(am.entries(1, 0), am.entries(0, 0), 1e-15);
    check_close(am.entries(1, 1), -am.entries(0, 1), 1e-15);
    check_close(am.c_plus, 1.3844016672523145, 1e-13);
    check_close(am.c_minus, 0.43168390305481069, 1e-13);
}

TEST_CASE("normalization scalars stay non-negative") {
    for (const double w : {0.5, 0.9, 1.0, 1.4, 2.0})
        for (const double beta : {0.0, 0.4, 0.8, 0.95}) {
            const auto p = mdslab::evaluate_medium(fig2_material, w, beta);
            for (const auto pol : {Polarization::x, Polarization::y}) {
                const auto am = mdslab::absorption_matrix(p.med, p.kin, w, 1.0, pol);
                CHECK(am.c_plus >= 0.0);
                CHECK(am.c_minus >= 0.0);
            }
        }
}

TEST_CASE("lossless slab couples no noise") {
    const mdslab::LorentzParams lossless{2.0, 1.0, 0.1, 0.05, 0.0, 0.0};
    const auto p = mdslab::evaluate_medium(lossless, 1.5, 0.3);
    const auto am = mdslab::absorption_matrix(p.med, p.kin, 1.5, 1.0, Polarization::x);
    CHECK(am.row_norm(0) == 0.0);
    CHECK(am.row_norm(1) == 0.0);
    const auto sc = mdslab::sweep_point(lossless, unit_slab, 1.5, 0.3, Polarization::x);
    CHECK(std::abs(sc.absorptance) < 1e-12);
}

TEST_CASE("sweep point: peak absorption and speed parity") {
    const auto sc = mdslab::sweep_point(fig2_material, unit_slab, 1.0, 0.0, Polarization::x);
    CHECK(sc.absorptance > 0.12);
    CHECK(sc.absorptance < 0.16);
    check_close(sc.R2() + sc.T2() + sc.absorptance, 1.0, 1e-14);

    for (const double beta : {0.2, 0.55, 0.9}) {
        const auto fwd = mdslab::sweep_point(fig2_material, unit_slab, 1.2, beta, Polarization::y);
        const auto bwd = mdslab::sweep_point(fig2_material, unit_slab, 1.2, -beta, Polarization::y);
        CHECK(std::abs(fwd.R2() - bwd.R2()) < 1e-12);
        CHECK(std::abs(fwd.T2() - bwd.T2()) < 1e-12);
    }
}

TEST_CASE("near-luminal regression values") {
    const auto sc = mdslab::sweep_point(fig2_material, unit_slab, 1.0, 0.999, Polarization::x);
    check_close(sc.T2(), 0.00017769457383456928, 1e-9);
    check_close(sc.R2(), 0.83756026819363053, 1e-9);
    CHECK(sc.T2() < 0.05);
}

TEST_CASE("passivity across the working grid") {
    std::mt19937 rng(2024u);
    std::uniform_real_distribution<double> wd(0.5, 2.0), bd(-0.95, 0.95);
    for (int i = 0; i < 400; ++i) {
        const auto sc = mdslab::sweep_point(fig2_material, unit_slab, wd(rng), bd(rng),
                                            i % 2 ? Polarization::x : Polarization::y);
        CHECK(sc.R2() >= 0.0);
        CHECK(sc.R2() <= 1.0);
        CHECK(sc.T2() <= 1.0);
        CHECK(sc.absorptance >= -1e-14);
        CHECK(sc.absorptance <= 1.0);
    }
}

TEST_CASE("self-test suites pass and the corruption hook trips row norms") {
    CHECK(mdslab::suite_beta_parity(10, 10).pass);
    CHECK(mdslab::suite_lossless_conservation(20, 9).pass);
    const auto good = mdslab::suite_row_norm(12, 12, 0.0);
    CHECK(good.pass);
    const auto bad = mdslab::suite_row_norm(12, 12, 1e-3);
    CHECK_FALSE(bad.pass);
}
