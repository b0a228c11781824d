#include "doctest.h"

#include <cmath>

#include "spindimer/mn_engine.hpp"

using namespace spindimer;

namespace {

constexpr double pi = 3.14159265358979323846;

SectorParams params(double gamma_abs, double phase = 0.0) {
    SectorParams p;
    p.gamma_abs = gamma_abs;
    p.gamma_phase = phase;
    return p;
}

} // namespace

TEST_SUITE("mn_engine") {

TEST_CASE("propagators start at the identity and stay unitary") {
    SectorParams p = params(0.8);
    for (Scenario s : {Scenario::S1, Scenario::S2}) {
        CHECK(max_abs_diff(scenario_propagator(0.0, p, s).matrix(), CMat2::identity()) <
              1e-15);
        for (double t : {0.3, 1.1, 2.9, 14.0})
            CHECK(is_unitary(scenario_propagator(t, p, s).matrix(), 1e-12));
    }
}

TEST_CASE("scenario asymptotics") {
    SectorParams p = params(1.0);
    // S1 glides to the balanced superposition, S2 inverts completely
    Propagator2 s1 = scenario_propagator(10.0, p, Scenario::S1); // gamma t = 20
    CHECK(std::abs(s1.a_abs - 1.0 / std::sqrt(2.0)) < 1e-6);
    CHECK(std::abs(s1.b_abs - 1.0 / std::sqrt(2.0)) < 1e-6);
    Propagator2 s2 = scenario_propagator(20.0, p, Scenario::S2);
    CHECK(s2.a_abs < 1e-6);
    CHECK(std::abs(s2.b_abs - 1.0) < 1e-6);
}

TEST_CASE("phase sum equals -theta - pi/2 in both scenarios") {
    // phi_a + phi_b = -theta(t) - pi/2 with theta = asin(tanh(gamma t)):
    // a relation between the phase pair and the drive angle that the two
    // closed forms must satisfy jointly
    SectorParams p = params(1.3);
    for (Scenario s : {Scenario::S1, Scenario::S2}) {
        double rate = (s == Scenario::S1 ? 2.0 : 1.0) * p.gamma_abs;
        for (double t : {0.12, 0.7, 1.9}) {
            auto [fa, fb] = scenario_phases(t, p, s);
            double theta = std::asin(std::tanh(rate * t));
            CHECK(fa + fb == doctest::Approx(-theta - 0.5 * pi).epsilon(1e-12));
        }
    }
}

TEST_CASE("quadrature path reproduces the scenario closed forms") {
    SectorParams p = params(0.8);
    for (Scenario s : {Scenario::S1, Scenario::S2}) {
        ThetaDrive d = scenario_theta_drive(p, s, 5.0);
        for (double t : {0.3, 0.9, 1.7}) {
            Propagator2 generic = propagator_from_theta(d, t, p);
            Propagator2 closed = scenario_propagator(t, p, s);
            CHECK(max_abs_diff(generic.matrix(), closed.matrix()) < 1e-8);
        }
    }
}

TEST_CASE("engineered field matches the scenario fields") {
    SectorParams p = params(0.8);
    for (Scenario s : {Scenario::S1, Scenario::S2}) {
        ThetaDrive d = scenario_theta_drive(p, s, 5.0);
        for (double t : {0.4, 1.1})
            CHECK(std::abs(omega_from_theta(d, t, p) - scenario_omega(t, p, s)) < 1e-7);
    }
}

TEST_CASE("zero drive angle gives zero field away from singular instants") {
    SectorParams p = params(1.0);
    ThetaDrive d([](double) { return 0.0; }, [](double) { return 0.0; }, 10.0);
    CHECK(std::abs(omega_from_theta(d, 0.3, p)) < 1e-12);
    // 2 chi = 2|G|t/hbar hits pi at t = pi/2: the cot diverges there
    CHECK_THROWS_AS(omega_from_theta(d, 0.5 * pi, p), CotangentSingularity);
    Propagator2 u = propagator_from_theta(d, 0.7, p);
    CHECK(u.a_abs == doctest::Approx(std::cos(0.7)).epsilon(1e-10));
}

TEST_CASE("theta drives are validated") {
    CHECK_THROWS_AS(ThetaDrive([](double) { return 0.1; }, [](double) { return 0.0; }, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(ThetaDrive({}, [](double) { return 0.0; }, 1.0), std::invalid_argument);
    ThetaDrive d([](double) { return 0.0; }, [](double) { return 0.0; }, 1.0);
    SectorParams p = params(1.0);
    CHECK_THROWS_AS(propagator_from_theta(d, 2.0, p), std::invalid_argument); // beyond t_max
    CHECK_THROWS_AS(omega_from_theta(d, 0.0, p), std::invalid_argument);      // t = 0 excluded
}

TEST_CASE("degenerate coupling freezes the drive") {
    SectorParams p = params(0.0);
    CHECK_THROWS_AS(scenario_propagator(1.0, p, Scenario::S1), DegenerateCoupling);
    CHECK_THROWS_AS(scenario_omega(1.0, p, Scenario::S2), DegenerateCoupling);
}

TEST_CASE("hyperbolic overflow is guarded") {
    SectorParams p = params(1.0);
    for (Scenario s : {Scenario::S1, Scenario::S2}) {
        Propagator2 u = scenario_propagator(1e6, p, s);
        CHECK(std::isfinite(u.a_abs));
        CHECK(std::isfinite(u.phi_a));
        CHECK(is_unitary(u.matrix(), 1e-12));
        CHECK(std::isfinite(scenario_omega(1e6, p, s)));
    }
}

TEST_CASE("complex coupling rotates only the off-diagonal entry") {
    Propagator2 p;
    p.a_abs = 0.6;
    p.b_abs = 0.8;
    p.phi_a = 0.25;
    p.phi_b = -0.4;
    double chi = 0.7;
    CMat2 m = sector_matrix(p, chi);
    CHECK(std::abs(m(0, 0) - std::polar(0.6, 0.25)) < 1e-15);
    CHECK(std::abs(m(0, 1) - std::polar(0.8, -0.4 + chi)) < 1e-15);
    CHECK(std::abs(m(1, 0) + std::conj(m(0, 1))) < 1e-15);
    CHECK(is_unitary(m, 1e-12));
}

TEST_CASE("free sector rotation") {
    SectorParams p = params(1.0);
    double t = 0.7;
    CMat2 u = rabi_sector_propagator(t, p).matrix();
    CHECK(std::abs(u(0, 0) - std::cos(t)) < 1e-15);
    CHECK(std::abs(u(0, 1) - cplx(0.0, -std::sin(t))) < 1e-15);
    // the canonical form keeps |a| >= 0 by moving signs into the phases
    Propagator2 late = rabi_sector_propagator(2.0, p);
    CHECK(late.a_abs >= 0.0);
    CHECK(std::abs(late.matrix()(0, 0) - std::cos(2.0)) < 1e-15);
    Propagator2 later = rabi_sector_propagator(4.0, p);
    CHECK(std::abs(later.matrix()(0, 1) - cplx(0.0, -std::sin(4.0))) < 1e-15);
}

TEST_CASE("static sector propagator") {
    cplx g(0.9, 0.6);
    double gzz = 0.25, t = 1.4;
    CMat2 u = static_sector_propagator(t, g, gzz, 1.0);
    CHECK(is_unitary(u, 1e-12));
    double th = std::abs(g) * t;
    CHECK(std::abs(u(0, 0) - std::polar(1.0, gzz * t) * std::cos(th)) < 1e-14);
    // off-diagonal phase is arg(-i Gamma)
    cplx eiphi = cplx(0.0, -1.0) * g / std::abs(g);
    CHECK(std::abs(u(0, 1) - std::polar(1.0, gzz * t) * eiphi * std::sin(th)) < 1e-14);
    // |Gamma| = 0 degenerates to the scalar phase
    CMat2 z = static_sector_propagator(t, 0.0, gzz, 1.0);
    CHECK(std::abs(z(0, 0) - std::polar(1.0, gzz * t)) < 1e-15);
    CHECK(std::abs(z(0, 1)) == 0.0);
    // real positive Gamma with gzz = 0 is exactly the free rotation
    CMat2 r = static_sector_propagator(0.7, 1.0, 0.0, 1.0);
    CHECK(max_abs_diff(r, rabi_sector_propagator(0.7, params(1.0)).matrix()) < 1e-15);
}

} // TEST_SUITE
