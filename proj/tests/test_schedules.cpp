#include "doctest.h"

#include <cmath>

#include "spindimer/schedules.hpp"

using namespace spindimer;

TEST_SUITE("schedules") {

TEST_CASE("fully driven schedule realizes both sector fields") {
    DimerCouplings c = special_couplings(1.5);
    c.hbar = 0.7;
    FieldSchedule f = full_schedule(c, Scenario::S1, Scenario::S2);
    SectorParams pp = sector_params(c, +1), pm = sector_params(c, -1);
    for (double t : {0.0, 0.3, 1.1, 2.5}) {
        double op = c.hbar * (f.omega1(t) + f.omega2(t));
        double om = c.hbar * (f.omega1(t) - f.omega2(t));
        double want_p = scenario_omega(t, pp, Scenario::S1);
        double want_m = scenario_omega(t, pm, Scenario::S2);
        // the reconstruction cancels two large halves, so its rounding floor
        // is set by the bigger sector field, not by the small recovered one
        double tol = 1e-12 * (1.0 + std::abs(want_p) + std::abs(want_m));
        CHECK(std::abs(op - want_p) < tol);
        CHECK(std::abs(om - want_m) < tol);
    }
    CHECK(f.scenario_plus == "S1");
    CHECK(f.scenario_minus == "S2");
    // the special couplings give hbar omega1(0) = 3c, hbar omega2(0) = -c
    DimerCouplings sp = special_couplings(1.0);
    FieldSchedule g = full_schedule(sp, Scenario::S1, Scenario::S1);
    CHECK(g.omega1(0.0) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(g.omega2(0.0) == doctest::Approx(-1.0).epsilon(1e-12));
    // construction identities hold pointwise on a dense grid
    SectorParams gp = sector_params(sp, +1), gm = sector_params(sp, -1);
    for (int k = 0; k <= 100; ++k) {
        double t = 0.05 * k;
        CHECK(std::abs(g.omega1(t) + g.omega2(t) -
                       scenario_omega(t, gp, Scenario::S1)) < 1e-12);
        CHECK(std::abs(g.omega1(t) - g.omega2(t) -
                       scenario_omega(t, gm, Scenario::S1)) < 1e-12);
    }
}

TEST_CASE("plus-subspace schedule leaves equal frequencies") {
    DimerCouplings c = special_couplings();
    FieldSchedule f = subspace_schedule(c, +1, Scenario::S2);
    SectorParams pp = sector_params(c, +1);
    for (double t : {0.0, 0.4, 1.7}) {
        CHECK(f.omega1(t) == f.omega2(t)); // exact: same closure
        CHECK(c.hbar * (f.omega1(t) + f.omega2(t)) ==
              doctest::Approx(scenario_omega(t, pp, Scenario::S2)).epsilon(1e-12));
    }
    CHECK(f.scenario_minus == "static");
}

TEST_CASE("minus-subspace schedule constrains the difference") {
    DimerCouplings c = special_couplings();
    FieldSchedule f = subspace_schedule(c, -1, Scenario::S1);
    SectorParams pm = sector_params(c, -1);
    for (double t : {0.0, 0.4, 1.7}) {
        CHECK(f.omega1(t) + f.omega2(t) == 0.0);
        CHECK(c.hbar * (f.omega1(t) - f.omega2(t)) ==
              doctest::Approx(scenario_omega(t, pm, Scenario::S1)).epsilon(1e-12));
    }
    CHECK(f.scenario_plus == "none");
    // a caller-supplied free combination shifts the sum, not the difference
    FieldSchedule g = subspace_schedule(c, -1, Scenario::S1, [](double t) { return 2.0 + t; });
    CHECK(g.omega1(0.5) + g.omega2(0.5) == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(g.omega1(0.5) - g.omega2(0.5) ==
          doctest::Approx(f.omega1(0.5) - f.omega2(0.5)).epsilon(1e-12));
}

TEST_CASE("degenerate sector couplings are rejected") {
    DimerCouplings c; // gxx = gyy = 1, gxy = gyx = 0.3 makes Gamma_plus = 0
    c.gxy = 0.3;
    c.gyx = -0.3;
    c.gxx = 1.0;
    c.gyy = 1.0;
    REQUIRE(std::abs(sector_gamma(c, +1)) == 0.0);
    CHECK_THROWS_AS(full_schedule(c, Scenario::S1, Scenario::S1), DegenerateCoupling);
    CHECK_THROWS_AS(subspace_schedule(c, +1, Scenario::S1), DegenerateCoupling);
    CHECK_NOTHROW(subspace_schedule(c, -1, Scenario::S1)); // Gamma_minus != 0
    CHECK_THROWS_AS(subspace_schedule(c, 2, Scenario::S1), std::invalid_argument);
}

TEST_CASE("field conversion and the equal-frequency check") {
    DimerCouplings c = special_couplings();
    FieldSchedule sub = subspace_schedule(c, +1, Scenario::S1);
    CHECK_THROWS_AS(omega_to_field(sub, 0.0, 2.0), ZeroGFactor);
    CHECK_THROWS_AS(omega_to_field(sub, 2.0, 0.0), ZeroGFactor);
    LabField f = omega_to_field(sub, 2.0, 1.6);
    CHECK(f.b1z(0.7) == doctest::Approx(2.0 * sub.omega1(0.7) / (bohr_magneton * 2.0))
                            .epsilon(1e-12));
    // round trip: mu_B g B / 2 recovers omega
    CHECK(0.5 * bohr_magneton * 1.6 * f.b2z(0.7) ==
          doctest::Approx(sub.omega2(0.7)).epsilon(1e-12));
    // equal g-factors: g1 B1 == g2 B2 iff omega1 == omega2
    CHECK(equal_omega_check(omega_to_field(sub, 2.0, 2.0)));
    FieldSchedule full = full_schedule(c, Scenario::S1, Scenario::S2);
    CHECK_FALSE(equal_omega_check(omega_to_field(full, 2.0, 2.0)));
    // compensating scaling: B1 = 2 B2 with g1 = g2/2 passes the check
    LabField comp;
    comp.g1zz = 1.0;
    comp.g2zz = 2.0;
    comp.b1z = [](double t) { return 2.0e-4 * (1.0 + t); };
    comp.b2z = [](double t) { return 1.0e-4 * (1.0 + t); };
    CHECK(equal_omega_check(comp));
}

TEST_CASE("a single homogeneous field cannot drive both sectors") {
    DimerCouplings c = special_couplings();
    CHECK_FALSE(homogeneous_field_feasible(c, Scenario::S1, Scenario::S1, 2.0, 2.0));
    CHECK_FALSE(homogeneous_field_feasible(c, Scenario::S1, Scenario::S2, 2.0, 1.5));
    // the degenerate exception: identical sector couplings, matching scenario,
    // and a zero g-factor on one site
    DimerCouplings eq;
    eq.gxx = 1.0;
    eq.gyy = 0.0;
    eq.gxy = 0.0;
    eq.gyx = 0.0; // Gamma_plus = Gamma_minus = 1
    CHECK(homogeneous_field_feasible(eq, Scenario::S1, Scenario::S1, 3.0, 0.0));
}

TEST_CASE("schedule grammar") {
    ScheduleSpec s = parse_schedule_spec("S1,S2");
    CHECK(s.kind == ScheduleSpec::Kind::full);
    CHECK(s.plus_scenario == Scenario::S1);
    CHECK(s.minus_scenario == Scenario::S2);
    CHECK(schedule_label(s) == "S1,S2");

    s = parse_schedule_spec("sub:-:S2");
    CHECK(s.kind == ScheduleSpec::Kind::subspace);
    CHECK(s.sector == -1);
    CHECK(s.sub_scenario == Scenario::S2);
    CHECK(schedule_label(s) == "sub:-:S2");

    // "static:Sx" is sugar for the plus-subspace class, whose free == 0
    // choice forces omega1 == omega2
    s = parse_schedule_spec("static:S1");
    CHECK(s.kind == ScheduleSpec::Kind::subspace);
    CHECK(s.sector == +1);
    CHECK(schedule_label(s) == "sub:+:S1");

    for (const char* bad : {"S3,S1", "S1", "sub:x:S1", "sub:+:S3", "static:S3", "", "sub:+"})
        CHECK_THROWS_AS(parse_schedule_spec(bad), std::invalid_argument);
}

TEST_CASE("make_schedule dispatches on the parsed kind") {
    DimerCouplings c = special_couplings();
    FieldSchedule f = make_schedule(c, parse_schedule_spec("S2,S1"));
    CHECK(f.scenario_plus == "S2");
    CHECK(f.scenario_minus == "S1");
    FieldSchedule g = make_schedule(c, parse_schedule_spec("sub:-:S2"));
    CHECK(g.scenario_plus == "none");
    CHECK(g.scenario_minus == "S2");
}

} // TEST_SUITE
