#include "doctest.h"

#include <cmath>

#include "spindimer/csvio.hpp"
#include "spindimer/trajectory.hpp"

using namespace spindimer;

TEST_SUITE("trajectory") {

TEST_CASE("named states") {
    CHECK(named_state("pp").a[0] == cplx(1.0));
    CHECK(named_state("pm").a[1] == cplx(1.0));
    CHECK(named_state("mp").a[2] == cplx(1.0));
    CHECK(named_state("mm").a[3] == cplx(1.0));
    CHECK(norm(named_state("bell_phi_plus")) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(norm(named_state("bell_psi_plus")) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(named_state("sx_max").a[2] == cplx(0.5));
    CHECK_THROWS_AS(named_state("nope"), std::invalid_argument);
}

TEST_CASE("time grids") {
    TimeGrid g{6.0, 4};
    CHECK(g.at(0) == 0.0);
    CHECK(g.at(1) == 2.0);
    CHECK(g.at(3) == 6.0);
    TimeGrid single{5.0, 1};
    CHECK(single.at(0) == 0.0);
    // 1000-sample grid over [0, 9] lands exactly on 1 at index 111
    TimeGrid fig{9.0, 1000};
    CHECK(fig.at(111) == 1.0);
}

TEST_CASE("parallel grid propagation is bitwise identical to serial") {
    DimerCouplings c = special_couplings();
    c.gzz = 0.3;
    ScheduleSpec spec = parse_schedule_spec("S1,S2");
    StateVec4 s0 = named_state("bell_phi_plus");
    TimeGrid grid{7.0, 101};
    auto serial = propagate_grid_serial(c, spec, s0, grid);
    auto parallel = propagate_grid(c, spec, s0, grid);
    REQUIRE(serial.size() == parallel.size());
    for (size_t k = 0; k < serial.size(); ++k)
        for (int j = 0; j < 4; ++j) {
            CHECK(serial[k].a[j].real() == parallel[k].a[j].real());
            CHECK(serial[k].a[j].imag() == parallel[k].a[j].imag());
        }
}

TEST_CASE("schedule propagators carry provenance and time") {
    DimerCouplings c = special_couplings();
    Propagator4 u = schedule_propagator(c, parse_schedule_spec("S2,S1"), 0.8);
    CHECK(u.t == 0.8);
    CHECK(u.provenance == "S2,S1");
    CHECK(is_unitary(u.matrix, 1e-12));
    Propagator4 v = schedule_propagator(c, parse_schedule_spec("sub:+:S1"), 0.8);
    CHECK(v.provenance == "sub:+:S1");
    Propagator4 w = schedule_propagator(c, parse_schedule_spec("sub:-:S2"), 0.8);
    CHECK(w.provenance == "sub:-:S2");
}

TEST_CASE("plus-subspace schedule equals the static assembly") {
    DimerCouplings c = special_couplings();
    c.gzz = 0.2;
    double t = 1.1;
    Propagator4 via_spec = schedule_propagator(c, parse_schedule_spec("sub:+:S2"), t);
    Propagator2 pp = scenario_propagator(t, sector_params(c, +1), Scenario::S2);
    Propagator4 direct = static_full_propagator(c, pp, t);
    CHECK(max_abs_diff(via_spec.matrix, direct.matrix) == 0.0);
    // and its minus block is the closed-form static propagator
    CMat2 st = static_sector_propagator(t, sector_gamma(c, -1), c.gzz, c.hbar);
    CHECK(std::abs(via_spec.matrix(1, 1) - st(0, 0)) == 0.0);
    CHECK(std::abs(via_spec.matrix(1, 2) - st(0, 1)) == 0.0);
}

TEST_CASE("figure data shapes") {
    for (int n = 1; n <= 13; ++n) {
        FigureData f = figure_data(n);
        CHECK(f.rows.size() == 1000);
        REQUIRE(!f.columns.empty());
        for (const auto& r : f.rows) CHECK(r.size() == f.columns.size());
        CHECK(f.rows[0][0] == 0.0); // abscissa starts at 0
    }
    CHECK_THROWS_AS(figure_data(0), std::invalid_argument);
    CHECK_THROWS_AS(figure_data(14), std::invalid_argument);
}

TEST_CASE("figure anchor values") {
    FigureData f1 = figure_data(1);
    CHECK(f1.columns[0] == "tau_1");
    CHECK(f1.rows[0][1] == 2.0); // Omega/|Gamma| at tau = 0
    FigureData f2 = figure_data(2);
    CHECK(f2.rows[0][1] == 1.0); // (3 sech - cosh)/2 at 0
    FigureData f9 = figure_data(9);
    CHECK(f9.rows[111][0] == 1.0);
    CHECK(f9.rows[111][1] == std::tanh(1.0));
    FigureData f4 = figure_data(4);
    CHECK(f4.rows[0][1] == 1.0);  // <Sz> alpha branch starts at +hbar
    CHECK(f4.rows[0][2] == -1.0); // beta branch at -hbar
}

TEST_CASE("figure 13 amplitudes stay normalized and cross at C = 1") {
    FigureData f = figure_data(13);
    REQUIRE(f.columns.size() == 4);
    for (const auto& r : f.rows) {
        CHECK(r[1] * r[1] + r[2] * r[2] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r[3] <= 1.0 + 1e-12);
    }
    // at the first entanglement instant |c_pp| = |c_mm| = 1/sqrt(2) and C = 1
    double tau1 = std::asinh(std::acos(-1.0));
    size_t k_near = 0;
    double best = 1e9;
    for (size_t k = 0; k < f.rows.size(); ++k)
        if (std::abs(f.rows[k][0] - tau1) < best) {
            best = std::abs(f.rows[k][0] - tau1);
            k_near = k;
        }
    CHECK(std::abs(f.rows[k_near][1] - std::sqrt(0.5)) < 5e-3);
    CHECK(std::abs(f.rows[k_near][3] - 1.0) < 1e-4);
}

TEST_CASE("figure 8 tracks its asymptote at late times") {
    FigureData f = figure_data(8);
    // the state starts in the +hbar eigenstate of Sx
    CHECK(f.rows[0][1] == doctest::Approx(1.0).epsilon(1e-14));
    for (const auto& r : f.rows) {
        CHECK(std::abs(r[1]) <= 1.0 + 1e-12);
        if (r[0] >= 15.0) CHECK(std::abs(r[1] - r[2]) < 0.02);
    }
}

TEST_CASE("figure regeneration is deterministic") {
    FigureData a = figure_data(5);
    FigureData b = figure_data(5);
    CHECK(csv_table(a.columns, a.rows) == csv_table(b.columns, b.rows));
}

} // TEST_SUITE
