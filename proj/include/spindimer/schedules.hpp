#pragma once
#include <functional>
#include <string>

#include "spindimer/dimer.hpp"

// Field engineering: omega1(t), omega2(t) pairs realizing the exactly
// solvable classes, conversion to laboratory fields via omega_i = mu_B g_izz
// B_iz / 2, and schedule feasibility checks. Schedules are closed-form
// function objects (never tabulated) so integrators can sample them anywhere.

namespace spindimer {

using TimeFunc = std::function<double(double)>;

inline constexpr double bohr_magneton = 9.2740100783e-24; // J/T

struct FieldSchedule {
    TimeFunc omega1;
    TimeFunc omega2;
    std::string scenario_plus = "none";  // "S1", "S2", "none"
    std::string scenario_minus = "none"; // "S1", "S2", "static", "none"
};

struct LabField {
    TimeFunc b1z;
    TimeFunc b2z;
    double g1zz = 2.0;
    double g2zz = 2.0;
    double mu_b = bohr_magneton;
};

// Both sectors driven exactly: omega1 = (Omega_plus + Omega_minus)/(2 hbar),
// omega2 = (Omega_plus - Omega_minus)/(2 hbar) with each Omega drawn from the
// chosen scenario's closed form for that sector's |Gamma|.
FieldSchedule full_schedule(const DimerCouplings& c, Scenario plus, Scenario minus);

// One sector driven exactly; the orthogonal combination of omega1, omega2 is
// the caller's choice (`free`, default identically zero). sector = +1
// constrains hbar(omega1 + omega2), sector = -1 constrains hbar(omega1 -
// omega2). Throws InvalidEqualOmega if sector = -1 degenerates to
// omega1 == omega2 (that class requires omega1 != omega2).
FieldSchedule subspace_schedule(const DimerCouplings& c, int sector, Scenario s,
                                TimeFunc free = {});

// B_iz(t) = 2 omega_i(t) / (mu_B g_izz); throws ZeroGFactor
LabField omega_to_field(const FieldSchedule& s, double g1zz, double g2zz);

// true iff g1zz B1z(t) == g2zz B2z(t) within 1e-10 at all sampled t
bool equal_omega_check(const LabField& f, double t_max = 10.0, int samples = 101);

// Can a single homogeneous field B1z(t) = B2z(t) realize both sector
// constraints at once? Requires Omega_plus(t) (g1-g2) == Omega_minus(t)
// (g1+g2) for all t, which generically fails.
bool homogeneous_field_feasible(const DimerCouplings& c, Scenario plus, Scenario minus,
                                double g1zz, double g2zz, double t_max = 10.0,
                                int samples = 101);

// ---- schedule grammar shared by the CLI and the trajectory layer ----
//
//   "S1,S2"      both sectors driven (any of the four S1/S2 pairs)
//   "sub:+:S1"   subspace class, + sector driven by S1, free combination == 0
//   "sub:-:S2"   subspace class, - sector driven by S2, free combination == 0
//   "static:S1"  alias for "sub:+:S1": free == 0 forces omega1 == omega2,
//                which is exactly the equal-frequency (static minus) case
struct ScheduleSpec {
    enum class Kind { full, subspace };
    Kind kind = Kind::full;
    Scenario plus_scenario = Scenario::S1;  // full only
    Scenario minus_scenario = Scenario::S1; // full only
    int sector = +1;                        // subspace only
    Scenario sub_scenario = Scenario::S1;   // subspace only
};

ScheduleSpec parse_schedule_spec(const std::string& text); // throws std::invalid_argument
FieldSchedule make_schedule(const DimerCouplings& c, const ScheduleSpec& spec);
std::string schedule_label(const ScheduleSpec& spec);

} // namespace spindimer
