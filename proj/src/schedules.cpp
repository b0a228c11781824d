#include "spindimer/schedules.hpp"

#include <cmath>
#include <stdexcept>

#include "spindimer/errors.hpp"

namespace spindimer {

namespace {

std::string scenario_name(Scenario s) { return s == Scenario::S1 ? "S1" : "S2"; }

Scenario scenario_from_name(const std::string& s) {
    if (s == "S1") return Scenario::S1;
    if (s == "S2") return Scenario::S2;
    throw std::invalid_argument("unknown scenario '" + s + "' (expected S1 or S2)");
}

TimeFunc sector_omega_func(const DimerCouplings& c, int sector, Scenario s) {
    SectorParams p = sector_params(c, sector);
    if (p.gamma_abs <= 0.0)
        throw DegenerateCoupling("sector |Gamma| must be positive to engineer a drive");
    return [p, s](double t) { return scenario_omega(t, p, s); };
}

} // namespace

FieldSchedule full_schedule(const DimerCouplings& c, Scenario plus, Scenario minus) {
    TimeFunc op = sector_omega_func(c, +1, plus);
    TimeFunc om = sector_omega_func(c, -1, minus);
    double hbar = c.hbar;
    FieldSchedule s;
    s.omega1 = [op, om, hbar](double t) { return (op(t) + om(t)) / (2.0 * hbar); };
    s.omega2 = [op, om, hbar](double t) { return (op(t) - om(t)) / (2.0 * hbar); };
    s.scenario_plus = scenario_name(plus);
    s.scenario_minus = scenario_name(minus);
    return s;
}

FieldSchedule subspace_schedule(const DimerCouplings& c, int sector, Scenario s,
                                TimeFunc free) {
    if (sector != 1 && sector != -1)
        throw std::invalid_argument("sector must be +1 or -1");
    TimeFunc omega = sector_omega_func(c, sector, s);
    if (!free) free = [](double) { return 0.0; };
    if (sector == -1) {
        // omega1 - omega2 = Omega/hbar must not vanish identically
        SectorParams p = sector_params(c, -1);
        double t_ref = p.hbar / p.gamma_abs;
        bool all_zero = true;
        for (int i = 0; i <= 100; ++i) {
            if (std::abs(omega(i * 0.1 * t_ref)) > 1e-12 * p.gamma_abs) {
                all_zero = false;
                break;
            }
        }
        if (all_zero)
            throw InvalidEqualOmega("minus-sector drive vanishes: omega1 == omega2 "
                                    "is outside this class");
    }
    double hbar = c.hbar;
    FieldSchedule out;
    if (sector == 1) {
        out.omega1 = [omega, free, hbar](double t) {
            return 0.5 * (omega(t) / hbar + free(t));
        };
        out.omega2 = [omega, free, hbar](double t) {
            return 0.5 * (omega(t) / hbar - free(t));
        };
        out.scenario_plus = scenario_name(s);
        out.scenario_minus = "static"; // free == 0 leaves omega1 == omega2
    } else {
        out.omega1 = [omega, free, hbar](double t) {
            return 0.5 * (free(t) + omega(t) / hbar);
        };
        out.omega2 = [omega, free, hbar](double t) {
            return 0.5 * (free(t) - omega(t) / hbar);
        };
        out.scenario_plus = "none";
        out.scenario_minus = scenario_name(s);
    }
    return out;
}

LabField omega_to_field(const FieldSchedule& s, double g1zz, double g2zz) {
    if (g1zz == 0.0 || g2zz == 0.0)
        throw ZeroGFactor("gyromagnetic factors must be nonzero to realize fields");
    LabField f;
    f.g1zz = g1zz;
    f.g2zz = g2zz;
    TimeFunc o1 = s.omega1, o2 = s.omega2;
    double mu = f.mu_b;
    f.b1z = [o1, g1zz, mu](double t) { return 2.0 * o1(t) / (mu * g1zz); };
    f.b2z = [o2, g2zz, mu](double t) { return 2.0 * o2(t) / (mu * g2zz); };
    return f;
}

bool equal_omega_check(const LabField& f, double t_max, int samples) {
    for (int i = 0; i < samples; ++i) {
        double t = samples > 1 ? t_max * i / (samples - 1) : 0.0;
        if (std::abs(f.g1zz * f.b1z(t) - f.g2zz * f.b2z(t)) > 1e-10) return false;
    }
    return true;
}

bool homogeneous_field_feasible(const DimerCouplings& c, Scenario plus, Scenario minus,
                                double g1zz, double g2zz, double t_max, int samples) {
    // B1z == B2z == B gives Omega_plus = hbar mu g_sum B / 2 and
    // Omega_minus = hbar mu g_diff B / 2, hence the cross ratio must match.
    TimeFunc op = sector_omega_func(c, +1, plus);
    TimeFunc om = sector_omega_func(c, -1, minus);
    double g_sum = g1zz + g2zz, g_diff = g1zz - g2zz;
    for (int i = 0; i < samples; ++i) {
        double t = samples > 1 ? t_max * i / (samples - 1) : 0.0;
        double lhs = op(t) * g_diff, rhs = om(t) * g_sum;
        double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        if (std::abs(lhs - rhs) > 1e-10 * scale) return false;
    }
    return true;
}

ScheduleSpec parse_schedule_spec(const std::string& text) {
    auto bad = [&text]() {
        return std::invalid_argument(
            "bad schedule '" + text +
            "' (expected \"S1,S2\", \"sub:+:S1\", \"sub:-:S2\", or \"static:S1\")");
    };
    ScheduleSpec spec;
    if (text.rfind("sub:", 0) == 0) {
        if (text.size() < 7 || text[5] != ':') throw bad();
        spec.kind = ScheduleSpec::Kind::subspace;
        if (text[4] == '+') spec.sector = +1;
        else if (text[4] == '-') spec.sector = -1;
        else throw bad();
        spec.sub_scenario = scenario_from_name(text.substr(6));
        return spec;
    }
    if (text.rfind("static:", 0) == 0) {
        spec.kind = ScheduleSpec::Kind::subspace;
        spec.sector = +1;
        spec.sub_scenario = scenario_from_name(text.substr(7));
        return spec;
    }
    auto comma = text.find(',');
    if (comma == std::string::npos) throw bad();
    spec.kind = ScheduleSpec::Kind::full;
    spec.plus_scenario = scenario_from_name(text.substr(0, comma));
    spec.minus_scenario = scenario_from_name(text.substr(comma + 1));
    return spec;
}

FieldSchedule make_schedule(const DimerCouplings& c, const ScheduleSpec& spec) {
    if (spec.kind == ScheduleSpec::Kind::full)
        return full_schedule(c, spec.plus_scenario, spec.minus_scenario);
    return subspace_schedule(c, spec.sector, spec.sub_scenario);
}

std::string schedule_label(const ScheduleSpec& spec) {
    if (spec.kind == ScheduleSpec::Kind::full)
        return scenario_name(spec.plus_scenario) + "," + scenario_name(spec.minus_scenario);
    return std::string("sub:") + (spec.sector > 0 ? "+" : "-") + ":" +
           scenario_name(spec.sub_scenario);
}

} // namespace spindimer
