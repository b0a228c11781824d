#include "spindimer/trajectory.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>

namespace spindimer {

Propagator4 schedule_propagator(const DimerCouplings& c, const ScheduleSpec& spec, double t) {
    if (spec.kind == ScheduleSpec::Kind::full) {
        Propagator2 pp = scenario_propagator(t, sector_params(c, +1), spec.plus_scenario);
        Propagator2 pm = scenario_propagator(t, sector_params(c, -1), spec.minus_scenario);
        return assemble_propagator(pp, pm, c, t, schedule_label(spec));
    }
    if (spec.sector == 1) {
        // free combination == 0 leaves omega1 == omega2: the minus sector is
        // the static one and its block is closed-form regardless of t
        Propagator2 pp = scenario_propagator(t, sector_params(c, +1), spec.sub_scenario);
        Propagator4 u = static_full_propagator(c, pp, t);
        u.provenance = schedule_label(spec);
        return u;
    }
    Propagator2 pm = scenario_propagator(t, sector_params(c, -1), spec.sub_scenario);
    Propagator2 pp = rabi_sector_propagator(t, sector_params(c, +1));
    return assemble_propagator(pp, pm, c, t, schedule_label(spec));
}

std::vector<StateVec4> propagate_grid_serial(const DimerCouplings& c, const ScheduleSpec& spec,
                                             const StateVec4& s0, const TimeGrid& grid) {
    if (grid.samples < 1) throw std::invalid_argument("grid needs at least one sample");
    std::vector<StateVec4> out(grid.samples);
    for (int k = 0; k < grid.samples; ++k)
        out[k] = evolve(s0, schedule_propagator(c, spec, grid.at(k)));
    return out;
}

std::vector<StateVec4> propagate_grid(const DimerCouplings& c, const ScheduleSpec& spec,
                                      const StateVec4& s0, const TimeGrid& grid) {
    if (grid.samples < 1) throw std::invalid_argument("grid needs at least one sample");
    std::vector<StateVec4> out(grid.samples);
    out[0] = evolve(s0, schedule_propagator(c, spec, grid.at(0))); // surfaces bad params serially
#pragma omp parallel for schedule(static)
    for (int k = 1; k < grid.samples; ++k)
        out[k] = evolve(s0, schedule_propagator(c, spec, grid.at(k)));
    return out;
}

StateVec4 named_state(const std::string& name) {
    StateVec4 s;
    if (name == "pp") s.a[0] = 1.0;
    else if (name == "pm") s.a[1] = 1.0;
    else if (name == "mp") s.a[2] = 1.0;
    else if (name == "mm") s.a[3] = 1.0;
    else if (name == "bell_phi_plus") s = bell_state(Bell::phi_plus);
    else if (name == "bell_psi_plus") s = bell_state(Bell::psi_plus);
    else if (name == "sx_max") s.a = {0.5, 0.5, 0.5, 0.5};
    else throw std::invalid_argument("unknown state name '" + name + "'");
    return s;
}

namespace {

using Row = std::vector<double>;

FigureData grid_figure(std::vector<std::string> cols, double x_max,
                       const std::function<Row(double)>& row_of) {
    FigureData f;
    f.columns = std::move(cols);
    const int n = 1000;
    f.rows.assign(n, {});
#pragma omp parallel for schedule(static)
    for (int k = 0; k < n; ++k) f.rows[k] = row_of(x_max * k / (n - 1));
    return f;
}

} // namespace

FigureData figure_data(int n) {
    SectorParams unit; // |Gamma| = 1, hbar = 1
    DimerCouplings special;
    switch (n) {
    case 1:
        return grid_figure({"tau_1", "omega_over_gamma"}, 6.0, [&](double x) -> Row {
            return {x, scenario_omega(0.5 * x, unit, Scenario::S1)};
        });
    case 2:
        return grid_figure({"tau_2", "omega_over_gamma"}, 3.0, [&](double x) -> Row {
            return {x, scenario_omega(x, unit, Scenario::S2)};
        });
    case 3: {
        FieldSchedule s = full_schedule(special, Scenario::S1, Scenario::S1);
        return grid_figure({"tau_c", "omega1_hbar_over_c", "omega2_hbar_over_c"}, 6.0,
                           [s](double x) -> Row { return {x, s.omega1(x), s.omega2(x)}; });
    }
    case 4:
        return grid_figure({"tau_plus", "sz_alpha_over_hbar", "sz_beta_over_hbar"}, 6.0,
                           [&](double x) -> Row {
                               return {x,
                                       analytic_sz_parity_plus(0.5 * x, Scenario::S1,
                                                               Branch::alpha, unit),
                                       analytic_sz_parity_plus(0.5 * x, Scenario::S1,
                                                               Branch::beta, unit)};
                           });
    case 5:
        return grid_figure({"tau_plus_prime", "sz_alpha_over_hbar", "sz_beta_over_hbar"}, 6.0,
                           [&](double x) -> Row {
                               return {x,
                                       analytic_sz_parity_plus(x, Scenario::S2, Branch::alpha,
                                                               unit),
                                       analytic_sz_parity_plus(x, Scenario::S2, Branch::beta,
                                                               unit)};
                           });
    case 6:
        return grid_figure({"tau_minus", "s2_alpha_over_hbar2", "s2_beta_over_hbar2"}, 6.0,
                           [&](double x) -> Row {
                               return {x,
                                       analytic_s2_parity_minus(0.5 * x, DriveKind::s1,
                                                                Branch::alpha, unit),
                                       analytic_s2_parity_minus(0.5 * x, DriveKind::s1,
                                                                Branch::beta, unit)};
                           });
    case 7:
        return grid_figure({"tau_minus_prime", "s2_alpha_over_hbar2", "s2_beta_over_hbar2"},
                           6.0, [&](double x) -> Row {
                               return {x,
                                       analytic_s2_parity_minus(x, DriveKind::s2, Branch::alpha,
                                                                unit),
                                       analytic_s2_parity_minus(x, DriveKind::s2, Branch::beta,
                                                                unit)};
                           });
    case 8: {
        // real sector couplings: the asymptotic <Sx> cosine applies verbatim
        DimerCouplings c = real_sector_couplings();
        ScheduleSpec spec; // full, S1 + S1
        StateVec4 s0 = named_state("sx_max");
        return grid_figure({"tau_plus", "sx_over_hbar", "sx_asymptote_over_hbar"}, 40.0,
                           [c, spec, s0](double x) -> Row {
                               double t = 0.5 * x; // |Gamma_plus| = 1
                               StateVec4 s = evolve(s0, schedule_propagator(c, spec, t));
                               return {x, expect_sx(s), analytic_sx_asymptotic(t, c)};
                           });
    }
    case 9:
        return grid_figure({"tau_plus", "concurrence"}, 9.0, [&](double x) -> Row {
            return {x, analytic_concurrence(0.5 * x, ConcSource::from_pp, Scenario::S1, unit)};
        });
    case 10:
        return grid_figure({"tau_plus", "concurrence"}, 12.0, [&](double x) -> Row {
            return {x, analytic_concurrence(0.5 * x, ConcSource::from_bell, Scenario::S1, unit)};
        });
    case 11:
        return grid_figure({"tau_plus_prime", "concurrence"}, 6.0, [&](double x) -> Row {
            return {x, analytic_concurrence(x, ConcSource::from_pp, Scenario::S2, unit)};
        });
    case 12:
        return grid_figure({"tau_plus_prime", "concurrence"}, 4.0, [&](double x) -> Row {
            return {x, analytic_concurrence(x, ConcSource::from_bell, Scenario::S2, unit)};
        });
    case 13:
        return grid_figure({"tau_plus_prime", "c_pp_abs", "c_mm_abs", "concurrence"}, 4.0,
                           [&](double x) -> Row {
                               double w = 2.0 * std::tanh(x) / std::cosh(x) *
                                          std::sin(std::sinh(x));
                               return {x, std::sqrt(0.5 * (1.0 + w)),
                                       std::sqrt(0.5 * (1.0 - w)),
                                       analytic_concurrence(x, ConcSource::from_bell,
                                                            Scenario::S2, unit)};
                           });
    default:
        throw std::invalid_argument("figure index must be in 1..13");
    }
}

} // namespace spindimer
