#pragma once
#include <string>
#include <vector>

#include "spindimer/dimer.hpp"
#include "spindimer/observables.hpp"
#include "spindimer/schedules.hpp"

// Closed-form propagation sampled over time grids, the figure-data
// generators, and the named initial states. Every sample is an independent
// closed-form evaluation, so grids are embarrassingly parallel: the OpenMP
// kernels write results by index and are bitwise identical to the serial
// reference implementations kept for testing and benchmarking.

namespace spindimer {

struct TimeGrid {
    double t_max = 10.0;
    int samples = 1000;
    double at(int k) const { return samples > 1 ? t_max * k / (samples - 1) : 0.0; }
};

// closed-form propagator at physical time t for the given schedule class
Propagator4 schedule_propagator(const DimerCouplings& c, const ScheduleSpec& spec, double t);

std::vector<StateVec4> propagate_grid_serial(const DimerCouplings& c, const ScheduleSpec& spec,
                                             const StateVec4& s0, const TimeGrid& grid);
std::vector<StateVec4> propagate_grid(const DimerCouplings& c, const ScheduleSpec& spec,
                                      const StateVec4& s0, const TimeGrid& grid);

// named initial states: pp, mm, pm, mp, bell_phi_plus, bell_psi_plus, sx_max;
// throws std::invalid_argument on an unknown name
StateVec4 named_state(const std::string& name);

// figure data generated from closed forms alone (columns[0] is the abscissa)
struct FigureData {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};
FigureData figure_data(int n); // n in 1..13

} // namespace spindimer
