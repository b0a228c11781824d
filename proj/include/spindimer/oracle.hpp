#pragma once
#include <functional>

#include "spindimer/algebra.hpp"

// Brute-force integrator for i*hbar dy/dt = H(t) y in dimensions 2 and 4,
// used as independent ground truth for every closed form in the project.
// Classic RK4; adaptive mode uses step doubling for local error control,
// fixed-step mode takes initial_step verbatim (for convergence-order tests).

namespace spindimer {

struct IntegrationConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    double initial_step = 1e-3;
    long max_steps = 20000000;
    bool fixed_step = false;
    double hbar = 1.0;
};

struct IntegrationStats {
    long accepted = 0;
    long rejected = 0;
    double norm_drift = 0.0; // |  ||y(t_end)|| - ||y(0)||  | (states) or max|U^dag U - I| (propagators)
};

// Hamiltonian callbacks; must be evaluable at arbitrary t in [0, t_end].
using Ham2 = std::function<CMat2(double)>;
using Ham4 = std::function<CMat4(double)>;

// Throws NonHermitian if H fails the symmetry check at t=0, t_end or 8 interior
// probe points; StepLimitExceeded / ToleranceUnreachable on integrator failure.
StateVec2 integrate_state(const Ham2& h, const StateVec2& state0, double t_end,
                          const IntegrationConfig& cfg, IntegrationStats* stats = nullptr);
StateVec4 integrate_state(const Ham4& h, const StateVec4& state0, double t_end,
                          const IntegrationConfig& cfg, IntegrationStats* stats = nullptr);

// Full propagator with U(0) = I.
CMat2 integrate_propagator(const Ham2& h, double t_end, const IntegrationConfig& cfg,
                           IntegrationStats* stats = nullptr);
CMat4 integrate_propagator(const Ham4& h, double t_end, const IntegrationConfig& cfg,
                           IntegrationStats* stats = nullptr);

} // namespace spindimer
