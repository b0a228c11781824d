#pragma once
#include <string>
#include <vector>

#include "spindimer/dimer.hpp"
#include "spindimer/schedules.hpp"

// Verification checks comparing every closed form against the brute-force
// integrator and asserting the structural invariants. Shared by the `verify`
// CLI subcommand, the acceptance gate and the unit tests.

namespace spindimer {

struct CheckResult {
    std::string name;
    double max_err = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct VerifyOptions {
    int draws = 20;        // randomized draws for the sector-level oracle checks
    unsigned seed = 20210905;
    int checkpoints = 6;   // oracle comparison instants per integration
    double mutation = 0.0; // fractional |Gamma| perturbation of the closed-form
                           // side only; nonzero values must make the suite fail
};

// closed-form sector propagator vs integrated 2x2, random (|Gamma|, arg Gamma)
CheckResult check_sector_oracle(Scenario s, const VerifyOptions& opt);

// closed-form 4x4 propagator vs integrated full Hamiltonian for one schedule
CheckResult check_full_oracle(const DimerCouplings& c, const ScheduleSpec& spec,
                              const VerifyOptions& opt);

// equal-frequency case: integrated inner 2x2 block vs the static closed form
// for three different smooth omega(t), complex Gamma_minus and gzz != 0
CheckResult check_static_block(const VerifyOptions& opt);

// assembled 4x4 vs brute-force conjugation of the embedded sector blocks
CheckResult check_assembly_brute_force(const VerifyOptions& opt);

// structural invariants along closed-form trajectories
CheckResult check_parity_conservation(const VerifyOptions& opt);
CheckResult check_unitarity(const VerifyOptions& opt);
CheckResult check_block_zero_pattern(const VerifyOptions& opt);
CheckResult check_covariance_identity(const VerifyOptions& opt);

// scenario asymptotics, Bell generation, closed-form observable agreement
CheckResult check_asymptotics();
CheckResult check_bell_generation();
CheckResult check_concurrence_forms();
CheckResult check_entanglement_instants();
CheckResult check_observable_forms();
CheckResult check_sx_asymptote();

// byte-identical figure regeneration plus the two pinned figure values
CheckResult check_figure_determinism();

// fast: trimmed draw counts and schedule set; full: everything
std::vector<CheckResult> verify_suite(bool full, const VerifyOptions& opt);

} // namespace spindimer
