#pragma once
#include <utility>

#include "spindimer/algebra.hpp"
#include "spindimer/dimer.hpp"
#include "spindimer/mn_engine.hpp"

// Observables on dimer states (expectations, concurrence, covariances,
// fidelities) plus the analytic closed forms used as independent
// cross-checks and figure generators. The analytic forms never touch the
// state-based code paths, so agreement between the two is a real test.

namespace spindimer {

enum class Branch { alpha, beta };            // alpha: from |++⟩ / |+-⟩; beta: partner state
enum class DriveKind { s1, s2, static_case }; // which closed form applies to the minus sector
enum class ConcSource { from_pp, from_bell };
enum class Bell { phi_plus, phi_minus, psi_plus, psi_minus };

struct ObservableSample {
    double t = 0.0;
    double sz = 0.0;          // units of hbar
    double s2 = 0.0;          // units of hbar^2
    double sx = 0.0;          // units of hbar
    double concurrence = 0.0; // in [0, 1]
    double cxx = 0.0;         // in [-1, 1]
    double cyy = 0.0;         // in [-1, 1]
};

// total-spin operators built from Pauli constructors, S = S1 + S2, S_i = (hbar/2) sigma_i
CMat4 s_total_op(Axis a, double hbar = 1.0);
CMat4 s_squared_op(double hbar = 1.0);

double expect_sz(const StateVec4& s, double hbar = 1.0);
double expect_sx(const StateVec4& s, double hbar = 1.0);
double expect_s2(const StateVec4& s, double hbar = 1.0);

// C = 2|c_pp c_mm - c_pm c_mp| for pure states
double concurrence(const StateVec4& s);

// true operator covariances (cov(s1x,s2x), cov(s1y,s2y)) of the sigma operators
std::pair<double, double> covariances(const StateVec4& s);

// (2Re[z], 2Im[z]) with z = c_pp c_mm* + c_pm c_mp*; on parity-definite
// states C = sqrt(cxx^2 + cyy^2) holds exactly for THIS pair (it does not
// hold for the operator covariances: |Phi+> gives (1,-1) there)
std::pair<double, double> amplitude_covariances(const StateVec4& s);

ObservableSample sample_observables(double t, const StateVec4& s, double hbar = 1.0);

// ---- analytic closed forms (parameter swap p covers either sector) ----

// <Sz> for the parity-plus block: S1 gives ±hbar sech(2|Γ|t/ℏ), S2 gives
// ±hbar (2 sech²(|Γ|t/ℏ) − 1); + for alpha (from |++⟩), − for beta
double analytic_sz_parity_plus(double t, Scenario s, Branch b, const SectorParams& p);

// <S²> for the parity-minus block: S1 hbar²[1 ± tanh²(2|Γ|t/ℏ)],
// S2 hbar²[1 ± 2 tanh²(γt) sech(γt)] (γ=|Γ|/ℏ),
// static hbar²[1 ∓ sin(2|Γ|t/ℏ) cos(static_phi)]; upper sign alpha (from |+-⟩)
double analytic_s2_parity_minus(double t, DriveKind k, Branch b, const SectorParams& p,
                                double static_phi = 0.0);

// asymptotic <Sx> for the sx_max initial state under the fully driven schedule:
// (hbar/2) cos[(gzz/|Γ₊| + |Γ₋|/(2|Γ₊|) − 1/2) τ₊], τ₊ = 2|Γ₊|t/ℏ
double analytic_sx_asymptotic(double t, const DimerCouplings& c);

// concurrence closed forms for evolution inside one parity sector
double analytic_concurrence(double t, ConcSource src, Scenario s, const SectorParams& p);

// instants of maximal entanglement from a Bell state under S2:
// tau_n = arcsinh(nπ), phi_n = sqrt((sqrt(1+(nπ)²)−1)/(sqrt(1+(nπ)²)+1)),
// theta_n = arctan((−1)^{n+1} nπ)
struct EntanglementInstant {
    double tau = 0.0;
    double phi = 0.0;
    double theta = 0.0;
};
EntanglementInstant entanglement_instants(int n);

StateVec4 bell_state(Bell which);
double bell_fidelity(const StateVec4& s, Bell which); // |<Bell|s>|²
double survival_probability(const StateVec4& state_t, const StateVec4& state_0);

} // namespace spindimer
