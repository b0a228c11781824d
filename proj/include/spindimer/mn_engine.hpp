#pragma once
#include <functional>
#include <utility>

#include "spindimer/algebra.hpp"
#include "spindimer/errors.hpp"

// Single-sector engine: the two engineered drive scenarios in closed form and
// the generic Theta(t)-driven construction of the longitudinal field and the
// 2x2 propagator by quadrature.
//
// The sector problem is i*hbar dU/dt = [[Omega(t), G], [G*, -Omega(t)]] U with
// constant transverse coupling G. The closed forms below are written for real
// G = |G|; a complex phase chi = arg G enters only as a rotation of the
// off-diagonal entry, applied in sector_matrix (b -> b e^{i chi}), because
// the problem for G = |G|e^{i chi} is D^dag U_real D with
// D = diag(e^{-i chi/2}, e^{+i chi/2}).
//
// Scenario S1: Omega = 2|G| sech(gamma t), gamma = 2|G|/hbar; the fictitious
// spin glides into the equal superposition (|a|,|b| -> 1/sqrt2).
// Scenario S2: Omega = (|G|/2)[3 sech(gamma t) - cosh(gamma t)], gamma =
// |G|/hbar; perfect inversion (|a| -> 0, |b| -> 1).

namespace spindimer {

enum class Scenario { S1, S2 };

struct SectorParams {
    double gamma_abs = 1.0;   // |G|, energy
    double gamma_phase = 0.0; // arg G, radians
    double hbar = 1.0;
};

// 2x2 sector propagator in the canonical form
// [[ |a| e^{i phi_a},      |b| e^{i phi_b}   ],
//  [ -|b| e^{-i phi_b},    |a| e^{-i phi_a}  ]]
struct Propagator2 {
    double a_abs = 1.0;
    double b_abs = 0.0;
    double phi_a = 0.0;
    double phi_b = -1.5707963267948966; // -pi/2
    double t = 0.0;                     // evaluation time, checked at assembly
    CMat2 matrix() const;
};

// matrix form with the arg G rotation applied to the b entry
CMat2 sector_matrix(const Propagator2& p, double gamma_phase);

// generic engineered drive; theta(0) must be exactly 0
struct ThetaDrive {
    std::function<double(double)> theta;
    std::function<double(double)> theta_dot;
    double t_max = 0.0;
    ThetaDrive(std::function<double(double)> th, std::function<double(double)> th_dot,
               double tmax);
};

std::pair<double, double> scenario1_amplitudes(double t, const SectorParams& p);
std::pair<double, double> scenario1_phases(double t, const SectorParams& p);
double scenario1_omega(double t, const SectorParams& p);

std::pair<double, double> scenario2_amplitudes(double t, const SectorParams& p);
std::pair<double, double> scenario2_phases(double t, const SectorParams& p);
double scenario2_omega(double t, const SectorParams& p);

// convenience dispatch over the two scenarios
std::pair<double, double> scenario_amplitudes(double t, const SectorParams& p, Scenario s);
std::pair<double, double> scenario_phases(double t, const SectorParams& p, Scenario s);
double scenario_omega(double t, const SectorParams& p, Scenario s);
Propagator2 scenario_propagator(double t, const SectorParams& p, Scenario s);

// the scenario drives as Theta functions: theta(t) = asin(tanh(gamma t)) with
// gamma = 2|G|/hbar (S1) or |G|/hbar (S2)
ThetaDrive scenario_theta_drive(const SectorParams& p, Scenario s, double t_max);

// engineered longitudinal field for an arbitrary drive:
// Omega = (hbar/2) theta_dot + |G| sin(theta) cot[(2|G|/hbar) int_0^t cos(theta)]
// Throws CotangentSingularity when the cot argument is within 1e-9 of a
// multiple of pi (including 0, so t -> 0+ is excluded by contract).
double omega_from_theta(const ThetaDrive& d, double t, const SectorParams& p);

// closed-form propagator for an arbitrary drive, by quadrature:
// |a| = cos(chi_t), chi_t = (|G|/hbar) int_0^t cos(theta); |b| from
// normalization; phi_a = -theta/2 - R, phi_b = -theta/2 + R - pi/2 with
// R = (|G|/hbar) int_0^t sin(theta)/sin(2 chi) dt'. The t'->0 limit of the R
// integrand (theta_dot(0) hbar / (2|G| cos(theta(0)))) is handled analytically.
Propagator2 propagator_from_theta(const ThetaDrive& d, double t, const SectorParams& p);

// zero-longitudinal-field sector propagator (constant Omega = 0), used for the
// unconstrained sector of a single-sector schedule
Propagator2 rabi_sector_propagator(double t, const SectorParams& p);

// Exact propagator of the time-independent minus-sector problem
// H = -gamma_zz I + [[0, G], [G*, 0]]:
//   e^{+i gamma_zz t/hbar} [[cos, e^{i Phi} sin], [-e^{-i Phi} sin, cos]],
// argument |G| t/hbar, e^{i Phi} = -i G/|G|. The diagonal -gamma_zz of the
// minus sector fixes the prefactor sign; pass -gamma_zz for a plus-sector use.
// |G| = 0 degenerates to a pure phase, which is valid.
CMat2 static_sector_propagator(double t, cplx gamma_minus, double gamma_zz, double hbar);

} // namespace spindimer
