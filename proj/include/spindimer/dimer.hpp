#pragma once
#include <string>

#include "spindimer/algebra.hpp"
#include "spindimer/mn_engine.hpp"

// Two-spin layer. The Hamiltonian
//   H = hbar w1 s1z + hbar w2 s2z + gxx s1x s2x + gyy s1y s2y
//     + gzz s1z s2z + gxy s1x s2y + gyx s1y s2x
// commutes with the parity s1z s2z, so the dynamics splits into two 2x2
// sectors. Conjugating by the involution U = (1 + s1z + s2x - s1z s2x)/2
// maps the parity onto s2z; the sector Hamiltonians are
//   H_pm = (+/-) gzz I + [[Omega_pm, Gamma_pm], [Gamma_pm*, -Omega_pm]],
// with Omega_pm = hbar (w1 +/- w2) and Gamma_pm = (gxx -/+ gyy) - i((+/-)gxy + gyx).
//
// Frozen sector-to-basis contract: the + sector (parity +1) occupies basis
// slots {|++>, |-->} = rows/cols {0, 3}; the - sector slots {|+->, |-+>} =
// rows/cols {1, 2}. The scalar (+/-)gzz produces the sector phases
// e^{-(+/-) i gzz t / hbar}, attached at assembly time.

namespace spindimer {

struct DimerCouplings {
    double gxx = 1.0;
    double gyy = 1.0;
    double gzz = 0.0;
    double gxy = 0.5;
    double gyx = 0.5;
    double hbar = 1.0;
};

// gxx = gyy = 2 gxy = 2 gyx = c, giving |Gamma_plus| = c (arg -pi/2) and
// Gamma_minus = 2c; the defaults above are special_couplings(1)
DimerCouplings special_couplings(double c = 1.0);

// same sector magnitudes |Gamma_plus| = c, Gamma_minus = 2c but with both
// sector couplings real and positive (gxx = 3c/2, gyy = c/2, gxy = gyx = 0);
// used wherever a closed form assumes arg Gamma = 0
DimerCouplings real_sector_couplings(double c = 1.0);

// assembled 4x4 propagator; the eight off-pattern entries are exact zeros
struct Propagator4 {
    CMat4 matrix;
    double t = 0.0;
    std::string provenance = "assembled"; // scenario ids, "static" or "oracle"
};

CMat4 build_hamiltonian(const DimerCouplings& c, double omega1, double omega2);

// the involutory symmetry operator; permutes basis slots 2 and 3
CMat4 symmetry_u();

// Gamma_pm for sector = +1 / -1
cplx sector_gamma(const DimerCouplings& c, int sector);

// convenience: SectorParams carrying |Gamma_pm|, arg Gamma_pm and hbar
SectorParams sector_params(const DimerCouplings& c, int sector);

CMat2 sector_hamiltonian(const DimerCouplings& c, double omega1, double omega2, int sector);

// Build the full 4x4 propagator from the two sector propagators evaluated at
// the same t. Applies the arg Gamma_pm rotations and the gzz sector phases.
// Throws TimeMismatch if the time stamps disagree.
Propagator4 assemble_propagator(const Propagator2& p_plus, const Propagator2& p_minus,
                                const DimerCouplings& c, double t,
                                const std::string& provenance = "assembled");

// Equal-frequency (omega1 == omega2) case: the minus sector is time
// independent regardless of omega(t); its block comes from
// static_sector_propagator, the plus block from the supplied p_plus.
Propagator4 static_full_propagator(const DimerCouplings& c, const Propagator2& p_plus, double t);

// u.matrix * state0; no renormalization (norm drift is a test signal)
StateVec4 evolve(const StateVec4& state0, const Propagator4& u);

} // namespace spindimer
