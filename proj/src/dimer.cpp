#include "spindimer/dimer.hpp"

#include <cmath>
#include <stdexcept>

namespace spindimer {

DimerCouplings special_couplings(double c) {
    DimerCouplings d;
    d.gxx = c;
    d.gyy = c;
    d.gxy = 0.5 * c;
    d.gyx = 0.5 * c;
    return d;
}

DimerCouplings real_sector_couplings(double c) {
    DimerCouplings d;
    d.gxx = 1.5 * c;
    d.gyy = 0.5 * c;
    d.gxy = 0.0;
    d.gyx = 0.0;
    return d;
}

CMat4 build_hamiltonian(const DimerCouplings& c, double omega1, double omega2) {
    const CMat2 sx = pauli2(Axis::x), sy = pauli2(Axis::y), sz = pauli2(Axis::z);
    const CMat2 id = CMat2::identity();
    CMat4 h = cplx(c.hbar * omega1) * kron(sz, id) + cplx(c.hbar * omega2) * kron(id, sz);
    h = h + cplx(c.gxx) * kron(sx, sx) + cplx(c.gyy) * kron(sy, sy) + cplx(c.gzz) * kron(sz, sz);
    h = h + cplx(c.gxy) * kron(sx, sy) + cplx(c.gyx) * kron(sy, sx);
    return h;
}

CMat4 symmetry_u() {
    const CMat2 sx = pauli2(Axis::x), sz = pauli2(Axis::z);
    const CMat2 id = CMat2::identity();
    CMat4 u = kron(id, id) + kron(sz, id) + kron(id, sx) - kron(sz, sx);
    return cplx(0.5) * u;
}

cplx sector_gamma(const DimerCouplings& c, int sector) {
    if (sector != 1 && sector != -1)
        throw std::invalid_argument("sector_gamma: sector must be +1 or -1");
    double s = static_cast<double>(sector);
    return cplx(c.gxx - s * c.gyy, -(s * c.gxy + c.gyx));
}

SectorParams sector_params(const DimerCouplings& c, int sector) {
    cplx g = sector_gamma(c, sector);
    return {std::abs(g), std::arg(g), c.hbar};
}

CMat2 sector_hamiltonian(const DimerCouplings& c, double omega1, double omega2, int sector) {
    cplx g = sector_gamma(c, sector);
    double s = static_cast<double>(sector);
    double omega = c.hbar * (omega1 + s * omega2);
    CMat2 h;
    h(0, 0) = s * c.gzz + omega;
    h(0, 1) = g;
    h(1, 0) = std::conj(g);
    h(1, 1) = s * c.gzz - omega;
    return h;
}

namespace {

// sector block with its arg Gamma rotation and gzz phase; the (+/-)gzz
// diagonal of H_pm integrates to the scalar phase e^{-(+/-) i gzz t/hbar}
CMat2 sector_block(const Propagator2& p, const DimerCouplings& c, int sector, double t) {
    cplx g = sector_gamma(c, sector);
    CMat2 m = sector_matrix(p, std::arg(g));
    cplx phase = std::polar(1.0, -static_cast<double>(sector) * c.gzz * t / c.hbar);
    return phase * m;
}

} // namespace

Propagator4 assemble_propagator(const Propagator2& p_plus, const Propagator2& p_minus,
                                const DimerCouplings& c, double t,
                                const std::string& provenance) {
    if (p_plus.t != p_minus.t || p_plus.t != t)
        throw TimeMismatch("assemble_propagator: sector propagators at different times");
    if (c.hbar <= 0.0) throw std::invalid_argument("assemble_propagator: hbar must be > 0");

    CMat2 up = sector_block(p_plus, c, +1, t);
    CMat2 um = sector_block(p_minus, c, -1, t);

    Propagator4 u;
    u.t = t;
    u.provenance = provenance;
    // + sector on slots {0,3}, - sector on slots {1,2}; all other entries
    // stay exact zeros by construction
    u.matrix(0, 0) = up(0, 0);
    u.matrix(0, 3) = up(0, 1);
    u.matrix(3, 0) = up(1, 0);
    u.matrix(3, 3) = up(1, 1);
    u.matrix(1, 1) = um(0, 0);
    u.matrix(1, 2) = um(0, 1);
    u.matrix(2, 1) = um(1, 0);
    u.matrix(2, 2) = um(1, 1);
    return u;
}

Propagator4 static_full_propagator(const DimerCouplings& c, const Propagator2& p_plus, double t) {
    if (p_plus.t != t)
        throw TimeMismatch("static_full_propagator: p_plus evaluated at a different time");
    if (c.hbar <= 0.0) throw std::invalid_argument("static_full_propagator: hbar must be > 0");

    CMat2 up = sector_block(p_plus, c, +1, t);
    CMat2 um = static_sector_propagator(t, sector_gamma(c, -1), c.gzz, c.hbar);

    Propagator4 u;
    u.t = t;
    u.provenance = "static";
    u.matrix(0, 0) = up(0, 0);
    u.matrix(0, 3) = up(0, 1);
    u.matrix(3, 0) = up(1, 0);
    u.matrix(3, 3) = up(1, 1);
    u.matrix(1, 1) = um(0, 0);
    u.matrix(1, 2) = um(0, 1);
    u.matrix(2, 1) = um(1, 0);
    u.matrix(2, 2) = um(1, 1);
    return u;
}

StateVec4 evolve(const StateVec4& state0, const Propagator4& u) {
    return apply(u.matrix, state0);
}

} // namespace spindimer
