#include "spindimer/observables.hpp"

#include <cmath>
#include <stdexcept>

#include "spindimer/errors.hpp"

namespace spindimer {

CMat4 s_total_op(Axis a, double hbar) {
    return cplx(0.5 * hbar) * (pauli(a, 1) + pauli(a, 2));
}

CMat4 s_squared_op(double hbar) {
    CMat4 sx = s_total_op(Axis::x, hbar);
    CMat4 sy = s_total_op(Axis::y, hbar);
    CMat4 sz = s_total_op(Axis::z, hbar);
    return sx * sx + sy * sy + sz * sz;
}

double expect_sz(const StateVec4& s, double hbar) {
    return expectation(s, s_total_op(Axis::z, hbar));
}

double expect_sx(const StateVec4& s, double hbar) {
    return expectation(s, s_total_op(Axis::x, hbar));
}

double expect_s2(const StateVec4& s, double hbar) {
    return expectation(s, s_squared_op(hbar));
}

double concurrence(const StateVec4& s) {
    return 2.0 * std::abs(s.a[0] * s.a[3] - s.a[1] * s.a[2]);
}

std::pair<double, double> covariances(const StateVec4& s) {
    CMat4 s1x = pauli(Axis::x, 1), s2x = pauli(Axis::x, 2);
    CMat4 s1y = pauli(Axis::y, 1), s2y = pauli(Axis::y, 2);
    double cxx = expectation(s, s1x * s2x) - expectation(s, s1x) * expectation(s, s2x);
    double cyy = expectation(s, s1y * s2y) - expectation(s, s1y) * expectation(s, s2y);
    return {cxx, cyy};
}

std::pair<double, double> amplitude_covariances(const StateVec4& s) {
    cplx z = s.a[0] * std::conj(s.a[3]) + s.a[1] * std::conj(s.a[2]);
    return {2.0 * z.real(), 2.0 * z.imag()};
}

ObservableSample sample_observables(double t, const StateVec4& s, double hbar) {
    ObservableSample o;
    o.t = t;
    o.sz = expect_sz(s, hbar);
    o.s2 = expect_s2(s, hbar);
    o.sx = expect_sx(s, hbar);
    o.concurrence = concurrence(s);
    auto [cxx, cyy] = covariances(s);
    o.cxx = cxx;
    o.cyy = cyy;
    return o;
}

namespace {

double rate_arg(double t, const SectorParams& p, double factor) {
    if (p.gamma_abs <= 0.0)
        throw DegenerateCoupling("analytic form needs |Gamma| > 0");
    return factor * p.gamma_abs * t / p.hbar;
}

double sign_of(Branch b) { return b == Branch::alpha ? 1.0 : -1.0; }

} // namespace

double analytic_sz_parity_plus(double t, Scenario s, Branch b, const SectorParams& p) {
    if (s == Scenario::S1) {
        double tau = rate_arg(t, p, 2.0);
        return sign_of(b) * p.hbar / std::cosh(tau);
    }
    double g = rate_arg(t, p, 1.0);
    double se = 1.0 / std::cosh(g);
    return sign_of(b) * p.hbar * (2.0 * se * se - 1.0);
}

double analytic_s2_parity_minus(double t, DriveKind k, Branch b, const SectorParams& p,
                                double static_phi) {
    double h2 = p.hbar * p.hbar;
    if (k == DriveKind::s1) {
        double th = std::tanh(rate_arg(t, p, 2.0));
        return h2 * (1.0 + sign_of(b) * th * th);
    }
    if (k == DriveKind::s2) {
        double g = rate_arg(t, p, 1.0);
        double th = std::tanh(g);
        return h2 * (1.0 + sign_of(b) * 2.0 * th * th / std::cosh(g));
    }
    double tau = rate_arg(t, p, 2.0);
    return h2 * (1.0 - sign_of(b) * std::sin(tau) * std::cos(static_phi));
}

double analytic_sx_asymptotic(double t, const DimerCouplings& c) {
    double gp = std::abs(sector_gamma(c, +1));
    double gm = std::abs(sector_gamma(c, -1));
    if (gp <= 0.0) throw DegenerateCoupling("asymptotic <Sx> needs |Gamma_plus| > 0");
    double tau = 2.0 * gp * t / c.hbar;
    return 0.5 * c.hbar * std::cos((c.gzz / gp + gm / (2.0 * gp) - 0.5) * tau);
}

double analytic_concurrence(double t, ConcSource src, Scenario s, const SectorParams& p) {
    if (s == Scenario::S1) {
        double tau = rate_arg(t, p, 2.0);
        double th = std::tanh(tau);
        if (src == ConcSource::from_pp) return th;
        double si = std::sin(tau);
        return std::sqrt(1.0 - th * th * si * si);
    }
    double g = rate_arg(t, p, 1.0);
    double th = std::tanh(g), se = 1.0 / std::cosh(g);
    if (src == ConcSource::from_pp) return 2.0 * th * se;
    double si = std::sin(std::sinh(g));
    return std::sqrt(1.0 - 4.0 * th * th * se * se * si * si);
}

EntanglementInstant entanglement_instants(int n) {
    if (n < 0) throw std::invalid_argument("entanglement instant index must be >= 0");
    double x = n * std::acos(-1.0);
    EntanglementInstant e;
    e.tau = std::asinh(x);
    double r = std::sqrt(1.0 + x * x);
    e.phi = std::sqrt((r - 1.0) / (r + 1.0));
    e.theta = std::atan(n % 2 == 0 ? -x : x);
    return e;
}

StateVec4 bell_state(Bell which) {
    double r = 1.0 / std::sqrt(2.0);
    StateVec4 s; // zero-initialized
    switch (which) {
    case Bell::phi_plus: s.a[0] = r; s.a[3] = r; break;
    case Bell::phi_minus: s.a[0] = r; s.a[3] = -r; break;
    case Bell::psi_plus: s.a[1] = r; s.a[2] = r; break;
    case Bell::psi_minus: s.a[1] = r; s.a[2] = -r; break;
    }
    return s;
}

double bell_fidelity(const StateVec4& s, Bell which) {
    cplx ov = inner(bell_state(which), s);
    return std::norm(ov);
}

double survival_probability(const StateVec4& state_t, const StateVec4& state_0) {
    cplx ov = inner(state_0, state_t);
    return std::norm(ov);
}

} // namespace spindimer
