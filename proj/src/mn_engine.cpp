#include "spindimer/mn_engine.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spindimer/quadrature.hpp"

namespace spindimer {
namespace {

constexpr double pi = std::numbers::pi;
constexpr double overflow_gt = 700.0; // cosh/sinh overflow a little past this

void check_driven(double t, const SectorParams& p, const char* who) {
    if (t < 0.0) throw std::invalid_argument(std::string(who) + ": t must be >= 0");
    if (p.hbar <= 0.0) throw std::invalid_argument(std::string(who) + ": hbar must be > 0");
    if (p.gamma_abs <= 0.0)
        throw DegenerateCoupling(std::string(who) + ": |Gamma| = 0 freezes the drive");
}

double rate(const SectorParams& p, Scenario s) {
    return (s == Scenario::S1 ? 2.0 : 1.0) * p.gamma_abs / p.hbar;
}

} // namespace

CMat2 Propagator2::matrix() const { return sector_matrix(*this, 0.0); }

CMat2 sector_matrix(const Propagator2& p, double gamma_phase) {
    cplx a = std::polar(p.a_abs, p.phi_a);
    cplx b = std::polar(p.b_abs, p.phi_b + gamma_phase);
    CMat2 m;
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = -std::conj(b);
    m(1, 1) = std::conj(a);
    return m;
}

ThetaDrive::ThetaDrive(std::function<double(double)> th, std::function<double(double)> th_dot,
                       double tmax)
    : theta(std::move(th)), theta_dot(std::move(th_dot)), t_max(tmax) {
    if (!theta || !theta_dot) throw std::invalid_argument("ThetaDrive: null function");
    if (!(t_max > 0.0)) throw std::invalid_argument("ThetaDrive: t_max must be > 0");
    if (theta(0.0) != 0.0) throw std::invalid_argument("ThetaDrive: theta(0) must be exactly 0");
}

std::pair<double, double> scenario1_amplitudes(double t, const SectorParams& p) {
    check_driven(t, p, "scenario1_amplitudes");
    double x = rate(p, Scenario::S1) * t;
    double s = x > overflow_gt ? 0.0 : 1.0 / std::cosh(x);
    return {std::sqrt(0.5 * (1.0 + s)), std::sqrt(0.5 * (1.0 - s))};
}

std::pair<double, double> scenario1_phases(double t, const SectorParams& p) {
    check_driven(t, p, "scenario1_phases");
    double x = rate(p, Scenario::S1) * t;
    double half_theta = std::atan(std::tanh(0.5 * x));
    return {-half_theta - 0.5 * x, -half_theta + 0.5 * x - 0.5 * pi};
}

double scenario1_omega(double t, const SectorParams& p) {
    check_driven(t, p, "scenario1_omega");
    double x = rate(p, Scenario::S1) * t;
    return x > overflow_gt ? 0.0 : 2.0 * p.gamma_abs / std::cosh(x);
}

std::pair<double, double> scenario2_amplitudes(double t, const SectorParams& p) {
    check_driven(t, p, "scenario2_amplitudes");
    double x = rate(p, Scenario::S2) * t;
    if (x > overflow_gt) return {0.0, 1.0};
    return {1.0 / std::cosh(x), std::tanh(x)};
}

std::pair<double, double> scenario2_phases(double t, const SectorParams& p) {
    check_driven(t, p, "scenario2_phases");
    double x = rate(p, Scenario::S2) * t;
    double half_theta = std::atan(std::tanh(0.5 * x));
    // past the overflow guard the sinh term is clamped: the phase spins
    // unphysically fast there and the amplitudes carry all the physics
    double r = 0.5 * std::sinh(std::min(x, overflow_gt));
    return {-half_theta - r, -half_theta + r - 0.5 * pi};
}

double scenario2_omega(double t, const SectorParams& p) {
    check_driven(t, p, "scenario2_omega");
    double x = std::min(rate(p, Scenario::S2) * t, overflow_gt);
    return 0.5 * p.gamma_abs * (3.0 / std::cosh(x) - std::cosh(x));
}

std::pair<double, double> scenario_amplitudes(double t, const SectorParams& p, Scenario s) {
    return s == Scenario::S1 ? scenario1_amplitudes(t, p) : scenario2_amplitudes(t, p);
}

std::pair<double, double> scenario_phases(double t, const SectorParams& p, Scenario s) {
    return s == Scenario::S1 ? scenario1_phases(t, p) : scenario2_phases(t, p);
}

double scenario_omega(double t, const SectorParams& p, Scenario s) {
    return s == Scenario::S1 ? scenario1_omega(t, p) : scenario2_omega(t, p);
}

Propagator2 scenario_propagator(double t, const SectorParams& p, Scenario s) {
    auto [a, b] = scenario_amplitudes(t, p, s);
    auto [fa, fb] = scenario_phases(t, p, s);
    return {a, b, fa, fb, t};
}

ThetaDrive scenario_theta_drive(const SectorParams& p, Scenario s, double t_max) {
    check_driven(0.0, p, "scenario_theta_drive");
    double g = rate(p, s);
    return ThetaDrive([g](double t) { return std::asin(std::tanh(g * t)); },
                      [g](double t) { return g / std::cosh(g * t); }, t_max);
}

namespace {

// (|G|/hbar) * integral of cos(theta) from 0 to u
double chi_of(const ThetaDrive& d, double u, const SectorParams& p) {
    if (u == 0.0) return 0.0;
    return p.gamma_abs / p.hbar *
           adaptive_simpson([&d](double s) { return std::cos(d.theta(s)); }, 0.0, u);
}

void check_theta_args(const ThetaDrive& d, double t, const SectorParams& p, const char* who,
                      bool allow_zero) {
    check_driven(t, p, who);
    if (t > d.t_max) throw std::invalid_argument(std::string(who) + ": t beyond drive domain");
    if (!allow_zero && t == 0.0) throw std::invalid_argument(std::string(who) + ": t must be > 0");
}

} // namespace

double omega_from_theta(const ThetaDrive& d, double t, const SectorParams& p) {
    check_theta_args(d, t, p, "omega_from_theta", false);
    double m = 2.0 * chi_of(d, t, p);
    if (std::abs(std::remainder(m, pi)) < 1e-9)
        throw CotangentSingularity("omega_from_theta: field diverges at t=" + std::to_string(t));
    return 0.5 * p.hbar * d.theta_dot(t) +
           p.gamma_abs * std::sin(d.theta(t)) * std::cos(m) / std::sin(m);
}

Propagator2 propagator_from_theta(const ThetaDrive& d, double t, const SectorParams& p) {
    check_theta_args(d, t, p, "propagator_from_theta", true);
    if (t == 0.0) return {1.0, 0.0, 0.0, -0.5 * pi, 0.0};

    double k = p.gamma_abs / p.hbar;
    double chi_t = chi_of(d, t, p);

    // R integrand: k sin(theta(u)) / sin(2 chi(u)); both factors vanish
    // linearly at u = 0, so the endpoint takes the analytic limit
    auto r_integrand = [&](double u) {
        if (u == 0.0) return 0.5 * d.theta_dot(0.0) / std::cos(d.theta(0.0));
        double m = 2.0 * chi_of(d, u, p);
        if (m > 0.5 * pi && std::abs(std::remainder(m, pi)) < 1e-9)
            throw CotangentSingularity("propagator_from_theta: phase integral singular at t=" +
                                       std::to_string(u));
        return k * std::sin(d.theta(u)) / std::sin(m);
    };
    double r = adaptive_simpson(r_integrand, 0.0, t);

    double a_abs = std::cos(chi_t);
    if (a_abs < 0.0)
        throw CotangentSingularity("propagator_from_theta: drive crossed a field singularity");
    double b_abs = std::sqrt(std::max(0.0, 1.0 - a_abs * a_abs));
    double half_theta = 0.5 * d.theta(t);
    return {a_abs, b_abs, -half_theta - r, -half_theta + r - 0.5 * pi, t};
}

Propagator2 rabi_sector_propagator(double t, const SectorParams& p) {
    if (t < 0.0) throw std::invalid_argument("rabi_sector_propagator: t must be >= 0");
    if (p.hbar <= 0.0) throw std::invalid_argument("rabi_sector_propagator: hbar must be > 0");
    double th = p.gamma_abs * t / p.hbar;
    double c = std::cos(th);
    double s = std::sin(th);
    Propagator2 r;
    r.a_abs = std::abs(c);
    r.phi_a = c >= 0.0 ? 0.0 : pi;
    r.b_abs = std::abs(s);
    r.phi_b = s >= 0.0 ? -0.5 * pi : 0.5 * pi;
    r.t = t;
    return r;
}

CMat2 static_sector_propagator(double t, cplx gamma_minus, double gamma_zz, double hbar) {
    if (hbar <= 0.0) throw std::invalid_argument("static_sector_propagator: hbar must be > 0");
    // the minus parity sector carries -gamma_zz on its diagonal, hence the
    // +gamma_zz scalar phase; plus-sector callers pass -gamma_zz
    cplx phase = std::polar(1.0, gamma_zz * t / hbar);
    double g = std::abs(gamma_minus);
    CMat2 u;
    if (g == 0.0) {
        u(0, 0) = phase;
        u(1, 1) = phase;
        return u;
    }
    double th = g * t / hbar;
    cplx eiphi = cplx(0.0, -1.0) * gamma_minus / g; // e^{i Phi}, Phi = arg(Gamma) - pi/2
    u(0, 0) = phase * std::cos(th);
    u(0, 1) = phase * eiphi * std::sin(th);
    u(1, 0) = -phase * std::conj(eiphi) * std::sin(th);
    u(1, 1) = phase * std::cos(th);
    return u;
}

} // namespace spindimer
