#include "spindimer/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace spindimer {
namespace {

const std::array<cplx, 2>& data_of(const StateVec2& v) { return v.a; }
std::array<cplx, 2>& data_of(StateVec2& v) { return v.a; }
const std::array<cplx, 4>& data_of(const StateVec4& v) { return v.a; }
std::array<cplx, 4>& data_of(StateVec4& v) { return v.a; }
const std::array<cplx, 4>& data_of(const CMat2& m) { return m.e; }
std::array<cplx, 4>& data_of(CMat2& m) { return m.e; }
const std::array<cplx, 16>& data_of(const CMat4& m) { return m.e; }
std::array<cplx, 16>& data_of(CMat4& m) { return m.e; }

template <class T>
T lincomb(double ca, const T& x, double cb, const T& y) {
    T r;
    auto& rd = data_of(r);
    const auto& xd = data_of(x);
    const auto& yd = data_of(y);
    for (size_t i = 0; i < rd.size(); ++i) rd[i] = ca * xd[i] + cb * yd[i];
    return r;
}

template <class T>
double element_max_abs(const T& x) {
    double m = 0.0;
    for (const cplx& z : data_of(x)) m = std::max(m, std::abs(z));
    return m;
}

// -i/hbar H y, the Schrodinger right-hand side
StateVec2 rhs(const CMat2& h, const StateVec2& y, double hbar) {
    StateVec2 r = apply(h, y);
    for (cplx& z : r.a) z *= cplx(0.0, -1.0 / hbar);
    return r;
}
StateVec4 rhs(const CMat4& h, const StateVec4& y, double hbar) {
    StateVec4 r = apply(h, y);
    for (cplx& z : r.a) z *= cplx(0.0, -1.0 / hbar);
    return r;
}
CMat2 rhs(const CMat2& h, const CMat2& y, double hbar) {
    return cplx(0.0, -1.0 / hbar) * (h * y);
}
CMat4 rhs(const CMat4& h, const CMat4& y, double hbar) {
    return cplx(0.0, -1.0 / hbar) * (h * y);
}

template <class Ham, class Y>
Y rk4_step(const Ham& h, double t, const Y& y, double dt, double hbar) {
    Y k1 = rhs(h(t), y, hbar);
    Y k2 = rhs(h(t + 0.5 * dt), lincomb(1.0, y, 0.5 * dt, k1), hbar);
    Y k3 = rhs(h(t + 0.5 * dt), lincomb(1.0, y, 0.5 * dt, k2), hbar);
    Y k4 = rhs(h(t + dt), lincomb(1.0, y, dt, k3), hbar);
    Y acc = lincomb(1.0, k1, 2.0, k2);
    acc = lincomb(1.0, acc, 2.0, k3);
    acc = lincomb(1.0, acc, 1.0, k4);
    return lincomb(1.0, y, dt / 6.0, acc);
}

template <class Mat, class Ham>
void hermiticity_probe(const Ham& h, double t_end) {
    auto check = [&](double t) {
        Mat m = h(t);
        if (max_abs_diff(m, adjoint(m)) > 1e-12)
            throw NonHermitian("oracle: H(t) not Hermitian within 1e-12 at t=" + std::to_string(t));
    };
    check(0.0);
    if (t_end == 0.0) return;
    check(t_end);
    std::mt19937 rng(0x5d1ce5u); // fixed seed: probe points are reproducible
    std::uniform_real_distribution<double> u(0.0, t_end);
    for (int i = 0; i < 8; ++i) check(u(rng));
}

template <class Mat, class Ham, class Y>
Y integrate(const Ham& h, const Y& y0, double t_end, const IntegrationConfig& cfg,
            IntegrationStats* stats) {
    if (t_end < 0.0) throw std::invalid_argument("oracle: t_end must be >= 0");
    if (cfg.abs_tol <= 0.0 || cfg.rel_tol <= 0.0 || cfg.max_steps <= 0 || cfg.hbar <= 0.0)
        throw std::invalid_argument("oracle: bad IntegrationConfig");
    hermiticity_probe<Mat>(h, t_end);

    IntegrationStats st;
    Y y = y0;
    double t = 0.0;

    if (cfg.fixed_step) {
        double dt = cfg.initial_step;
        if (dt <= 0.0) throw std::invalid_argument("oracle: fixed mode needs initial_step > 0");
        while (t < t_end) {
            if (st.accepted >= cfg.max_steps)
                throw StepLimitExceeded("oracle: exceeded max_steps in fixed-step mode");
            double step = std::min(dt, t_end - t);
            y = rk4_step(h, t, y, step, cfg.hbar);
            t += step;
            ++st.accepted;
        }
    } else {
        double dt = cfg.initial_step > 0.0 ? cfg.initial_step : t_end / 100.0;
        if (dt <= 0.0) dt = 1e-3;
        while (t < t_end) {
            dt = std::min(dt, t_end - t);
            if (dt < 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, t))
                throw ToleranceUnreachable("oracle: step underflow at t=" + std::to_string(t));
            if (st.accepted + st.rejected >= cfg.max_steps)
                throw StepLimitExceeded("oracle: exceeded max_steps");

            Y full = rk4_step(h, t, y, dt, cfg.hbar);
            Y half = rk4_step(h, t, y, 0.5 * dt, cfg.hbar);
            half = rk4_step(h, t + 0.5 * dt, half, 0.5 * dt, cfg.hbar);

            // step-doubling error estimate; the two-half-step result is 4th order,
            // so the defect/15 approximates its local error
            double defect = element_max_abs(lincomb(1.0, full, -1.0, half));
            double err = defect / 15.0;
            double scale = cfg.abs_tol + cfg.rel_tol * element_max_abs(half);

            if (err <= scale) {
                // local extrapolation to 5th order
                y = lincomb(1.0, half, 1.0 / 15.0, lincomb(1.0, half, -1.0, full));
                t += dt;
                ++st.accepted;
            } else {
                ++st.rejected;
            }
            double ratio = err > 0.0 ? scale / err : 10.0;
            dt *= std::clamp(0.9 * std::pow(ratio, 0.2), 0.2, 5.0);
        }
    }

    if (stats) *stats = st; // norm_drift filled in by the public wrappers
    return y;
}

} // namespace

StateVec2 integrate_state(const Ham2& h, const StateVec2& state0, double t_end,
                          const IntegrationConfig& cfg, IntegrationStats* stats) {
    StateVec2 y = integrate<CMat2>(h, state0, t_end, cfg, stats);
    if (stats) stats->norm_drift = std::abs(norm(y) - norm(state0));
    return y;
}

StateVec4 integrate_state(const Ham4& h, const StateVec4& state0, double t_end,
                          const IntegrationConfig& cfg, IntegrationStats* stats) {
    StateVec4 y = integrate<CMat4>(h, state0, t_end, cfg, stats);
    if (stats) stats->norm_drift = std::abs(norm(y) - norm(state0));
    return y;
}

CMat2 integrate_propagator(const Ham2& h, double t_end, const IntegrationConfig& cfg,
                           IntegrationStats* stats) {
    CMat2 u = integrate<CMat2>(h, CMat2::identity(), t_end, cfg, stats);
    if (stats) stats->norm_drift = max_abs_diff(adjoint(u) * u, CMat2::identity());
    return u;
}

CMat4 integrate_propagator(const Ham4& h, double t_end, const IntegrationConfig& cfg,
                           IntegrationStats* stats) {
    CMat4 u = integrate<CMat4>(h, CMat4::identity(), t_end, cfg, stats);
    if (stats) stats->norm_drift = max_abs_diff(adjoint(u) * u, CMat4::identity());
    return u;
}

} // namespace spindimer
