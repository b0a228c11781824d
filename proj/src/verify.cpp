#include "spindimer/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "spindimer/csvio.hpp"
#include "spindimer/observables.hpp"
#include "spindimer/oracle.hpp"
#include "spindimer/trajectory.hpp"

namespace spindimer {

namespace {

constexpr double pi = 3.14159265358979323846;

IntegrationConfig oracle_config() {
    IntegrationConfig cfg;
    cfg.abs_tol = 1e-12;
    cfg.rel_tol = 1e-12;
    cfg.initial_step = 1e-4;
    return cfg;
}

CheckResult make_result(std::string name, double max_err, double tol) {
    CheckResult r;
    r.name = std::move(name);
    r.max_err = max_err;
    r.tol = tol;
    r.pass = max_err <= tol;
    return r;
}

// oracle propagator at the checkpoint times t_end*k/K, integrating each
// segment from the previous checkpoint
template <typename Mat, typename Ham>
std::vector<Mat> oracle_checkpoints(const Ham& h, double t_end, int k_count) {
    std::vector<Mat> out;
    Mat u = Mat::identity();
    double t_prev = 0.0;
    IntegrationConfig cfg = oracle_config();
    for (int k = 1; k <= k_count; ++k) {
        double t_k = t_end * k / k_count;
        Ham shifted = [&h, t_prev](double u_loc) { return h(t_prev + u_loc); };
        u = integrate_propagator(shifted, t_k - t_prev, cfg) * u;
        out.push_back(u);
        t_prev = t_k;
    }
    return out;
}

double scenario_rate(const SectorParams& p, Scenario s) {
    return (s == Scenario::S1 ? 2.0 : 1.0) * p.gamma_abs / p.hbar;
}

DimerCouplings static_test_couplings() {
    DimerCouplings c;
    c.gxx = 1.2;
    c.gyy = -0.3;
    c.gzz = 0.25;
    c.gxy = 0.4;
    c.gyx = -0.2;
    return c; // Gamma_minus = 0.9 + 0.6i, genuinely complex
}

double true_static_phi(const DimerCouplings& c) {
    // arg of -i Gamma_minus, the off-diagonal phase of the static block
    return std::arg(cplx(0.0, -1.0) * sector_gamma(c, -1));
}

std::vector<DimerCouplings> invariant_couplings() {
    DimerCouplings spz = special_couplings();
    spz.gzz = 0.3;
    DimerCouplings rz = real_sector_couplings();
    rz.gzz = 0.15;
    return {special_couplings(), spz, real_sector_couplings(), rz, static_test_couplings()};
}

std::vector<ScheduleSpec> all_schedule_specs() {
    std::vector<ScheduleSpec> specs;
    for (Scenario a : {Scenario::S1, Scenario::S2})
        for (Scenario b : {Scenario::S1, Scenario::S2}) {
            ScheduleSpec s;
            s.kind = ScheduleSpec::Kind::full;
            s.plus_scenario = a;
            s.minus_scenario = b;
            specs.push_back(s);
        }
    for (int sector : {+1, -1})
        for (Scenario a : {Scenario::S1, Scenario::S2}) {
            ScheduleSpec s;
            s.kind = ScheduleSpec::Kind::subspace;
            s.sector = sector;
            s.sub_scenario = a;
            specs.push_back(s);
        }
    return specs;
}

// time span covering tau_plus in [0, 8] for the couplings at hand
double invariant_t_max(const DimerCouplings& c) {
    return 4.0 * c.hbar / std::abs(sector_gamma(c, +1));
}

const char* const parity_definite_states[] = {"pp", "mm", "pm", "mp", "bell_phi_plus",
                                              "bell_psi_plus"};
const char* const all_states[] = {"pp", "mm", "pm", "mp", "bell_phi_plus",
                                  "bell_psi_plus", "sx_max"};

} // namespace

CheckResult check_sector_oracle(Scenario s, const VerifyOptions& opt) {
    std::mt19937 rng(opt.seed + (s == Scenario::S1 ? 11 : 22));
    std::uniform_real_distribution<double> gamma_draw(0.1, 5.0);
    std::uniform_real_distribution<double> phase_draw(-pi, pi);
    double max_err = 0.0;
    for (int d = 0; d < opt.draws; ++d) {
        SectorParams p;
        p.gamma_abs = gamma_draw(rng);
        p.gamma_phase = phase_draw(rng);
        SectorParams p_closed = p;
        p_closed.gamma_abs *= 1.0 + opt.mutation;
        double t_end = 10.0 / scenario_rate(p, s);
        cplx gam = std::polar(p.gamma_abs, p.gamma_phase);
        Ham2 h = [p, s, gam](double t) {
            CMat2 m;
            double om = scenario_omega(t, p, s);
            m(0, 0) = om;
            m(0, 1) = gam;
            m(1, 0) = std::conj(gam);
            m(1, 1) = -om;
            return m;
        };
        auto oracle = oracle_checkpoints<CMat2>(h, t_end, opt.checkpoints);
        for (int k = 1; k <= opt.checkpoints; ++k) {
            double t_k = t_end * k / opt.checkpoints;
            CMat2 closed = sector_matrix(scenario_propagator(t_k, p_closed, s),
                                         p.gamma_phase);
            max_err = std::max(max_err, max_abs_diff(closed, oracle[k - 1]));
        }
    }
    return make_result(s == Scenario::S1 ? "sector_oracle_S1" : "sector_oracle_S2",
                       max_err, 1e-6);
}

CheckResult check_full_oracle(const DimerCouplings& c, const ScheduleSpec& spec,
                              const VerifyOptions& opt) {
    FieldSchedule sched = make_schedule(c, spec);
    DimerCouplings c_closed = c;
    c_closed.gxx *= 1.0 + opt.mutation;
    c_closed.gyy *= 1.0 + opt.mutation;
    c_closed.gxy *= 1.0 + opt.mutation;
    c_closed.gyx *= 1.0 + opt.mutation;
    double gamma_ref = spec.kind == ScheduleSpec::Kind::full
                           ? std::abs(sector_gamma(c, +1))
                           : std::abs(sector_gamma(c, spec.sector));
    double t_end = 10.0 * c.hbar / (2.0 * gamma_ref); // gamma_pm t = 2|Gamma_pm|t/hbar in [0,10]
    CMat4 coupling_part = build_hamiltonian(c, 0.0, 0.0);
    CMat4 z1 = pauli(Axis::z, 1), z2 = pauli(Axis::z, 2);
    Ham4 h = [&](double t) {
        return coupling_part + cplx(c.hbar * sched.omega1(t)) * z1 +
               cplx(c.hbar * sched.omega2(t)) * z2;
    };
    auto oracle = oracle_checkpoints<CMat4>(h, t_end, opt.checkpoints);
    double max_err = 0.0;
    for (int k = 1; k <= opt.checkpoints; ++k) {
        double t_k = t_end * k / opt.checkpoints;
        Propagator4 closed = schedule_propagator(c_closed, spec, t_k);
        max_err = std::max(max_err, max_abs_diff(closed.matrix, oracle[k - 1]));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "_gzz%.2f", c.gzz);
    return make_result("full_oracle_" + schedule_label(spec) + buf, max_err, 1e-6);
}

CheckResult check_static_block(const VerifyOptions& opt) {
    DimerCouplings c = static_test_couplings();
    cplx gm = sector_gamma(c, -1) * (1.0 + opt.mutation);
    std::vector<TimeFunc> omegas = {
        [](double t) { return 0.7 + 0.3 * std::sin(1.3 * t); },
        [](double t) { return 1.1 * std::exp(-0.4 * t); },
        [](double t) { return 0.4 + 0.25 * t; },
    };
    double t_end = 4.0;
    double max_err = 0.0;
    for (const TimeFunc& w : omegas) {
        Ham4 h = [&](double t) { return build_hamiltonian(c, w(t), w(t)); };
        auto oracle = oracle_checkpoints<CMat4>(h, t_end, opt.checkpoints);
        for (int k = 1; k <= opt.checkpoints; ++k) {
            double t_k = t_end * k / opt.checkpoints;
            CMat2 closed = static_sector_propagator(t_k, gm, c.gzz, c.hbar);
            const CMat4& u = oracle[k - 1];
            double err = std::max({std::abs(u(1, 1) - closed(0, 0)),
                                   std::abs(u(1, 2) - closed(0, 1)),
                                   std::abs(u(2, 1) - closed(1, 0)),
                                   std::abs(u(2, 2) - closed(1, 1))});
            max_err = std::max(max_err, err);
        }
    }
    return make_result("static_block", max_err, 1e-6);
}

CheckResult check_assembly_brute_force(const VerifyOptions& opt) {
    std::mt19937 rng(opt.seed + 77);
    std::uniform_real_distribution<double> gdraw(-2.0, 2.0);
    std::uniform_real_distribution<double> zdraw(-1.0, 1.0);
    std::uniform_real_distribution<double> adraw(0.0, 0.5 * pi);
    std::uniform_real_distribution<double> phdraw(-pi, pi);
    std::uniform_real_distribution<double> tdraw(0.0, 3.0);
    CMat4 u_sym = symmetry_u();
    double max_err = 0.0;
    for (int d = 0; d < 100; ++d) {
        DimerCouplings c;
        do {
            c.gxx = gdraw(rng);
            c.gyy = gdraw(rng);
            c.gxy = gdraw(rng);
            c.gyx = gdraw(rng);
        } while (std::abs(sector_gamma(c, +1)) < 1e-3 ||
                 std::abs(sector_gamma(c, -1)) < 1e-3);
        c.gzz = zdraw(rng);
        double t = tdraw(rng);
        auto draw_prop = [&](void) {
            Propagator2 p;
            double mix = adraw(rng);
            p.a_abs = std::cos(mix);
            p.b_abs = std::sin(mix);
            p.phi_a = phdraw(rng);
            p.phi_b = phdraw(rng);
            p.t = t;
            return p;
        };
        Propagator2 pp = draw_prop(), pm = draw_prop();
        CMat4 assembled = assemble_propagator(pp, pm, c, t).matrix;
        CMat2 bp = std::polar(1.0, -c.gzz * t / c.hbar) *
                   sector_matrix(pp, std::arg(sector_gamma(c, +1)));
        CMat2 bm = std::polar(1.0, +c.gzz * t / c.hbar) *
                   sector_matrix(pm, std::arg(sector_gamma(c, -1)));
        CMat4 blocks; // in the conjugated frame: + block on {0,2}, - on {1,3}
        blocks(0, 0) = bp(0, 0);
        blocks(0, 2) = bp(0, 1);
        blocks(2, 0) = bp(1, 0);
        blocks(2, 2) = bp(1, 1);
        blocks(1, 1) = bm(0, 0);
        blocks(1, 3) = bm(0, 1);
        blocks(3, 1) = bm(1, 0);
        blocks(3, 3) = bm(1, 1);
        CMat4 brute = u_sym * blocks * u_sym;
        max_err = std::max(max_err, max_abs_diff(assembled, brute));
    }
    return make_result("assembly_brute_force", max_err, 1e-13);
}

CheckResult check_parity_conservation(const VerifyOptions&) {
    CMat4 zz = pauli(Axis::z, 1) * pauli(Axis::z, 2);
    double max_err = 0.0;
    for (const DimerCouplings& c : invariant_couplings())
        for (const ScheduleSpec& spec : all_schedule_specs()) {
            TimeGrid grid{invariant_t_max(c), 41};
            for (const char* name : all_states) {
                StateVec4 s0 = named_state(name);
                double p0 = expectation(s0, zz);
                auto states = propagate_grid_serial(c, spec, s0, grid);
                for (const StateVec4& s : states)
                    max_err = std::max(max_err, std::abs(expectation(s, zz) - p0));
            }
        }
    return make_result("parity_conservation", max_err, 1e-10);
}

CheckResult check_unitarity(const VerifyOptions&) {
    double max_err = 0.0;
    CMat4 eye = CMat4::identity();
    for (const DimerCouplings& c : invariant_couplings())
        for (const ScheduleSpec& spec : all_schedule_specs()) {
            TimeGrid grid{invariant_t_max(c), 41};
            for (int k = 0; k < grid.samples; ++k) {
                CMat4 u = schedule_propagator(c, spec, grid.at(k)).matrix;
                max_err = std::max(max_err, max_abs_diff(adjoint(u) * u, eye));
            }
        }
    return make_result("propagator_unitarity", max_err, 1e-10);
}

CheckResult check_block_zero_pattern(const VerifyOptions&) {
    static const int off_pattern[8][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 3},
                                          {2, 0}, {2, 3}, {3, 1}, {3, 2}};
    double max_err = 0.0;
    for (const DimerCouplings& c : invariant_couplings())
        for (const ScheduleSpec& spec : all_schedule_specs()) {
            TimeGrid grid{invariant_t_max(c), 41};
            for (int k = 0; k < grid.samples; ++k) {
                CMat4 u = schedule_propagator(c, spec, grid.at(k)).matrix;
                for (auto& rc : off_pattern)
                    max_err = std::max(max_err, std::abs(u(rc[0], rc[1])));
            }
        }
    return make_result("block_zero_pattern", max_err, 0.0); // exact zeros required
}

CheckResult check_covariance_identity(const VerifyOptions&) {
    double max_err = 0.0;
    for (const DimerCouplings& c : invariant_couplings())
        for (const ScheduleSpec& spec : all_schedule_specs()) {
            TimeGrid grid{invariant_t_max(c), 41};
            for (const char* name : parity_definite_states) {
                auto states = propagate_grid_serial(c, spec, named_state(name), grid);
                for (const StateVec4& s : states) {
                    auto [cx, cy] = amplitude_covariances(s);
                    max_err = std::max(max_err,
                                       std::abs(concurrence(s) - std::hypot(cx, cy)));
                }
            }
        }
    return make_result("covariance_identity", max_err, 1e-10);
}

CheckResult check_asymptotics() {
    SectorParams p; // |Gamma| = 1, hbar = 1
    double a_s1 = scenario_propagator(10.0, p, Scenario::S1).a_abs; // gamma t = 20
    double a_s2 = scenario_propagator(20.0, p, Scenario::S2).a_abs;
    DimerCouplings c = real_sector_couplings();
    ScheduleSpec spec = parse_schedule_spec("sub:+:S2");
    StateVec4 s0 = named_state("pp");
    double t = 20.0 * c.hbar / std::abs(sector_gamma(c, +1)); // tau'_+ = 20
    double surv = survival_probability(evolve(s0, schedule_propagator(c, spec, t)), s0);
    double max_err = std::max({std::abs(a_s1 - 1.0 / std::sqrt(2.0)), a_s2, surv});
    return make_result("scenario_asymptotics", max_err, 1e-6);
}

CheckResult check_bell_generation() {
    DimerCouplings c = real_sector_couplings();
    double gp = std::abs(sector_gamma(c, +1)), gm = std::abs(sector_gamma(c, -1));
    StateVec4 from_pp = evolve(named_state("pp"),
                               schedule_propagator(c, parse_schedule_spec("sub:+:S1"),
                                                   10.0 * c.hbar / gp)); // tau_+ = 20
    StateVec4 from_pm = evolve(named_state("pm"),
                               schedule_propagator(c, parse_schedule_spec("sub:-:S1"),
                                                   10.0 * c.hbar / gm)); // tau_- = 20
    double err_phi = 1.0 - bell_fidelity(from_pp, Bell::phi_plus);
    double err_psi = 1.0 - bell_fidelity(from_pm, Bell::psi_plus);
    return make_result("bell_generation", std::max(err_phi, err_psi), 1e-6);
}

CheckResult check_concurrence_forms() {
    DimerCouplings c = real_sector_couplings();
    c.gzz = 0.3; // concurrence is insensitive to the sector phases
    SectorParams p_plus = sector_params(c, +1);
    double max_err = 0.0;
    for (Scenario s : {Scenario::S1, Scenario::S2}) {
        ScheduleSpec spec = parse_schedule_spec(s == Scenario::S1 ? "sub:+:S1" : "sub:+:S2");
        double rate = scenario_rate(p_plus, s);
        TimeGrid grid{10.0 / rate, 101};
        auto from_pp = propagate_grid_serial(c, spec, named_state("pp"), grid);
        auto from_bell = propagate_grid_serial(c, spec, named_state("bell_phi_plus"), grid);
        for (int k = 0; k < grid.samples; ++k) {
            double t = grid.at(k);
            max_err = std::max(
                max_err, std::abs(concurrence(from_pp[k]) -
                                  analytic_concurrence(t, ConcSource::from_pp, s, p_plus)));
            max_err = std::max(
                max_err,
                std::abs(concurrence(from_bell[k]) -
                         analytic_concurrence(t, ConcSource::from_bell, s, p_plus)));
        }
    }
    return make_result("concurrence_closed_forms", max_err, 1e-9);
}

CheckResult check_entanglement_instants() {
    DimerCouplings c = real_sector_couplings();
    SectorParams p_plus = sector_params(c, +1);
    ScheduleSpec spec = parse_schedule_spec("sub:+:S2");
    StateVec4 bell = named_state("bell_phi_plus");
    double max_err = 0.0;
    for (int n = 0; n <= 10; ++n) {
        EntanglementInstant e = entanglement_instants(n);
        double t = e.tau * p_plus.hbar / p_plus.gamma_abs; // tau'_+ = tau_n
        StateVec4 s = evolve(bell, schedule_propagator(c, spec, t));
        max_err = std::max(max_err, std::abs(concurrence(s) - 1.0));
        max_err = std::max(
            max_err,
            std::abs(analytic_concurrence(t, ConcSource::from_bell, Scenario::S2, p_plus) -
                     1.0));
    }
    return make_result("entanglement_instants", max_err, 1e-9);
}

CheckResult check_observable_forms() {
    double max_err = 0.0;
    { // <Sz> in the plus block, both scenarios, both branches
        DimerCouplings c = real_sector_couplings();
        SectorParams p = sector_params(c, +1);
        for (Scenario s : {Scenario::S1, Scenario::S2}) {
            ScheduleSpec spec =
                parse_schedule_spec(s == Scenario::S1 ? "sub:+:S1" : "sub:+:S2");
            TimeGrid grid{10.0 / scenario_rate(p, s), 101};
            auto alpha = propagate_grid_serial(c, spec, named_state("pp"), grid);
            auto beta = propagate_grid_serial(c, spec, named_state("mm"), grid);
            for (int k = 0; k < grid.samples; ++k) {
                double t = grid.at(k);
                max_err = std::max(
                    max_err, std::abs(expect_sz(alpha[k]) -
                                      analytic_sz_parity_plus(t, s, Branch::alpha, p)));
                max_err = std::max(
                    max_err, std::abs(expect_sz(beta[k]) -
                                      analytic_sz_parity_plus(t, s, Branch::beta, p)));
            }
        }
    }
    { // <S^2> in the minus block, both scenarios, both branches
        DimerCouplings c = real_sector_couplings();
        SectorParams p = sector_params(c, -1);
        for (Scenario s : {Scenario::S1, Scenario::S2}) {
            ScheduleSpec spec =
                parse_schedule_spec(s == Scenario::S1 ? "sub:-:S1" : "sub:-:S2");
            DriveKind k_form = s == Scenario::S1 ? DriveKind::s1 : DriveKind::s2;
            TimeGrid grid{10.0 / scenario_rate(p, s), 101};
            auto alpha = propagate_grid_serial(c, spec, named_state("pm"), grid);
            auto beta = propagate_grid_serial(c, spec, named_state("mp"), grid);
            for (int k = 0; k < grid.samples; ++k) {
                double t = grid.at(k);
                max_err = std::max(
                    max_err,
                    std::abs(expect_s2(alpha[k]) -
                             analytic_s2_parity_minus(t, k_form, Branch::alpha, p)));
                max_err = std::max(
                    max_err,
                    std::abs(expect_s2(beta[k]) -
                             analytic_s2_parity_minus(t, k_form, Branch::beta, p)));
            }
        }
    }
    { // static <S^2>: equal frequencies, complex Gamma_minus, gzz != 0
        DimerCouplings c = static_test_couplings();
        SectorParams p = sector_params(c, -1);
        double phi = true_static_phi(c);
        ScheduleSpec spec = parse_schedule_spec("static:S1");
        TimeGrid grid{3.0 * c.hbar / p.gamma_abs, 101};
        auto alpha = propagate_grid_serial(c, spec, named_state("pm"), grid);
        auto beta = propagate_grid_serial(c, spec, named_state("mp"), grid);
        for (int k = 0; k < grid.samples; ++k) {
            double t = grid.at(k);
            max_err = std::max(
                max_err,
                std::abs(expect_s2(alpha[k]) - analytic_s2_parity_minus(
                                                   t, DriveKind::static_case,
                                                   Branch::alpha, p, phi)));
            max_err = std::max(
                max_err,
                std::abs(expect_s2(beta[k]) - analytic_s2_parity_minus(
                                                  t, DriveKind::static_case,
                                                  Branch::beta, p, phi)));
        }
    }
    return make_result("observable_closed_forms", max_err, 1e-9);
}

CheckResult check_sx_asymptote() {
    DimerCouplings c = real_sector_couplings();
    double gp = std::abs(sector_gamma(c, +1));
    ScheduleSpec spec; // full, S1 + S1
    StateVec4 s0 = named_state("sx_max");
    double max_err = 0.0;
    for (int k = 0; k <= 50; ++k) {
        double tau = 15.0 + 25.0 * k / 50.0;
        double t = tau * c.hbar / (2.0 * gp);
        StateVec4 s = evolve(s0, schedule_propagator(c, spec, t));
        max_err = std::max(max_err,
                           std::abs(expect_sx(s) - analytic_sx_asymptotic(t, c)));
    }
    return make_result("sx_asymptote", max_err, 0.02);
}

CheckResult check_figure_determinism() {
    double err = 0.0;
    for (int n = 1; n <= 13; ++n) {
        FigureData a = figure_data(n);
        FigureData b = figure_data(n);
        if (csv_table(a.columns, a.rows) != csv_table(b.columns, b.rows)) err = 1.0;
    }
    FigureData f1 = figure_data(1);
    if (format_g17(f1.rows[0][1]) != format_g17(2.0)) err = 1.0;
    FigureData f9 = figure_data(9);
    if (f9.rows[111][0] != 1.0) err = 1.0; // 9 * 111/999 is exactly 1
    if (format_g17(f9.rows[111][1]) != format_g17(std::tanh(1.0))) err = 1.0;
    return make_result("figure_determinism", err, 0.5);
}

std::vector<CheckResult> verify_suite(bool full, const VerifyOptions& opt) {
    VerifyOptions o = opt;
    if (!full) o.draws = std::min(o.draws, 3);
    std::vector<CheckResult> out;
    out.push_back(check_sector_oracle(Scenario::S1, o));
    out.push_back(check_sector_oracle(Scenario::S2, o));
    DimerCouplings plain = special_couplings();
    DimerCouplings with_gzz = special_couplings();
    with_gzz.gzz = 0.3;
    auto fulls = all_schedule_specs(); // first four are the fully driven pairs
    if (full) {
        for (const DimerCouplings& c : {plain, with_gzz})
            for (int i = 0; i < 4; ++i) out.push_back(check_full_oracle(c, fulls[i], o));
    } else {
        out.push_back(check_full_oracle(with_gzz, fulls[0], o)); // S1,S1
        out.push_back(check_full_oracle(with_gzz, fulls[2], o)); // S2,S1
    }
    out.push_back(check_static_block(o));
    out.push_back(check_assembly_brute_force(o));
    out.push_back(check_parity_conservation(o));
    out.push_back(check_unitarity(o));
    out.push_back(check_block_zero_pattern(o));
    out.push_back(check_covariance_identity(o));
    out.push_back(check_asymptotics());
    out.push_back(check_bell_generation());
    out.push_back(check_concurrence_forms());
    out.push_back(check_entanglement_instants());
    out.push_back(check_observable_forms());
    out.push_back(check_sx_asymptote());
    out.push_back(check_figure_determinism());
    return out;
}

} // namespace spindimer
