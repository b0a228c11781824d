#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spindimer/csvio.hpp"
#include "spindimer/errors.hpp"
#include "spindimer/observables.hpp"
#include "spindimer/trajectory.hpp"
#include "spindimer/verify.hpp"

// Exit codes: 0 success, 1 verification failure (or unexpected numerical
// error), 2 config error, 3 infeasible schedule.

namespace {

using namespace spindimer;

struct RunConfig {
    double gxx = 1.0, gyy = 1.0, gzz = 0.0, gxy = 0.5, gyx = 0.5, hbar = 1.0;
    std::string schedule = "S1,S1";
    std::string state = "pp";
    std::vector<double> amplitudes; // 8 reals: re,im per basis slot
    double t_max = 10.0;            // in units of hbar/|Gamma_plus|
    int samples = 1000;
    std::string out = "-";
    bool si = false; // t column in seconds, plus B_iz(t) columns in tesla
    double g1zz = 2.0, g2zz = 2.0;
};

void add_run_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--gxx", cfg.gxx, "sigma1x sigma2x coupling");
    cmd->add_option("--gyy", cfg.gyy, "sigma1y sigma2y coupling");
    cmd->add_option("--gzz", cfg.gzz, "sigma1z sigma2z coupling");
    cmd->add_option("--gxy", cfg.gxy, "sigma1x sigma2y coupling");
    cmd->add_option("--gyx", cfg.gyx, "sigma1y sigma2x coupling");
    cmd->add_option("--hbar", cfg.hbar, "reduced Planck constant in working units");
    cmd->add_option("--schedule", cfg.schedule,
                    "drive schedule: \"S1,S2\" | \"sub:+:S1\" | \"sub:-:S2\" | \"static:S1\"");
    auto* st = cmd->add_option("--state", cfg.state,
                               "initial state: pp, mm, pm, mp, bell_phi_plus, "
                               "bell_psi_plus, sx_max");
    cmd->add_option("--amplitudes", cfg.amplitudes,
                    "initial amplitudes as 8 reals re,im per slot (++, +-, -+, --)")
        ->expected(8)
        ->excludes(st);
    cmd->add_option("--tmax", cfg.t_max, "grid end in units of hbar/|Gamma_plus|")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--samples", cfg.samples, "number of grid samples")
        ->check(CLI::Range(1, 10000000));
    cmd->add_option("--out", cfg.out, "output CSV path, '-' for stdout");
    cmd->add_flag("--si", cfg.si, "emit t in seconds and B_iz(t) in tesla "
                                 "(couplings in J, hbar in J s)");
    cmd->add_option("--g1zz", cfg.g1zz, "g-factor of spin 1 (SI field conversion)");
    cmd->add_option("--g2zz", cfg.g2zz, "g-factor of spin 2 (SI field conversion)");
}

DimerCouplings couplings_of(const RunConfig& cfg) {
    DimerCouplings c;
    c.gxx = cfg.gxx;
    c.gyy = cfg.gyy;
    c.gzz = cfg.gzz;
    c.gxy = cfg.gxy;
    c.gyx = cfg.gyx;
    c.hbar = cfg.hbar;
    return c;
}

double time_unit(const DimerCouplings& c) {
    double gp = std::abs(sector_gamma(c, +1));
    if (gp <= 0.0)
        throw DegenerateCoupling("the time unit hbar/|Gamma_plus| is undefined: "
                                 "|Gamma_plus| = 0 for these couplings");
    return c.hbar / gp;
}

StateVec4 initial_state(const RunConfig& cfg) {
    if (cfg.amplitudes.empty()) return named_state(cfg.state);
    StateVec4 s;
    for (int k = 0; k < 4; ++k)
        s.a[k] = cplx(cfg.amplitudes[2 * k], cfg.amplitudes[2 * k + 1]);
    double n = norm(s);
    if (std::abs(n - 1.0) > 1e-9)
        throw std::invalid_argument("initial amplitudes have norm " +
                                    std::to_string(n) + ", expected 1 within 1e-9");
    for (auto& a : s.a) a /= n;
    return s;
}

struct SiContext {
    double t_scale = 1.0; // seconds per t-column unit
    TimeFunc b1, b2;      // tesla as a function of physical time
};

SiContext si_context(const RunConfig& cfg, const DimerCouplings& c,
                     const ScheduleSpec& spec, double t_unit) {
    SiContext ctx;
    if (!cfg.si) return ctx;
    ctx.t_scale = t_unit;
    LabField f = omega_to_field(make_schedule(c, spec), cfg.g1zz, cfg.g2zz);
    ctx.b1 = f.b1z;
    ctx.b2 = f.b2z;
    return ctx;
}

std::ostream& open_out(const RunConfig& cfg, std::ofstream& file) {
    if (cfg.out == "-") return std::cout;
    file.open(cfg.out, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file " + cfg.out);
    return file;
}

int cmd_propagate(const RunConfig& cfg) {
    DimerCouplings c = couplings_of(cfg);
    ScheduleSpec spec = parse_schedule_spec(cfg.schedule);
    StateVec4 s0 = initial_state(cfg);
    double t_unit = time_unit(c);
    TimeGrid grid{cfg.t_max * t_unit, cfg.samples};
    std::vector<StateVec4> states = propagate_grid(c, spec, s0, grid);
    SiContext si = si_context(cfg, c, spec, t_unit);
    std::vector<std::string> columns = {"t",      "re_cpp", "im_cpp", "re_cpm",
                                        "im_cpm", "re_cmp", "im_cmp", "re_cmm",
                                        "im_cmm", "norm"};
    if (cfg.si) {
        columns.push_back("b1_tesla");
        columns.push_back("b2_tesla");
    }
    std::vector<std::vector<double>> rows(states.size());
    for (int k = 0; k < grid.samples; ++k) {
        double t_col = cfg.si ? grid.at(k) : (t_unit > 0 ? grid.at(k) / t_unit : 0.0);
        const StateVec4& s = states[k];
        std::vector<double>& r = rows[k];
        r.push_back(t_col);
        for (int j = 0; j < 4; ++j) {
            r.push_back(s.a[j].real());
            r.push_back(s.a[j].imag());
        }
        r.push_back(norm(s));
        if (cfg.si) {
            r.push_back(si.b1(grid.at(k)));
            r.push_back(si.b2(grid.at(k)));
        }
    }
    std::ofstream file;
    write_csv(open_out(cfg, file), columns, rows);
    return 0;
}

int cmd_observables(const RunConfig& cfg, const std::vector<std::string>& requested) {
    static const std::vector<std::string> known = {"sz",  "s2",  "sx",       "concurrence",
                                                   "cxx", "cyy", "fidelities"};
    std::vector<std::string> sel = requested.empty()
                                       ? std::vector<std::string>{"sz", "s2", "sx",
                                                                  "concurrence", "cxx", "cyy"}
                                       : requested;
    for (const std::string& s : sel)
        if (std::find(known.begin(), known.end(), s) == known.end())
            throw std::invalid_argument("unknown observable column: " + s);
    DimerCouplings c = couplings_of(cfg);
    ScheduleSpec spec = parse_schedule_spec(cfg.schedule);
    StateVec4 s0 = initial_state(cfg);
    double t_unit = time_unit(c);
    TimeGrid grid{cfg.t_max * t_unit, cfg.samples};
    std::vector<StateVec4> states = propagate_grid(c, spec, s0, grid);
    SiContext si = si_context(cfg, c, spec, t_unit);
    std::vector<std::string> columns = {"t"};
    for (const std::string& s : sel) {
        if (s == "fidelities")
            for (const char* f : {"f_phi_plus", "f_phi_minus", "f_psi_plus", "f_psi_minus"})
                columns.push_back(f);
        else
            columns.push_back(s);
    }
    if (cfg.si) {
        columns.push_back("b1_tesla");
        columns.push_back("b2_tesla");
    }
    std::vector<std::vector<double>> rows(states.size());
    for (int k = 0; k < grid.samples; ++k) {
        double t = grid.at(k);
        ObservableSample ob = sample_observables(t, states[k], c.hbar);
        std::vector<double>& r = rows[k];
        r.push_back(cfg.si ? t : (t_unit > 0 ? t / t_unit : 0.0));
        for (const std::string& s : sel) {
            if (s == "sz") r.push_back(ob.sz);
            else if (s == "s2") r.push_back(ob.s2);
            else if (s == "sx") r.push_back(ob.sx);
            else if (s == "concurrence") r.push_back(ob.concurrence);
            else if (s == "cxx") r.push_back(ob.cxx);
            else if (s == "cyy") r.push_back(ob.cyy);
            else
                for (Bell b : {Bell::phi_plus, Bell::phi_minus, Bell::psi_plus,
                               Bell::psi_minus})
                    r.push_back(bell_fidelity(states[k], b));
        }
        if (cfg.si) {
            r.push_back(si.b1(t));
            r.push_back(si.b2(t));
        }
    }
    std::ofstream file;
    write_csv(open_out(cfg, file), columns, rows);
    return 0;
}

int cmd_figure(int n, const std::string& out_dir) {
    FigureData f = figure_data(n);
    std::string path = out_dir + "/figure_" + std::to_string(n) + ".csv";
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file " + path);
    write_csv(file, f.columns, f.rows);
    return 0;
}

int cmd_verify(const std::string& level, double mutate) {
    VerifyOptions opt;
    opt.mutation = mutate;
    if (const char* env = std::getenv("SPIN_DIMER_SEED"))
        opt.seed = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    std::vector<CheckResult> results = verify_suite(level == "full", opt);
    bool all_pass = true;
    for (const CheckResult& r : results) {
        std::printf("%-32s max_err=%-12.3e tol=%-9.0e %s\n", r.name.c_str(), r.max_err,
                    r.tol, r.pass ? "PASS" : "FAIL");
        all_pass = all_pass && r.pass;
    }
    std::printf("verify %s: %s\n", level.c_str(), all_pass ? "all checks passed"
                                                           : "FAILED");
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spindimer: exact propagation of two coupled driven spins"};
    app.require_subcommand(1);
    app.set_config("--config", "", "INI config file (sections per subcommand)");

    RunConfig prop_cfg, obs_cfg;
    std::vector<std::string> obs_columns;
    int fig_n = 1;
    std::string fig_dir = ".";
    std::string verify_level = "fast";
    double verify_mutate = 0.0;

    CLI::App* prop = app.add_subcommand("propagate", "emit state amplitudes over a time grid");
    add_run_options(prop, prop_cfg);

    CLI::App* obs = app.add_subcommand("observables", "emit observables over a time grid");
    add_run_options(obs, obs_cfg);
    obs->add_option("--columns", obs_columns,
                    "subset of sz,s2,sx,concurrence,cxx,cyy,fidelities")
        ->delimiter(',');

    CLI::App* fig = app.add_subcommand("figure", "write figure_<n>.csv from closed forms");
    fig->add_option("--n", fig_n, "figure number")->required()->check(CLI::Range(1, 13));
    fig->add_option("--out-dir", fig_dir, "output directory");

    CLI::App* ver = app.add_subcommand("verify", "run the verification suite");
    ver->add_option("--level", verify_level, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}));
    ver->add_option("--mutate", verify_mutate,
                    "fractional closed-form perturbation (sensitivity test)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (prop->parsed()) return cmd_propagate(prop_cfg);
        if (obs->parsed()) return cmd_observables(obs_cfg, obs_columns);
        if (fig->parsed()) return cmd_figure(fig_n, fig_dir);
        return cmd_verify(verify_level, verify_mutate);
    } catch (const InvalidEqualOmega& e) {
        std::cerr << "infeasible schedule: " << e.what() << "\n";
        return 3;
    } catch (const DegenerateCoupling& e) {
        std::cerr << "infeasible schedule: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
