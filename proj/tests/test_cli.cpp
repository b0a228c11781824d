#include <sys/wait.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

// Subprocess tests for the installed CLI. SPINDIMER_CLI_PATH is provided by
// the build as the path to the spindimer binary.

namespace {

constexpr double pi = 3.14159265358979323846;

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_shell(const std::string& command) {
    CliResult r;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
    return r;
}

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = std::string(SPINDIMER_CLI_PATH) + " " + args;
    if (!env_prefix.empty()) cmd = env_prefix + " " + cmd;
    return run_shell(cmd);
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

std::vector<double> parse_row(const std::string& line) {
    std::vector<double> vals;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) vals.push_back(std::strtod(field.c_str(), nullptr));
    return vals;
}

std::string g17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::filesystem::path test_dir() {
    auto dir = std::filesystem::temp_directory_path() / "spindimer_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("propagate header and initial row") {
    CliResult r = run_cli("propagate --samples 5 --tmax 2");
    CHECK(r.code == 0);
    auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "t,re_cpp,im_cpp,re_cpm,im_cpm,re_cmp,im_cmp,re_cmm,im_cmm,norm");
    auto row0 = parse_row(lines[1]);
    REQUIRE(row0.size() == 10);
    const double expect0[10] = {0, 1, 0, 0, 0, 0, 0, 0, 0, 1};
    for (int i = 0; i < 10; ++i) CHECK(row0[i] == expect0[i]);
    for (size_t k = 1; k < lines.size(); ++k) {
        auto row = parse_row(lines[k]);
        REQUIRE(row.size() == 10);
        CHECK(std::abs(row[9] - 1.0) < 1e-12); // unit norm on every sample
    }
    // the t column is in units of hbar/|Gamma_plus|, ending at --tmax
    auto last = parse_row(lines[5]);
    CHECK(last[0] == 2.0);
}

TEST_CASE("propagate output is byte deterministic") {
    std::string args =
        "propagate --gzz 0.3 --schedule S1,S2 --state bell_phi_plus --samples 64 --tmax 3";
    CliResult a = run_cli(args);
    CliResult b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("propagate matches independently coded amplitude formulas") {
    // real sector couplings: Gamma_plus = 1 so the t column is physical time
    CliResult r = run_cli(
        "propagate --gxx 1.5 --gyy 0.5 --gxy 0 --gyx 0 --gzz 0.4 "
        "--schedule sub:+:S1 --state pp --samples 11 --tmax 2");
    CHECK(r.code == 0);
    auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 12);
    for (size_t k = 1; k < lines.size(); ++k) {
        auto row = parse_row(lines[k]);
        REQUIRE(row.size() == 10);
        double t = row[0];
        double tau = 2.0 * t; // gamma = 2|Gamma_plus|/hbar
        double a_abs = std::sqrt(0.5 * (1.0 + 1.0 / std::cosh(tau)));
        double b_abs = std::sqrt(0.5 * (1.0 - 1.0 / std::cosh(tau)));
        double bend = std::atan(std::tanh(0.5 * tau));
        double phi_a = -bend - 0.5 * tau;
        double phi_b = -bend + 0.5 * tau - 0.5 * pi;
        std::complex<double> zz_phase = std::polar(1.0, -0.4 * t);
        std::complex<double> cpp = zz_phase * std::polar(a_abs, phi_a);
        std::complex<double> cmm = zz_phase * (-std::polar(b_abs, -phi_b));
        CHECK(std::abs(row[1] - cpp.real()) < 1e-12);
        CHECK(std::abs(row[2] - cpp.imag()) < 1e-12);
        CHECK(std::abs(row[7] - cmm.real()) < 1e-12);
        CHECK(std::abs(row[8] - cmm.imag()) < 1e-12);
        CHECK(row[3] == 0.0); // opposite-parity slots stay exactly empty
        CHECK(row[4] == 0.0);
        CHECK(row[5] == 0.0);
        CHECK(row[6] == 0.0);
        CHECK(std::abs(row[9] - 1.0) < 1e-12);
    }
}

TEST_CASE("observables concurrence column and fidelity expansion") {
    CliResult r = run_cli(
        "observables --gxx 1.5 --gyy 0.5 --gxy 0 --gyx 0 "
        "--schedule sub:+:S1 --state pp --samples 9 --tmax 1.5 --columns concurrence");
    CHECK(r.code == 0);
    auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 10);
    CHECK(lines[0] == "t,concurrence");
    for (size_t k = 1; k < lines.size(); ++k) {
        auto row = parse_row(lines[k]);
        REQUIRE(row.size() == 2);
        CHECK(std::abs(row[1] - std::tanh(2.0 * row[0])) < 1e-9);
    }

    CliResult f = run_cli("observables --columns fidelities --samples 3 --tmax 1");
    CHECK(f.code == 0);
    auto flines = split_lines(f.out);
    REQUIRE(flines.size() == 4);
    CHECK(flines[0] == "t,f_phi_plus,f_phi_minus,f_psi_plus,f_psi_minus");
    auto row0 = parse_row(flines[1]);
    REQUIRE(row0.size() == 5);
    CHECK(row0[0] == 0.0);
    CHECK(std::abs(row0[1] - 0.5) < 1e-15); // |<phi+|++>|^2
    CHECK(std::abs(row0[2] - 0.5) < 1e-15);
    CHECK(row0[3] == 0.0); // opposite parity: exactly zero overlap
    CHECK(row0[4] == 0.0);

    CliResult d = run_cli("observables --samples 3 --tmax 1");
    CHECK(d.code == 0);
    CHECK(split_lines(d.out)[0] == "t,sz,s2,sx,concurrence,cxx,cyy");
}

TEST_CASE("exit codes for config errors") {
    CHECK(run_cli("propagate --definitely-not-a-flag 3").code == 2);
    CHECK(run_cli("propagate --state nope --samples 3 --tmax 1").code == 2);
    CHECK(run_cli("propagate --schedule garbage --samples 3 --tmax 1").code == 2);
    // 8 amplitudes with norm sqrt(2): rejected before any propagation
    CHECK(run_cli("propagate --amplitudes 1 0 1 0 0 0 0 0 --samples 3 --tmax 1").code == 2);
    CHECK(run_cli("figure --n 14 --out-dir .").code == 2);
    CHECK(run_cli("nonsense").code == 2);
}

TEST_CASE("exit code for infeasible couplings") {
    CliResult r = run_cli("propagate --gxx 0 --gyy 0 --gxy 0 --gyx 0 --samples 3 --tmax 1");
    CHECK(r.code == 3);
    CHECK(r.out.find("infeasible") != std::string::npos);
}

TEST_CASE("explicit amplitudes accepted and match the named state") {
    std::string r17 = g17(1.0 / std::sqrt(2.0));
    CliResult raw = run_cli("propagate --amplitudes " + r17 + " 0 0 0 0 0 " + r17 +
                            " 0 --samples 4 --tmax 1.25");
    CliResult named = run_cli("propagate --state bell_phi_plus --samples 4 --tmax 1.25");
    CHECK(raw.code == 0);
    CHECK(named.code == 0);
    auto rl = split_lines(raw.out);
    auto nl = split_lines(named.out);
    REQUIRE(rl.size() == nl.size());
    for (size_t k = 1; k < rl.size(); ++k) {
        auto a = parse_row(rl[k]);
        auto b = parse_row(nl[k]);
        REQUIRE(a.size() == b.size());
        for (size_t j = 0; j < a.size(); ++j) CHECK(std::abs(a[j] - b[j]) < 1e-12);
    }
}

TEST_CASE("verify exit code flips under mutation") {
    CliResult bad = run_cli("verify --level fast --mutate 1e-3");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CliResult seeded = run_cli("verify --level fast --mutate 1e-3", "SPIN_DIMER_SEED=7");
    CHECK(seeded.code == 1);
}

TEST_CASE("config file with subcommand section and CLI precedence") {
    auto dir = test_dir();
    auto ini = dir / "run.ini";
    {
        std::ofstream f(ini);
        REQUIRE(f.good());
        f << "[propagate]\n"
          << "schedule=\"sub:+:S1\"\n"
          << "state=\"mm\"\n"
          << "samples=4\n"
          << "tmax=1\n";
    }
    CliResult r = run_cli("--config " + ini.string() + " propagate");
    CHECK(r.code == 0);
    auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 5);
    auto row0 = parse_row(lines[1]);
    CHECK(row0[7] == 1.0); // re_cmm: the configured state
    CHECK(row0[1] == 0.0);

    CliResult over = run_cli("--config " + ini.string() + " propagate --state pp");
    CHECK(over.code == 0);
    auto orow = parse_row(split_lines(over.out)[1]);
    CHECK(orow[1] == 1.0); // command line wins over the config file
    CHECK(orow[7] == 0.0);
}

TEST_CASE("figure file contents") {
    auto dir = test_dir() / "figs";
    std::filesystem::create_directories(dir);
    CliResult r = run_cli("figure --n 9 --out-dir " + dir.string());
    CHECK(r.code == 0);
    auto path = dir / "figure_9.csv";
    REQUIRE(std::filesystem::exists(path));
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    auto lines = split_lines(ss.str());
    REQUIRE(lines.size() == 1001);
    CHECK(lines[0] == "tau_plus,concurrence");
    // row 111 sits exactly at tau_plus = 9*111/999 = 1
    CHECK(lines[112] == "1," + g17(std::tanh(1.0)));
}

TEST_CASE("output file option writes the same bytes as stdout") {
    auto dir = test_dir();
    auto path = dir / "prop.csv";
    std::string args = "propagate --samples 7 --tmax 1.5 --state mp";
    CliResult to_stdout = run_cli(args);
    CliResult to_file = run_cli(args + " --out " + path.string());
    CHECK(to_stdout.code == 0);
    CHECK(to_file.code == 0);
    CHECK(to_file.out.empty());
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == to_stdout.out);
}

} // TEST_SUITE
