// abgrav: two-arm wavepacket interferometry for the electric
// Aharonov-Bohm effect and its weak-field gravitational analog.
//
// Exit codes: 0 success, 1 runtime/configuration failure, 2 bad usage,
// 3 assertion failure (--assert with |residual| > --tol).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "abgrav/analytic.hpp"
#include "abgrav/potentials.hpp"
#include "abgrav/runner.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitAssert = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw abgrav::ConfigError("could not read config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void print_value(const char* key, double value) {
    std::cout << key << " = " << abgrav::format_full(value) << "\n";
}

struct CommonFlags {
    std::string config_path;
    std::string out_dir;
    bool do_assert = false;
    double tol = 1e-6;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_out = true) {
    cmd->add_option("--config", flags.config_path, "scenario config file")
        ->required();
    if (with_out)
        cmd->add_option("--out", flags.out_dir, "output directory");
    cmd->add_flag("--assert", flags.do_assert,
                  "exit 3 when |residual| exceeds --tol");
    cmd->add_option("--tol", flags.tol, "assertion tolerance")
        ->default_val(1e-6);
}

int check_assert(bool do_assert, double tol, double residual,
                 const char* what) {
    if (!do_assert)
        return 0;
    if (std::abs(residual) > tol) {
        std::cerr << "assertion failed: |" << what
                  << "| = " << abgrav::format_full(std::abs(residual))
                  << " > " << abgrav::format_full(tol) << "\n";
        return kExitAssert;
    }
    return 0;
}

int run_simulate(const CommonFlags& flags, bool richardson) {
    const auto config = abgrav::parse_config(read_file(flags.config_path));
    const auto output = abgrav::simulate(config, richardson);
    const auto& cmp = output.report.comparison;
    print_value("numeric_phase", cmp.numeric_phase);
    print_value("analytic_phase", cmp.analytic_phase);
    print_value("residual", cmp.residual());
    print_value("momentum_drift", cmp.momentum_drift);
    print_value("norm_drift", cmp.norm_drift);
    print_value("extracted_shift", output.fringes.extracted_shift);
    print_value("timing_seconds", output.report.timing_seconds);
    if (output.report.convergence) {
        const auto& conv = *output.report.convergence;
        print_value("convergence_step", conv.step);
        print_value("convergence_residual", conv.residual_at_step);
        print_value("convergence_residual_half", conv.residual_at_half_step);
        print_value("convergence_ratio", conv.ratio);
    }
    if (!flags.out_dir.empty())
        abgrav::write_simulation_outputs(flags.out_dir, output);
    return check_assert(flags.do_assert, flags.tol, cmp.residual(),
                        "residual");
}

int run_sweep_cmd(const CommonFlags& flags, const std::string& parameter,
                  const std::vector<double>& values, std::size_t workers) {
    const auto config = abgrav::parse_config(read_file(flags.config_path));
    const auto rows = abgrav::run_sweep(config, parameter, values, workers);
    std::cout << "value,numeric_phase,analytic_phase,residual\n";
    double worst = 0.0;
    for (const auto& row : rows) {
        std::cout << abgrav::format_full(row.value) << ','
                  << abgrav::format_full(row.numeric_phase) << ','
                  << abgrav::format_full(row.analytic_phase) << ','
                  << abgrav::format_full(row.residual) << '\n';
        worst = std::max(worst, std::abs(row.residual));
    }
    if (!flags.out_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(flags.out_dir, ec);
        if (ec)
            throw abgrav::Error("could not create output directory '" +
                                flags.out_dir + "'");
        abgrav::write_sweep_csv(
            (std::filesystem::path(flags.out_dir) / "sweep.csv").string(),
            rows);
    }
    return check_assert(flags.do_assert, flags.tol, worst, "max residual");
}

int run_compare_routes(const CommonFlags& flags) {
    const auto config = abgrav::parse_config(read_file(flags.config_path));
    const auto cmp = abgrav::compare_routes(config);
    print_value("semi_covariant_numeric", cmp.semi_covariant.numeric_phase);
    print_value("semi_covariant_analytic", cmp.semi_covariant.analytic_phase);
    print_value("proper_time_numeric", cmp.proper_time.numeric_phase);
    print_value("proper_time_analytic", cmp.proper_time.analytic_phase);
    print_value("difference", cmp.difference);
    return check_assert(flags.do_assert, flags.tol, cmp.difference,
                        "route difference");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Electric Aharonov-Bohm phases and their weak-field "
                 "Schwarzschild analog: closed forms and two-arm wavepacket "
                 "interferometry"};
    app.require_subcommand(1);

    // ---- analytic ----------------------------------------------------
    auto* analytic = app.add_subcommand(
        "analytic", "evaluate a closed-form phase prediction");
    analytic->require_subcommand(1);
    double hbar = 1.0, mass = 1.0, charge = 1.0, c = 1000.0;
    auto add_constants = [&](CLI::App* cmd) {
        cmd->add_option("--hbar", hbar)->default_val(1.0);
        cmd->add_option("--mass", mass)->default_val(1.0);
        cmd->add_option("--charge", charge)->default_val(1.0);
        cmd->add_option("--c", c)->default_val(1000.0);
    };
    auto constants = [&]() {
        abgrav::Constants k;
        k.hbar = hbar;
        k.mass = mass;
        k.charge = charge;
        k.c = c;
        return k;
    };

    double R1 = 1.0, R2 = 2.0, M = 0.0, R = 1.0, dwell = 1.0;
    double V1 = 0.0, V2 = 0.0, momentum = 0.0, p_sq = 0.0;
    double amplitude = 0.0, ramp = 0.0, plateau = 0.0;
    bool correction = true;
    std::string mode = "weak_field";

    auto* a_newtonian =
        analytic->add_subcommand("newtonian", "dwell at two radii");
    a_newtonian->add_option("--R1", R1)->required();
    a_newtonian->add_option("--R2", R2)->required();
    a_newtonian->add_option("--M", M)->required();
    a_newtonian->add_option("--dwell", dwell)->required();
    add_constants(a_newtonian);

    auto* a_elevator =
        analytic->add_subcommand("elevator", "dwell at two potentials");
    a_elevator->add_option("--V1", V1)->required();
    a_elevator->add_option("--V2", V2)->required();
    a_elevator->add_option("--dwell", dwell)->required();
    add_constants(a_elevator);

    auto* a_pulse = analytic->add_subcommand(
        "pulse", "raised-cosine pulse against a free arm");
    a_pulse->add_option("--amplitude", amplitude)->required();
    a_pulse->add_option("--ramp", ramp)->required();
    a_pulse->add_option("--plateau", plateau)->required();
    add_constants(a_pulse);

    auto* a_redshift =
        analytic->add_subcommand("redshift", "redshift factor at one radius");
    a_redshift->add_option("--M", M)->required();
    a_redshift->add_option("--R", R)->required();
    add_constants(a_redshift);

    auto* a_tau = analytic->add_subcommand(
        "proper-time", "proper-time route at two radii");
    a_tau->add_option("--R1", R1)->required();
    a_tau->add_option("--R2", R2)->required();
    a_tau->add_option("--M", M)->required();
    a_tau->add_option("--dwell", dwell)->required();
    a_tau->add_option("--p", momentum)->default_val(0.0);
    a_tau->add_option("--mode", mode)
        ->default_val("weak_field")
        ->check(CLI::IsMember({"weak_field", "exact"}));
    add_constants(a_tau);

    auto* a_semi = analytic->add_subcommand(
        "semi-covariant", "semi-covariant route at two radii");
    a_semi->add_option("--R1", R1)->required();
    a_semi->add_option("--R2", R2)->required();
    a_semi->add_option("--M", M)->required();
    a_semi->add_option("--dwell", dwell)->required();
    a_semi->add_option("--psq", p_sq)->default_val(0.0);
    a_semi->add_flag("--no-correction{false}", correction,
                     "drop the velocity-correction term");
    add_constants(a_semi);

    // ---- simulate ----------------------------------------------------
    CommonFlags sim_flags;
    bool richardson = false;
    auto* simulate =
        app.add_subcommand("simulate", "run one two-arm scenario");
    add_common(simulate, sim_flags);
    simulate->add_flag("--richardson", richardson,
                       "also run at step/2 and report the residual ratio");

    // ---- sweep -------------------------------------------------------
    CommonFlags sweep_flags;
    std::string parameter;
    std::vector<double> values;
    std::size_t workers = 1;
    auto* sweep =
        app.add_subcommand("sweep", "run one scenario over a parameter list");
    add_common(sweep, sweep_flags);
    sweep->add_option("--parameter", parameter,
                      "one of dwell, R2, M, amplitude, step")
        ->required();
    sweep->add_option("--values", values, "comma-separated list")
        ->required()
        ->delimiter(',');
    sweep->add_option("--workers", workers, "concurrent runs")
        ->default_val(1);

    // ---- compare-routes ----------------------------------------------
    CommonFlags routes_flags;
    auto* routes = app.add_subcommand(
        "compare-routes",
        "run the semi-covariant and proper-time routes on one scenario");
    add_common(routes, routes_flags, /*with_out=*/false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (a_newtonian->parsed()) {
            print_value("phase", abgrav::analytic::newtonian_phase(
                                     R1, R2, dwell, M, constants()));
        } else if (a_elevator->parsed()) {
            print_value("phase", abgrav::analytic::elevator_phase(
                                     V1, V2, dwell, constants()));
        } else if (a_pulse->parsed()) {
            const auto program = abgrav::potentials::tube_pulse_program(
                amplitude, ramp, plateau, 0.0, 0.0);
            print_value("phase",
                        program.integral() / constants().hbar);
        } else if (a_redshift->parsed()) {
            const abgrav::MetricParams metric{M, R};
            const double exact = abgrav::analytic::redshift_factor(
                metric, constants(), abgrav::RedshiftMode::Exact);
            const double weak = abgrav::analytic::redshift_factor(
                metric, constants(), abgrav::RedshiftMode::WeakField);
            print_value("exact", exact);
            print_value("weak_field", weak);
            print_value("difference", exact - weak);
        } else if (a_tau->parsed()) {
            const auto rmode = mode == "exact"
                                   ? abgrav::RedshiftMode::Exact
                                   : abgrav::RedshiftMode::WeakField;
            print_value("phase", abgrav::analytic::proper_time_route_phase(
                                     R1, R2, dwell, M, momentum, constants(),
                                     rmode));
        } else if (a_semi->parsed()) {
            print_value("phase", abgrav::analytic::semi_covariant_phase(
                                     R1, R2, dwell, M, p_sq, constants(),
                                     correction));
        } else if (simulate->parsed()) {
            return run_simulate(sim_flags, richardson);
        } else if (sweep->parsed()) {
            return run_sweep_cmd(sweep_flags, parameter, values, workers);
        } else if (routes->parsed()) {
            return run_compare_routes(routes_flags);
        }
    } catch (const abgrav::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return 0;
}
