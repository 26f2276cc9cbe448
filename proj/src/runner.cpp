#include "abgrav/runner.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include "abgrav/errors.hpp"

namespace abgrav {

namespace {

double resolved_kick(const Scenario& scenario,
                     const ScenarioConfig& resolved_cfg) {
    if (scenario.fringe_kick > 0.0)
        return scenario.fringe_kick;
    return resolved_cfg.fringe_kick.value_or(0.0);
}

} // namespace

SimulationOutput simulate(const ScenarioConfig& config, bool with_richardson) {
    const ScenarioConfig resolved = resolve_config(config);
    const Scenario scenario = build_scenario(resolved);

    const auto t0 = std::chrono::steady_clock::now();
    TwoArmResult result = run_two_arm(scenario);
    std::optional<ConvergencePair> convergence;
    if (with_richardson) {
        ScenarioConfig half = resolved;
        half.step = scenario.step / 2.0;
        const TwoArmResult fine = run_two_arm(build_scenario(half));
        ConvergencePair pair;
        pair.step = scenario.step;
        pair.residual_at_step = result.comparison.residual();
        pair.residual_at_half_step = fine.comparison.residual();
        pair.ratio = pair.residual_at_half_step != 0.0
                         ? pair.residual_at_step / pair.residual_at_half_step
                         : 0.0;
        convergence = pair;
    }
    const auto t1 = std::chrono::steady_clock::now();

    const double kick = resolved_kick(scenario, resolved);
    FringePattern fringes = fringe_synthesize(result.arm1_final,
                                              result.arm2_final, kick,
                                              scenario.constants);

    RunReport report;
    report.scenario_echo = echo_config(resolved);
    report.comparison = result.comparison;
    report.timing_seconds =
        std::chrono::duration<double>(t1 - t0).count();
    report.convergence = convergence;
    return SimulationOutput{std::move(report), std::move(result),
                            std::move(fringes)};
}

void write_simulation_outputs(const std::string& out_dir,
                              const SimulationOutput& output) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec)
        throw Error("could not create output directory '" + out_dir + "'");
    const fs::path base(out_dir);
    {
        std::ofstream report(base / "report.json");
        if (!report)
            throw Error("could not open report.json for writing");
        report << output.report.to_json();
    }
    write_history_csv((base / "history.csv").string(), output.result);
    write_fringes_csv((base / "fringes.csv").string(), output.fringes);
}

std::vector<SweepRow> run_sweep(const ScenarioConfig& config,
                                const std::string& parameter,
                                const std::vector<double>& values,
                                std::size_t workers) {
    if (values.empty())
        throw ConfigError("run_sweep: no sweep values given");
    {
        // Reject unknown parameter names before spawning anything.
        ScenarioConfig probe = config;
        apply_sweep_parameter(probe, parameter, values.front());
    }
    std::vector<SweepRow> rows(values.size());
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto work = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= values.size())
                return;
            try {
                ScenarioConfig run_cfg = config;
                apply_sweep_parameter(run_cfg, parameter, values[i]);
                const SimulationOutput out = simulate(run_cfg);
                rows[i] = SweepRow{values[i],
                                   out.report.comparison.numeric_phase,
                                   out.report.comparison.analytic_phase,
                                   out.report.comparison.residual()};
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
            }
        }
    };

    const std::size_t n_workers =
        std::max<std::size_t>(1, std::min(workers, values.size()));
    if (n_workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (std::size_t t = 0; t < n_workers; ++t)
            pool.emplace_back(work);
        for (auto& thread : pool)
            thread.join();
    }
    if (first_error)
        std::rethrow_exception(first_error);
    return rows;
}

RouteComparison compare_routes(const ScenarioConfig& config) {
    return route_equivalence(build_scenario(resolve_config(config)));
}

} // namespace abgrav
