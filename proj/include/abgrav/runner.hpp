#pragma once

// High-level drivers shared by the CLI, the python bindings and the test
// suites: simulate one scenario (with optional Richardson pair), run a
// parameter sweep with a worker pool, compare evolution routes.

#include <string>
#include <vector>

#include "abgrav/config.hpp"
#include "abgrav/interferometer.hpp"
#include "abgrav/report.hpp"

namespace abgrav {

struct SimulationOutput {
    RunReport report;
    TwoArmResult result;
    FringePattern fringes;
};

SimulationOutput simulate(const ScenarioConfig& config,
                          bool with_richardson = false);

// Write report.json, history.csv and fringes.csv into out_dir (created if
// missing).
void write_simulation_outputs(const std::string& out_dir,
                              const SimulationOutput& output);

// One run per value, executed on up to `workers` threads; rows are
// returned in input order regardless of completion order.
std::vector<SweepRow> run_sweep(const ScenarioConfig& config,
                                const std::string& parameter,
                                const std::vector<double>& values,
                                std::size_t workers = 1);

RouteComparison compare_routes(const ScenarioConfig& config);

} // namespace abgrav
