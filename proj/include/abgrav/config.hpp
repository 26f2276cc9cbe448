#pragma once

// Scenario configuration: a flat key = value text format with '#'
// comments and dotted keys. See scenarios/*.cfg for the documented
// schema. parse_config rejects unknown keys by name; build_scenario
// applies defaults and validates every scenario invariant.

#include <optional>
#include <string>

#include "abgrav/scenario.hpp"

namespace abgrav {

// Rotating-frame handling: On subtracts the common rest energy from both
// arms (it cancels from every relative phase and keeps the per-arm phase
// columns readable); Off keeps the full winding. Auto resolves to On.
enum class FrameMode { Auto, On, Off };

struct PulseConfig {
    double amplitude = 0.0;
    double ramp = 0.0;
    double plateau = 0.0;
};

struct ArmConfig {
    std::optional<PulseConfig> pulse;
    std::optional<double> level; // constant level during the dwell
};

struct ScenarioConfig {
    Route route = Route::FlatElectric;

    double hbar = 1.0;
    double mass = 1.0;
    double charge = 1.0;
    double c = 1000.0;

    std::size_t grid_n = 4096;
    double grid_length = 400.0;

    double packet_center = 0.0;
    double packet_width = 5.0;
    double packet_momentum = 0.0;

    std::optional<double> step; // absent: choose from stability bounds
    std::size_t record_stride = 10;
    std::optional<double> duration; // absent: full program / dwell window

    double dwell = 0.0;
    double lead = 0.0;
    double tail = 0.0;

    ArmConfig arm1;
    ArmConfig arm2;

    std::optional<double> metric_M;
    std::optional<double> metric_R1;
    std::optional<double> metric_R2;
    bool correction = true;

    double tube_center = 0.0;
    std::optional<double> tube_half_width;

    std::optional<double> fringe_kick;

    KickRule kick_rule = KickRule::ExactIntegral;
    FrameMode frame = FrameMode::Auto;
};

// Throws ParseError naming the offending key/line.
ScenarioConfig parse_config(const std::string& text);

// Serialize; omitted optionals are omitted.
std::string echo_config(const ScenarioConfig& config);

// Build and validate the Scenario (defaults resolved, stability-derived
// step when absent). Throws ValidationError naming the invariant.
Scenario build_scenario(const ScenarioConfig& config);

// Config with every auto field replaced by its resolved value; parsing
// the echo of this reproduces an identical Scenario.
ScenarioConfig resolve_config(const ScenarioConfig& config);

// parse + build in one go.
Scenario parse_scenario(const std::string& text);

// Override one sweep parameter. Names: dwell, R2, M, amplitude, step.
// Throws ConfigError for unknown names.
void apply_sweep_parameter(ScenarioConfig& config, const std::string& name,
                           double value);

} // namespace abgrav
