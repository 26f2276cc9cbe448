#pragma once

// Full description of one two-arm experiment, plus the comparison record
// a run produces.

#include <cstddef>
#include <optional>
#include <string>

#include "abgrav/constants.hpp"
#include "abgrav/metric.hpp"
#include "abgrav/potential_program.hpp"
#include "abgrav/solver.hpp"

namespace abgrav {

enum class Route { FlatElectric, Newtonian, SemiCovariant, ProperTime };

const char* route_name(Route route);
std::optional<Route> route_from_name(const std::string& name);

struct PacketSpec {
    double center = 0.0;
    double width = 5.0;
    double momentum = 0.0;
};

struct Scenario {
    Constants constants;

    std::size_t grid_n = 4096;
    double grid_length = 400.0;
    PacketSpec packet;

    Route route = Route::FlatElectric;

    // Flat-electric and Newtonian routes: full per-arm schedules.
    PotentialProgram arm1_program;
    PotentialProgram arm2_program;

    // Dwell-segment timing. For the metric routes the lead/tail are free
    // flight; the arms differ only during the dwell.
    double dwell = 0.0;
    double lead = 0.0;
    double tail = 0.0;

    std::optional<MetricParams> metric1;
    std::optional<MetricParams> metric2;
    bool include_correction = true;

    double step = 1e-3;
    std::size_t n_steps = 0;
    std::size_t record_stride = 10;

    // Containment region checked while either arm's potential is nonzero.
    double tube_center = 0.0;
    double tube_half_width = 0.0; // 0 disables the check

    double fringe_kick = 0.0; // 0 = choose automatically

    KickRule kick_rule = KickRule::ExactIntegral;
    // Subtract the flat-space rest energy m c^2 from both arms' propagators
    // (common mode; cancels from every relative phase).
    bool subtract_common_rest = true;

    double duration() const { return step * static_cast<double>(n_steps); }

    // Throws ScenarioError / ValidationError naming the violated invariant.
    void validate() const;
};

// Outcome of one two-arm run.
struct PhaseComparison {
    double numeric_phase = 0.0;  // unwrapped
    double analytic_phase = 0.0;
    double momentum_drift = 0.0; // max |<p>(t) - <p>(0)| over both arms
    double norm_drift = 0.0;     // max |norm - 1| over both arms

    double residual() const { return numeric_phase - analytic_phase; }
    double residual_wrapped() const;
};

} // namespace abgrav
