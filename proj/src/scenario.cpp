#include "abgrav/scenario.hpp"

#include <cmath>

#include "abgrav/errors.hpp"
#include "abgrav/grid.hpp"

namespace abgrav {

const char* route_name(Route route) {
    switch (route) {
    case Route::FlatElectric:
        return "flat_electric";
    case Route::Newtonian:
        return "newtonian";
    case Route::SemiCovariant:
        return "semi_covariant";
    case Route::ProperTime:
        return "proper_time";
    }
    return "unknown";
}

std::optional<Route> route_from_name(const std::string& name) {
    std::string key = name;
    for (auto& ch : key)
        if (ch == '-')
            ch = '_';
    if (key == "flat_electric")
        return Route::FlatElectric;
    if (key == "newtonian")
        return Route::Newtonian;
    if (key == "semi_covariant")
        return Route::SemiCovariant;
    if (key == "proper_time")
        return Route::ProperTime;
    return std::nullopt;
}

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void require(bool ok, const char* what) {
    if (!ok)
        throw ScenarioError(what);
}

} // namespace

void Scenario::validate() const {
    constants.validate();
    require(grid_n >= 16 && is_power_of_two(grid_n),
            "Scenario: grid_n must be a power of two >= 16");
    require(std::isfinite(grid_length) && grid_length > 0.0,
            "Scenario: grid_length must be positive");
    require(std::isfinite(packet.width) && packet.width > 0.0,
            "Scenario: packet width must be positive");
    require(std::isfinite(packet.center) && std::isfinite(packet.momentum),
            "Scenario: packet center and momentum must be finite");
    require(std::isfinite(step) && step > 0.0,
            "Scenario: step must be positive");
    require(n_steps > 0, "Scenario: n_steps must be positive");
    require(record_stride > 0, "Scenario: record_stride must be positive");
    require(n_steps % record_stride == 0,
            "Scenario: record_stride must divide n_steps");
    require(std::isfinite(lead) && lead >= 0.0, "Scenario: lead must be >= 0");
    require(std::isfinite(tail) && tail >= 0.0, "Scenario: tail must be >= 0");
    require(std::isfinite(dwell) && dwell >= 0.0,
            "Scenario: dwell must be >= 0");
    require(std::isfinite(tube_half_width) && tube_half_width >= 0.0,
            "Scenario: tube_half_width must be >= 0");
    require(std::isfinite(fringe_kick) && fringe_kick >= 0.0,
            "Scenario: fringe_kick must be >= 0");
    if (tube_half_width > 0.0) {
        require(tube_center - tube_half_width >= -0.5 * grid_length &&
                    tube_center + tube_half_width <= 0.5 * grid_length,
                "Scenario: tube region must lie inside the grid");
    }

    const bool metric_route = route == Route::Newtonian ||
                              route == Route::SemiCovariant ||
                              route == Route::ProperTime;
    if (metric_route) {
        require(metric1.has_value() && metric2.has_value(),
                "Scenario: metric routes need metric1 and metric2");
        metric1->validate();
        metric2->validate();
        require(metric1->M == metric2->M,
                "Scenario: both arms must orbit the same central mass");
        metric1->require_weak_field(constants);
        metric2->require_weak_field(constants);
        require(dwell > 0.0, "Scenario: metric routes need dwell > 0");
        const double total = lead + dwell + tail;
        require(std::abs(duration() - total) <= 1e-9 * total,
                "Scenario: step * n_steps must equal lead + dwell + tail");
    } else {
        // Flat-electric: the evolution window must not outrun a schedule.
        const double d1 =
            arm1_program.empty() ? 0.0 : arm1_program.total_duration();
        const double d2 =
            arm2_program.empty() ? 0.0 : arm2_program.total_duration();
        const double longest = std::max(d1, d2);
        if (longest > 0.0)
            require(duration() <= longest * (1.0 + 1e-9),
                    "Scenario: evolution window exceeds the potential schedule");
    }
}

double PhaseComparison::residual_wrapped() const {
    return wrap_to_pi(residual());
}

} // namespace abgrav
