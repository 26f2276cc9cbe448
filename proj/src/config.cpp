#include "abgrav/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string_view>

#include "abgrav/analytic.hpp"
#include "abgrav/potentials.hpp"
#include "abgrav/report.hpp"

namespace abgrav {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                          s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw ParseError("config line " + std::to_string(line) + ": " + what);
}

double parse_double(std::string_view value, std::size_t line) {
    double out = 0.0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last || !std::isfinite(out))
        fail(line, "expected a finite number, got '" + std::string(value) + "'");
    return out;
}

std::size_t parse_size(std::string_view value, std::size_t line) {
    std::size_t out = 0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last)
        fail(line, "expected a non-negative integer, got '" +
                       std::string(value) + "'");
    return out;
}

bool parse_bool(std::string_view value, std::size_t line) {
    if (value == "true" || value == "1")
        return true;
    if (value == "false" || value == "0")
        return false;
    fail(line, "expected true/false, got '" + std::string(value) + "'");
}

PulseConfig& ensure_pulse(ArmConfig& arm) {
    if (!arm.pulse)
        arm.pulse.emplace();
    return *arm.pulse;
}

bool assign_arm(ArmConfig& arm, std::string_view field, std::string_view value,
                std::size_t line) {
    if (field == "pulse.amplitude")
        ensure_pulse(arm).amplitude = parse_double(value, line);
    else if (field == "pulse.ramp")
        ensure_pulse(arm).ramp = parse_double(value, line);
    else if (field == "pulse.plateau")
        ensure_pulse(arm).plateau = parse_double(value, line);
    else if (field == "level")
        arm.level = parse_double(value, line);
    else
        return false;
    return true;
}

const char* kick_rule_name(KickRule rule) {
    return rule == KickRule::ExactIntegral ? "exact_integral" : "midpoint";
}

const char* frame_name(FrameMode mode) {
    switch (mode) {
    case FrameMode::Auto:
        return "auto";
    case FrameMode::On:
        return "on";
    case FrameMode::Off:
        return "off";
    }
    return "auto";
}

bool is_metric_route(Route route) {
    return route == Route::Newtonian || route == Route::SemiCovariant ||
           route == Route::ProperTime;
}

[[noreturn]] void invalid(const std::string& what) {
    throw ValidationError("config: " + what);
}

// Everything build_scenario fills in when the config leaves it to "auto".
struct ResolvedTiming {
    double duration = 0.0;
    double step = 0.0;
    PotentialProgram arm1;
    PotentialProgram arm2;
};

PotentialProgram build_arm_program(const ArmConfig& arm, const char* name,
                                   const ScenarioConfig& cfg) {
    if (arm.pulse && arm.level)
        invalid(std::string(name) + " sets both a pulse and a level");
    if (arm.pulse)
        return potentials::tube_pulse_program(arm.pulse->amplitude,
                                              arm.pulse->ramp,
                                              arm.pulse->plateau, cfg.lead,
                                              cfg.tail);
    if (arm.level) {
        if (!(cfg.dwell > 0.0))
            invalid(std::string(name) + ".level needs time.dwell > 0");
        return potentials::elevator_program(*arm.level, cfg.dwell, cfg.lead,
                                            cfg.tail);
    }
    return PotentialProgram{};
}

double auto_step(const ScenarioConfig& cfg, double duration, double max_u,
                 const Constants& constants) {
    const double hbar = constants.hbar;
    // Energy scale of the uniform (scalar) part of the propagator.
    double scalar = max_u;
    if (is_metric_route(cfg.route)) {
        const double chi_max =
            cfg.metric_M.value_or(0.0) /
            (std::min(cfg.metric_R1.value_or(1.0), cfg.metric_R2.value_or(1.0)) *
             constants.c * constants.c);
        scalar += (cfg.frame == FrameMode::Off)
                      ? constants.rest_energy()
                      : constants.rest_energy() * chi_max;
    }
    const double dx = cfg.grid_length / static_cast<double>(cfg.grid_n);
    const double k_max = kPi / dx;
    const double kinetic_nyquist = hbar * k_max * k_max / (2.0 * constants.mass);
    const double p_sq =
        cfg.packet_momentum * cfg.packet_momentum +
        hbar * hbar / (4.0 * cfg.packet_width * cfg.packet_width);
    const double sample_rate =
        (scalar + p_sq / (2.0 * constants.mass)) / hbar *
        static_cast<double>(cfg.record_stride);

    double cap = duration / static_cast<double>(cfg.record_stride);
    cap = std::min(cap, 0.5 * kPi / kinetic_nyquist);
    if (scalar > 0.0)
        cap = std::min(cap, 0.5 * (kPi / 4.0) / (scalar / hbar));
    if (sample_rate > 0.0)
        cap = std::min(cap, 0.5 * kPi / sample_rate);

    auto divides = [](double whole, double step) {
        if (whole <= 0.0)
            return true;
        const double n = std::round(whole / step);
        return n >= 1.0 && std::abs(n * step - whole) <= 1e-9 * whole;
    };
    // Largest "nice" step below the cap that tiles every stage duration.
    for (int k = static_cast<int>(std::floor(std::log10(cap))); k >= -8; --k) {
        for (double f : {5.0, 2.0, 1.0}) {
            const double step = f * std::pow(10.0, k);
            if (step > cap)
                continue;
            if (!divides(duration, step) || !divides(cfg.lead, step) ||
                !divides(cfg.dwell, step) || !divides(cfg.tail, step))
                continue;
            const auto n = static_cast<std::size_t>(
                std::llround(duration / step));
            if (n % cfg.record_stride != 0)
                continue;
            return step;
        }
    }
    invalid("no automatic time.step fits the stability bounds; set time.step");
}

ResolvedTiming resolve_timing(const ScenarioConfig& cfg,
                              const Constants& constants) {
    ResolvedTiming out;
    if (!(cfg.lead >= 0.0) || !(cfg.tail >= 0.0) || !(cfg.dwell >= 0.0))
        invalid("time.lead, time.dwell and time.tail must be >= 0");

    if (is_metric_route(cfg.route)) {
        if (!cfg.metric_M || !cfg.metric_R1 || !cfg.metric_R2)
            invalid("metric routes need metric.M, metric.R1 and metric.R2");
        if (cfg.arm1.pulse || cfg.arm1.level || cfg.arm2.pulse ||
            cfg.arm2.level)
            invalid("arm schedules are flat-route settings");
        if (!(cfg.dwell > 0.0))
            invalid("metric routes need time.dwell > 0");
        const double natural = cfg.lead + cfg.dwell + cfg.tail;
        if (cfg.duration &&
            std::abs(*cfg.duration - natural) > 1e-9 * natural)
            invalid("time.duration must equal lead + dwell + tail");
        out.duration = natural;
    } else {
        out.arm1 = build_arm_program(cfg.arm1, "arm1", cfg);
        out.arm2 = build_arm_program(cfg.arm2, "arm2", cfg);
        const double d1 = out.arm1.empty() ? 0.0 : out.arm1.total_duration();
        const double d2 = out.arm2.empty() ? 0.0 : out.arm2.total_duration();
        if (d1 > 0.0 && d2 > 0.0 &&
            std::abs(d1 - d2) > 1e-9 * std::max(d1, d2))
            invalid("arm schedules have different total durations");
        const double natural = std::max(d1, d2);
        if (cfg.duration) {
            out.duration = *cfg.duration;
            if (!(out.duration > 0.0))
                invalid("time.duration must be positive");
            if (natural > 0.0 && out.duration > natural * (1.0 + 1e-9))
                invalid("time.duration exceeds the arm schedules");
        } else {
            if (!(natural > 0.0))
                invalid("flat route needs an arm schedule or time.duration");
            out.duration = natural;
        }
    }

    const double max_u =
        std::max(out.arm1.max_abs_level(), out.arm2.max_abs_level());
    out.step = cfg.step ? *cfg.step
                        : auto_step(cfg, out.duration, max_u, constants);
    if (!(out.step > 0.0) || !std::isfinite(out.step))
        invalid("time.step must be positive");
    return out;
}

double auto_fringe_kick(const ScenarioConfig& cfg, const Constants& constants) {
    return std::max(4.0 * kPi * constants.hbar / cfg.grid_length,
                    6.0 * constants.hbar / cfg.packet_width);
}

Constants make_constants(const ScenarioConfig& cfg) {
    Constants constants;
    constants.hbar = cfg.hbar;
    constants.c = cfg.c;
    constants.mass = cfg.mass;
    constants.charge = cfg.charge;
    constants.validate();
    return constants;
}

} // namespace

ScenarioConfig parse_config(const std::string& text) {
    ScenarioConfig cfg;
    std::istringstream stream(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            fail(line_no, "expected 'key = value'");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty())
            fail(line_no, "empty key");
        if (value.empty())
            fail(line_no, "empty value for key '" + std::string(key) + "'");

        if (key == "route") {
            const auto route = route_from_name(std::string(value));
            if (!route)
                fail(line_no, "unknown route '" + std::string(value) + "'");
            cfg.route = *route;
        } else if (key == "constants.hbar") {
            cfg.hbar = parse_double(value, line_no);
        } else if (key == "constants.mass") {
            cfg.mass = parse_double(value, line_no);
        } else if (key == "constants.charge") {
            cfg.charge = parse_double(value, line_no);
        } else if (key == "constants.c") {
            cfg.c = parse_double(value, line_no);
        } else if (key == "grid.n") {
            cfg.grid_n = parse_size(value, line_no);
        } else if (key == "grid.length") {
            cfg.grid_length = parse_double(value, line_no);
        } else if (key == "packet.center") {
            cfg.packet_center = parse_double(value, line_no);
        } else if (key == "packet.width") {
            cfg.packet_width = parse_double(value, line_no);
        } else if (key == "packet.momentum") {
            cfg.packet_momentum = parse_double(value, line_no);
        } else if (key == "time.step") {
            cfg.step = parse_double(value, line_no);
        } else if (key == "time.record_stride") {
            cfg.record_stride = parse_size(value, line_no);
        } else if (key == "time.duration") {
            cfg.duration = parse_double(value, line_no);
        } else if (key == "time.dwell") {
            cfg.dwell = parse_double(value, line_no);
        } else if (key == "time.lead") {
            cfg.lead = parse_double(value, line_no);
        } else if (key == "time.tail") {
            cfg.tail = parse_double(value, line_no);
        } else if (key.substr(0, 5) == "arm1.") {
            if (!assign_arm(cfg.arm1, key.substr(5), value, line_no))
                fail(line_no, "unknown key '" + std::string(key) + "'");
        } else if (key.substr(0, 5) == "arm2.") {
            if (!assign_arm(cfg.arm2, key.substr(5), value, line_no))
                fail(line_no, "unknown key '" + std::string(key) + "'");
        } else if (key == "metric.M") {
            cfg.metric_M = parse_double(value, line_no);
        } else if (key == "metric.R1") {
            cfg.metric_R1 = parse_double(value, line_no);
        } else if (key == "metric.R2") {
            cfg.metric_R2 = parse_double(value, line_no);
        } else if (key == "metric.correction") {
            cfg.correction = parse_bool(value, line_no);
        } else if (key == "tube.center") {
            cfg.tube_center = parse_double(value, line_no);
        } else if (key == "tube.half_width") {
            cfg.tube_half_width = parse_double(value, line_no);
        } else if (key == "fringe.kick") {
            cfg.fringe_kick = parse_double(value, line_no);
        } else if (key == "solver.kick_rule") {
            if (value == "exact_integral")
                cfg.kick_rule = KickRule::ExactIntegral;
            else if (value == "midpoint")
                cfg.kick_rule = KickRule::Midpoint;
            else
                fail(line_no, "unknown kick rule '" + std::string(value) + "'");
        } else if (key == "solver.frame") {
            if (value == "auto")
                cfg.frame = FrameMode::Auto;
            else if (value == "on")
                cfg.frame = FrameMode::On;
            else if (value == "off")
                cfg.frame = FrameMode::Off;
            else
                fail(line_no, "unknown frame mode '" + std::string(value) + "'");
        } else {
            fail(line_no, "unknown key '" + std::string(key) + "'");
        }
    }
    return cfg;
}

std::string echo_config(const ScenarioConfig& cfg) {
    std::ostringstream out;
    auto emit = [&](const char* key, const std::string& value) {
        out << key << " = " << value << "\n";
    };
    auto emit_d = [&](const char* key, double value) {
        emit(key, format_full(value));
    };
    emit("route", route_name(cfg.route));
    emit_d("constants.hbar", cfg.hbar);
    emit_d("constants.mass", cfg.mass);
    emit_d("constants.charge", cfg.charge);
    emit_d("constants.c", cfg.c);
    emit("grid.n", std::to_string(cfg.grid_n));
    emit_d("grid.length", cfg.grid_length);
    emit_d("packet.center", cfg.packet_center);
    emit_d("packet.width", cfg.packet_width);
    emit_d("packet.momentum", cfg.packet_momentum);
    if (cfg.step)
        emit_d("time.step", *cfg.step);
    emit("time.record_stride", std::to_string(cfg.record_stride));
    if (cfg.duration)
        emit_d("time.duration", *cfg.duration);
    emit_d("time.dwell", cfg.dwell);
    emit_d("time.lead", cfg.lead);
    emit_d("time.tail", cfg.tail);
    auto emit_arm = [&](const char* name, const ArmConfig& arm) {
        const std::string prefix(name);
        if (arm.pulse) {
            emit_d((prefix + ".pulse.amplitude").c_str(), arm.pulse->amplitude);
            emit_d((prefix + ".pulse.ramp").c_str(), arm.pulse->ramp);
            emit_d((prefix + ".pulse.plateau").c_str(), arm.pulse->plateau);
        }
        if (arm.level)
            emit_d((prefix + ".level").c_str(), *arm.level);
    };
    emit_arm("arm1", cfg.arm1);
    emit_arm("arm2", cfg.arm2);
    if (cfg.metric_M)
        emit_d("metric.M", *cfg.metric_M);
    if (cfg.metric_R1)
        emit_d("metric.R1", *cfg.metric_R1);
    if (cfg.metric_R2)
        emit_d("metric.R2", *cfg.metric_R2);
    emit("metric.correction", cfg.correction ? "true" : "false");
    emit_d("tube.center", cfg.tube_center);
    if (cfg.tube_half_width)
        emit_d("tube.half_width", *cfg.tube_half_width);
    if (cfg.fringe_kick)
        emit_d("fringe.kick", *cfg.fringe_kick);
    emit("solver.kick_rule", kick_rule_name(cfg.kick_rule));
    emit("solver.frame", frame_name(cfg.frame));
    return out.str();
}

Scenario build_scenario(const ScenarioConfig& cfg) {
    try {
        const Constants constants = make_constants(cfg);
        const ResolvedTiming timing = resolve_timing(cfg, constants);

        Scenario s;
        s.constants = constants;
        s.grid_n = cfg.grid_n;
        s.grid_length = cfg.grid_length;
        s.packet.center = cfg.packet_center;
        s.packet.width = cfg.packet_width;
        s.packet.momentum = cfg.packet_momentum;
        s.route = cfg.route;
        s.arm1_program = timing.arm1;
        s.arm2_program = timing.arm2;
        s.dwell = cfg.dwell;
        s.lead = cfg.lead;
        s.tail = cfg.tail;
        if (is_metric_route(cfg.route)) {
            s.metric1 = MetricParams{*cfg.metric_M, *cfg.metric_R1};
            s.metric2 = MetricParams{*cfg.metric_M, *cfg.metric_R2};
        }
        s.include_correction = cfg.correction;
        s.step = timing.step;
        const double n_real = timing.duration / timing.step;
        const auto n = static_cast<std::size_t>(std::llround(n_real));
        if (n == 0 ||
            std::abs(static_cast<double>(n) * timing.step - timing.duration) >
                1e-9 * timing.duration)
            invalid("time.duration must be an integer number of steps");
        s.n_steps = n;
        s.record_stride = cfg.record_stride;
        s.tube_center = cfg.tube_center;
        s.tube_half_width = cfg.tube_half_width.value_or(0.0);
        s.fringe_kick = cfg.fringe_kick.value_or(0.0);
        s.kick_rule = cfg.kick_rule;
        s.subtract_common_rest = cfg.frame != FrameMode::Off;
        s.validate();
        return s;
    } catch (const ValidationError&) {
        throw;
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ValidationError(e.what());
    }
}

ScenarioConfig resolve_config(const ScenarioConfig& cfg) {
    // Validate first so the resolved copy is known-good.
    build_scenario(cfg);
    const Constants constants = make_constants(cfg);
    const ResolvedTiming timing = resolve_timing(cfg, constants);
    ScenarioConfig out = cfg;
    out.step = timing.step;
    out.duration = timing.duration;
    if (!out.tube_half_width)
        out.tube_half_width = 0.0;
    if (!out.fringe_kick)
        out.fringe_kick = auto_fringe_kick(cfg, constants);
    if (out.frame == FrameMode::Auto)
        out.frame = FrameMode::On;
    return out;
}

Scenario parse_scenario(const std::string& text) {
    return build_scenario(parse_config(text));
}

void apply_sweep_parameter(ScenarioConfig& config, const std::string& name,
                           double value) {
    if (name == "dwell") {
        config.dwell = value;
        config.duration.reset(); // re-derive from the new dwell
    } else if (name == "R2") {
        config.metric_R2 = value;
    } else if (name == "M") {
        config.metric_M = value;
    } else if (name == "amplitude") {
        if (!config.arm1.pulse)
            throw ConfigError(
                "sweep parameter 'amplitude' needs an arm1 pulse schedule");
        config.arm1.pulse->amplitude = value;
    } else if (name == "step") {
        config.step = value;
    } else {
        throw ConfigError("unknown sweep parameter '" + name +
                          "' (expected dwell, R2, M, amplitude or step)");
    }
}

} // namespace abgrav
