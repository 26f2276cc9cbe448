#include "abgrav/report.hpp"

#include <charconv>
#include <fstream>

#include "json.hpp"

#include "abgrav/errors.hpp"

namespace abgrav {

std::string format_full(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                   std::chars_format::general, 17);
    if (ec != std::errc{})
        throw Error("format_full: conversion failed");
    return std::string(buf, ptr);
}

std::string RunReport::to_json() const {
    nlohmann::json j;
    j["scenario"] = scenario_echo;
    j["comparison"] = {
        {"numeric_phase", comparison.numeric_phase},
        {"analytic_phase", comparison.analytic_phase},
        {"residual", comparison.residual()},
        {"momentum_drift", comparison.momentum_drift},
        {"norm_drift", comparison.norm_drift},
    };
    j["timing_seconds"] = timing_seconds;
    if (convergence) {
        j["convergence"] = {
            {"step", convergence->step},
            {"residual_at_step", convergence->residual_at_step},
            {"residual_at_half_step", convergence->residual_at_half_step},
            {"ratio", convergence->ratio},
        };
    }
    return j.dump(2) + "\n";
}

namespace {

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw Error("could not open '" + path + "' for writing");
    return out;
}

} // namespace

void write_history_csv(const std::string& path, const TwoArmResult& result) {
    const EvolutionRecord& a = result.arm1;
    const EvolutionRecord& b = result.arm2;
    const std::size_t n = a.times.size();
    if (b.times.size() != n || result.relative_phases.size() != n)
        throw Error("write_history_csv: record lengths disagree");
    auto out = open_output(path);
    out << "t,norm1,norm2,mean_p1,mean_p2,phase1,phase2,dphi_unwrapped\n";
    for (std::size_t i = 0; i < n; ++i) {
        out << format_full(a.times[i]) << ',' << format_full(a.norms[i]) << ','
            << format_full(b.norms[i]) << ','
            << format_full(a.mean_momenta[i]) << ','
            << format_full(b.mean_momenta[i]) << ','
            << format_full(a.global_phases[i]) << ','
            << format_full(b.global_phases[i]) << ','
            << format_full(result.relative_phases[i]) << '\n';
    }
    if (!out)
        throw Error("write_history_csv: write to '" + path + "' failed");
}

void write_fringes_csv(const std::string& path, const FringePattern& fringes) {
    if (fringes.screen_positions.size() != fringes.intensities.size())
        throw Error("write_fringes_csv: column lengths disagree");
    auto out = open_output(path);
    out << "screen_position,intensity\n";
    for (std::size_t i = 0; i < fringes.screen_positions.size(); ++i)
        out << format_full(fringes.screen_positions[i]) << ','
            << format_full(fringes.intensities[i]) << '\n';
    if (!out)
        throw Error("write_fringes_csv: write to '" + path + "' failed");
}

void write_sweep_csv(const std::string& path,
                     const std::vector<SweepRow>& rows) {
    auto out = open_output(path);
    out << "value,numeric_phase,analytic_phase,residual\n";
    for (const auto& row : rows)
        out << format_full(row.value) << ',' << format_full(row.numeric_phase)
            << ',' << format_full(row.analytic_phase) << ','
            << format_full(row.residual) << '\n';
    if (!out)
        throw Error("write_sweep_csv: write to '" + path + "' failed");
}

} // namespace abgrav
