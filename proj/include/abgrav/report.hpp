#pragma once

// Run reports and data emission. CSV files use a header row, comma
// delimiter, newline termination, and full round-trip precision (17
// significant digits) so downstream comparisons are exact.

#include <optional>
#include <string>
#include <vector>

#include "abgrav/interferometer.hpp"
#include "abgrav/scenario.hpp"

namespace abgrav {

struct ConvergencePair {
    double step = 0.0;
    double residual_at_step = 0.0;
    double residual_at_half_step = 0.0;
    double ratio = 0.0;
};

struct RunReport {
    std::string scenario_echo; // resolved configuration text
    PhaseComparison comparison;
    double timing_seconds = 0.0;
    std::optional<ConvergencePair> convergence;

    std::string to_json() const;
};

// 17-significant-digit, locale-independent formatting.
std::string format_full(double value);

void write_history_csv(const std::string& path, const TwoArmResult& result);
void write_fringes_csv(const std::string& path, const FringePattern& fringes);

struct SweepRow {
    double value = 0.0;
    double numeric_phase = 0.0;
    double analytic_phase = 0.0;
    double residual = 0.0;
};

void write_sweep_csv(const std::string& path,
                     const std::vector<SweepRow>& rows);

} // namespace abgrav
