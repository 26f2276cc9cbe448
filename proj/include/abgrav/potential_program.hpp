#pragma once

// Piecewise schedule for a spatially uniform, time-dependent potential
// U(t). Levels are energies. Two segment profiles exist: a constant level
// and a raised-cosine ramp between two levels (C1 at its endpoints).
// Every integral used by the solver and the analytic layer is closed-form;
// no quadrature error enters anywhere.

#include <cstddef>
#include <vector>

#include "abgrav/errors.hpp"

namespace abgrav {

struct Segment {
    enum class Profile { Constant, RaisedCosineRamp };

    Profile profile = Profile::Constant;
    double duration = 0.0;
    double level_start = 0.0; // Constant: the level. Ramp: start level.
    double level_end = 0.0;   // Ramp only.

    static Segment constant(double level, double duration);
    static Segment ramp(double from, double to, double duration);

    // Value at local time s in [0, duration].
    double value(double s) const;
    // Exact integral over [0, s].
    double integral_to(double s) const;
    double integral() const { return integral_to(duration); }
};

class PotentialProgram {
public:
    PotentialProgram() = default;
    explicit PotentialProgram(std::vector<Segment> segments);

    const std::vector<Segment>& segments() const { return segments_; }
    double total_duration() const { return total_; }
    bool empty() const { return segments_.empty(); }

    // U(t) for t in [0, total_duration]; DomainError outside.
    double value(double t) const;

    // Exact closed-form integral of U over [0, total_duration].
    double integral() const;
    // Exact integral over [t0, t1] (clamped check: both inside support).
    double integral(double t0, double t1) const;

    double max_abs_level() const;

    // True when consecutive segment levels match at the boundaries.
    bool is_continuous(double tol = 1e-12) const;

    // Same schedule with `offset` added to every level (gauge shift).
    PotentialProgram offset_by(double offset) const;

    // Concatenation.
    PotentialProgram then(const PotentialProgram& next) const;

private:
    std::vector<Segment> segments_;
    std::vector<double> starts_; // cumulative start time of each segment
    double total_ = 0.0;
};

} // namespace abgrav
