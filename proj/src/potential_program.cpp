#include "abgrav/potential_program.hpp"

#include <algorithm>
#include <cmath>

namespace abgrav {

Segment Segment::constant(double level, double duration) {
    if (!(duration > 0.0) || !std::isfinite(duration))
        throw DomainError("Segment: duration must be positive and finite");
    Segment s;
    s.profile = Profile::Constant;
    s.duration = duration;
    s.level_start = level;
    s.level_end = level;
    return s;
}

Segment Segment::ramp(double from, double to, double duration) {
    if (!(duration > 0.0) || !std::isfinite(duration))
        throw DomainError("Segment: duration must be positive and finite");
    Segment s;
    s.profile = Profile::RaisedCosineRamp;
    s.duration = duration;
    s.level_start = from;
    s.level_end = to;
    return s;
}

double Segment::value(double s) const {
    if (profile == Profile::Constant)
        return level_start;
    // Raised cosine: from + (to-from)*(1 - cos(pi s/d))/2. Slope vanishes
    // at both endpoints.
    const double u = 0.5 * (1.0 - std::cos(M_PI * s / duration));
    return level_start + (level_end - level_start) * u;
}

double Segment::integral_to(double s) const {
    if (profile == Profile::Constant)
        return level_start * s;
    const double d = duration;
    const double a = level_start;
    const double b = level_end;
    // int_0^s [a + (b-a)(1-cos(pi u/d))/2] du
    return a * s +
           0.5 * (b - a) * (s - d / M_PI * std::sin(M_PI * s / d));
}

PotentialProgram::PotentialProgram(std::vector<Segment> segments)
    : segments_(std::move(segments)) {
    starts_.reserve(segments_.size());
    double t = 0.0;
    for (const auto& seg : segments_) {
        if (!(seg.duration > 0.0) || !std::isfinite(seg.duration))
            throw DomainError(
                "PotentialProgram: segment durations must be positive and finite");
        starts_.push_back(t);
        t += seg.duration;
    }
    total_ = t;
    if (!std::isfinite(total_))
        throw DomainError("PotentialProgram: total duration must be finite");
}

double PotentialProgram::value(double t) const {
    if (segments_.empty())
        return 0.0;
    const double slack = 1e-12 * std::max(total_, 1.0);
    if (t < -slack || t > total_ + slack)
        throw DomainError("PotentialProgram: t outside the program support");
    t = std::clamp(t, 0.0, total_);
    // Find the segment containing t; boundaries resolve to the later one.
    auto it = std::upper_bound(starts_.begin(), starts_.end(), t);
    std::size_t idx = static_cast<std::size_t>(it - starts_.begin());
    idx = (idx == 0) ? 0 : idx - 1;
    return segments_[idx].value(t - starts_[idx]);
}

double PotentialProgram::integral() const {
    double sum = 0.0;
    for (const auto& seg : segments_)
        sum += seg.integral();
    return sum;
}

double PotentialProgram::integral(double t0, double t1) const {
    if (t1 < t0)
        throw DomainError("PotentialProgram: integral bounds reversed");
    if (segments_.empty())
        return 0.0;
    const double slack = 1e-12 * std::max(total_, 1.0);
    if (t0 < -slack || t1 > total_ + slack)
        throw DomainError("PotentialProgram: integral bounds outside support");
    t0 = std::clamp(t0, 0.0, total_);
    t1 = std::clamp(t1, 0.0, total_);
    double sum = 0.0;
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        const double seg_start = starts_[i];
        const double seg_end = seg_start + segments_[i].duration;
        const double lo = std::max(t0, seg_start);
        const double hi = std::min(t1, seg_end);
        if (hi <= lo)
            continue;
        sum += segments_[i].integral_to(hi - seg_start) -
               segments_[i].integral_to(lo - seg_start);
    }
    return sum;
}

double PotentialProgram::max_abs_level() const {
    double m = 0.0;
    for (const auto& seg : segments_) {
        m = std::max(m, std::abs(seg.level_start));
        m = std::max(m, std::abs(seg.level_end));
    }
    return m;
}

bool PotentialProgram::is_continuous(double tol) const {
    for (std::size_t i = 1; i < segments_.size(); ++i) {
        if (std::abs(segments_[i - 1].level_end - segments_[i].level_start) > tol)
            return false;
    }
    return true;
}

PotentialProgram PotentialProgram::offset_by(double offset) const {
    std::vector<Segment> shifted = segments_;
    for (auto& seg : shifted) {
        seg.level_start += offset;
        seg.level_end += offset;
    }
    return PotentialProgram(std::move(shifted));
}

PotentialProgram PotentialProgram::then(const PotentialProgram& next) const {
    std::vector<Segment> joined = segments_;
    joined.insert(joined.end(), next.segments_.begin(), next.segments_.end());
    return PotentialProgram(std::move(joined));
}

} // namespace abgrav
