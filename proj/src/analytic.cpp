#include "abgrav/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "abgrav/errors.hpp"

namespace abgrav::analytic {

Trajectory::Trajectory(std::vector<Sample> samples)
    : samples_(std::move(samples)) {
    if (samples_.size() < 2)
        throw DomainError("Trajectory: need at least two samples");
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        if (!std::isfinite(samples_[i].t) || !std::isfinite(samples_[i].R))
            throw DomainError("Trajectory: samples must be finite");
        if (!(samples_[i].R > 0.0))
            throw DomainError("Trajectory: R must be positive");
        if (i > 0 && !(samples_[i].t > samples_[i - 1].t))
            throw DomainError("Trajectory: t must be strictly increasing");
    }
}

double Trajectory::integral_inverse_radius() const {
    double sum = 0.0;
    for (std::size_t i = 1; i < samples_.size(); ++i) {
        const double dt = samples_[i].t - samples_[i - 1].t;
        sum += 0.5 * dt * (1.0 / samples_[i - 1].R + 1.0 / samples_[i].R);
    }
    return sum;
}

std::pair<Trajectory, Trajectory> Trajectory::split(double t) const {
    if (!(t > t_start()) || !(t < t_end()))
        throw DomainError("Trajectory: split point outside interior");
    std::vector<Sample> head;
    std::vector<Sample> tail;
    for (const auto& s : samples_) {
        if (s.t < t)
            head.push_back(s);
        else if (s.t > t)
            tail.push_back(s);
        else {
            head.push_back(s);
            tail.push_back(s);
        }
    }
    const bool have_exact = !head.empty() && head.back().t == t;
    if (!have_exact) {
        // Interpolate R at the split time and emit it on both sides.
        auto it = std::lower_bound(
            samples_.begin(), samples_.end(), t,
            [](const Sample& s, double value) { return s.t < value; });
        const Sample& hi = *it;
        const Sample& lo = *(it - 1);
        const double w = (t - lo.t) / (hi.t - lo.t);
        const Sample mid{t, lo.R + w * (hi.R - lo.R)};
        head.push_back(mid);
        tail.insert(tail.begin(), mid);
    }
    return {Trajectory(std::move(head)), Trajectory(std::move(tail))};
}

Trajectory elevator_trajectory(double R_base, double R_top, double leg_time,
                               double dwell, bool dwell_at_top,
                               LegProfile profile,
                               std::size_t samples_per_leg) {
    if (!(R_base > 0.0) || !(R_top > 0.0))
        throw DomainError("elevator_trajectory: radii must be positive");
    if (!(leg_time > 0.0) || !(dwell > 0.0))
        throw DomainError("elevator_trajectory: times must be positive");
    if (samples_per_leg < 2)
        throw DomainError("elevator_trajectory: need >= 2 samples per leg");

    auto shape = [profile](double s) {
        switch (profile) {
        case LegProfile::Linear:
            return s;
        case LegProfile::Cosine:
            return 0.5 * (1.0 - std::cos(M_PI * s));
        case LegProfile::Smoothstep:
            return s * s * (3.0 - 2.0 * s);
        }
        return s;
    };

    // Both variants are sampled on the same time comb so the ascent and
    // descent legs of the two arms line up sample-for-sample.
    std::vector<Trajectory::Sample> samples;
    const std::size_t n = samples_per_leg;
    auto add_leg = [&](double t0, double R_from, double R_to) {
        for (std::size_t i = 0; i <= n; ++i) {
            const double s = static_cast<double>(i) / static_cast<double>(n);
            const double t = t0 + s * leg_time;
            if (!samples.empty() && t <= samples.back().t)
                continue;
            samples.push_back({t, R_from + shape(s) * (R_to - R_from)});
        }
    };
    auto add_hold = [&](double t0, double R, double duration) {
        for (std::size_t i = 0; i <= n; ++i) {
            const double s = static_cast<double>(i) / static_cast<double>(n);
            const double t = t0 + s * duration;
            if (!samples.empty() && t <= samples.back().t)
                continue;
            samples.push_back({t, R});
        }
    };

    if (dwell_at_top) {
        add_leg(0.0, R_base, R_top);
        add_hold(leg_time, R_top, dwell);
        add_leg(leg_time + dwell, R_top, R_base);
    } else {
        add_leg(0.0, R_base, R_top);
        add_leg(leg_time, R_top, R_base);
        add_hold(2.0 * leg_time, R_base, dwell);
    }
    return Trajectory(std::move(samples));
}

double electric_ab_phase(const PotentialProgram& program1,
                         const PotentialProgram& program2,
                         const Constants& constants) {
    constants.validate();
    if (std::abs(program1.total_duration() - program2.total_duration()) >
        1e-12 * std::max(1.0, program1.total_duration()))
        throw DomainError("electric_ab_phase: program durations differ");
    return (program1.integral() - program2.integral()) / constants.hbar;
}

double electric_ab_phase(const PotentialProgram& program1,
                         const PotentialProgram& program2, double duration,
                         const Constants& constants) {
    constants.validate();
    if (!(duration >= 0.0))
        throw DomainError("electric_ab_phase: duration must be >= 0");
    auto window = [&](const PotentialProgram& p) {
        if (p.empty())
            return 0.0;
        const double hi = std::min(duration, p.total_duration());
        return p.integral(0.0, hi);
    };
    return (window(program1) - window(program2)) / constants.hbar;
}

double elevator_phase(double V1, double V2, double dwell,
                      const Constants& constants) {
    constants.validate();
    if (!(dwell >= 0.0))
        throw DomainError("elevator_phase: dwell must be >= 0");
    return constants.charge * (V1 - V2) * dwell / constants.hbar;
}

double newtonian_phase(double R1, double R2, double dwell, double M,
                       const Constants& constants) {
    constants.validate();
    if (!(R1 > 0.0) || !(R2 > 0.0))
        throw DomainError("newtonian_phase: radii must be positive");
    if (!(dwell >= 0.0))
        throw DomainError("newtonian_phase: dwell must be >= 0");
    if (!(M >= 0.0))
        throw DomainError("newtonian_phase: M must be >= 0");
    return constants.mass * M / constants.hbar * (1.0 / R2 - 1.0 / R1) * dwell;
}

double weakfield_loop_phase(const Trajectory& traj1, const Trajectory& traj2,
                            double M, const Constants& constants) {
    constants.validate();
    if (!(M >= 0.0))
        throw DomainError("weakfield_loop_phase: M must be >= 0");
    const double span1 = traj1.t_end() - traj1.t_start();
    if (std::abs(traj1.t_start() - traj2.t_start()) > 1e-12 * std::max(1.0, span1) ||
        std::abs(traj1.t_end() - traj2.t_end()) > 1e-12 * std::max(1.0, span1))
        throw DomainError("weakfield_loop_phase: trajectories span different intervals");
    // Each arm accumulates S_i = -m M int dt/R_i; dphi = (S1 - S2)/hbar.
    return -constants.mass * M / constants.hbar *
           (traj1.integral_inverse_radius() - traj2.integral_inverse_radius());
}

double redshift_factor(const MetricParams& metric, const Constants& constants,
                       RedshiftMode mode) {
    constants.validate();
    metric.validate();
    const double chi = metric.compactness(constants);
    if (mode == RedshiftMode::WeakField)
        return 1.0 - chi;
    const double arg = 1.0 - 2.0 * chi;
    if (!(arg > 0.0))
        throw DomainError("redshift_factor: inside the horizon (2M/(R c^2) >= 1)");
    return std::sqrt(arg);
}

double proper_time_route_phase(double R1, double R2, double dwell, double M,
                               double momentum, const Constants& constants,
                               RedshiftMode mode) {
    constants.validate();
    if (!(dwell >= 0.0))
        throw DomainError("proper_time_route_phase: dwell must be >= 0");
    if (mode == RedshiftMode::WeakField) {
        // f1 - f2 = (M/c^2)(1/R2 - 1/R1) in closed form; factoring it keeps
        // the p = 0 case exactly equal to the Newtonian phase instead of
        // routing it through a near-1 cancellation.
        const double kinetic_ratio =
            momentum * momentum /
            (2.0 * constants.mass * constants.rest_energy());
        return (1.0 + kinetic_ratio) *
               newtonian_phase(R1, R2, dwell, M, constants);
    }
    const double f1 = redshift_factor({M, R1}, constants, mode);
    const double f2 = redshift_factor({M, R2}, constants, mode);
    const double energy = constants.rest_energy() +
                          momentum * momentum / (2.0 * constants.mass);
    // Arm i picks up exp(-i E f(R_i) dwell/hbar); dphi = arg<arm1|arm2>.
    return energy * (f1 - f2) * dwell / constants.hbar;
}

double semi_covariant_phase(double R1, double R2, double dwell, double M,
                            double p_sq_mean, const Constants& constants,
                            bool include_correction) {
    constants.validate();
    if (!(p_sq_mean >= 0.0))
        throw DomainError("semi_covariant_phase: p_sq_mean must be >= 0");
    const double base = newtonian_phase(R1, R2, dwell, M, constants);
    if (!include_correction)
        return base;
    const double c2 = constants.c * constants.c;
    const double correction = (M / c2) * (1.0 / R2 - 1.0 / R1) *
                              (p_sq_mean / (2.0 * constants.mass)) * dwell /
                              constants.hbar;
    return base + correction;
}

} // namespace abgrav::analytic
