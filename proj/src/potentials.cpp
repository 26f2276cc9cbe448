#include "abgrav/potentials.hpp"

#include <vector>

#include "abgrav/errors.hpp"

namespace abgrav::potentials {

PotentialProgram tube_pulse_program(double amplitude, double ramp,
                                    double plateau, double lead, double tail) {
    if (!(ramp >= 0.0) || !(plateau >= 0.0) || !(lead >= 0.0) ||
        !(tail >= 0.0))
        throw DomainError("tube_pulse_program: durations must be >= 0");
    if (amplitude != 0.0 && !(ramp > 0.0))
        throw DomainError(
            "tube_pulse_program: nonzero amplitude needs ramp > 0");
    std::vector<Segment> segs;
    if (lead > 0.0)
        segs.push_back(Segment::constant(0.0, lead));
    if (ramp > 0.0)
        segs.push_back(Segment::ramp(0.0, amplitude, ramp));
    if (plateau > 0.0)
        segs.push_back(Segment::constant(amplitude, plateau));
    if (ramp > 0.0)
        segs.push_back(Segment::ramp(amplitude, 0.0, ramp));
    if (tail > 0.0)
        segs.push_back(Segment::constant(0.0, tail));
    return PotentialProgram(std::move(segs));
}

PotentialProgram elevator_program(double level, double dwell, double lead,
                                  double tail) {
    if (!(dwell >= 0.0) || !(lead >= 0.0) || !(tail >= 0.0))
        throw DomainError("elevator_program: durations must be >= 0");
    std::vector<Segment> segs;
    if (lead > 0.0)
        segs.push_back(Segment::constant(0.0, lead));
    if (dwell > 0.0)
        segs.push_back(Segment::constant(level, dwell));
    if (tail > 0.0)
        segs.push_back(Segment::constant(0.0, tail));
    return PotentialProgram(std::move(segs));
}

PotentialProgram newtonian_program(double R, double M, double dwell,
                                   const Constants& constants, double lead,
                                   double tail) {
    constants.validate();
    if (!(R > 0.0))
        throw DomainError("newtonian_program: R must be positive");
    if (!(M >= 0.0))
        throw DomainError("newtonian_program: M must be >= 0");
    return elevator_program(-constants.mass * M / R, dwell, lead, tail);
}

HamiltonianSpec semi_covariant_spec(const MetricParams& metric,
                                    const Constants& constants,
                                    bool include_correction) {
    constants.validate();
    metric.validate();
    metric.require_weak_field(constants);
    const double chi = metric.compactness(constants);
    HamiltonianSpec spec;
    // Total operator: m c^2 + kappa p^2/2m - mM/R, with the -mM/R piece
    // folded into the rest term as m c^2 (1 - M/(R c^2)).
    spec.kinetic_scale = include_correction ? 1.0 - chi : 1.0;
    spec.rest_energy = constants.rest_energy() * (1.0 - chi);
    return spec;
}

HamiltonianSpec proper_time_spec(const MetricParams& metric,
                                 const Constants& constants) {
    return semi_covariant_spec(metric, constants, true);
}

} // namespace abgrav::potentials
