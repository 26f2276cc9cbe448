#pragma once

// Orchestrates the full two-arm experiment: split, evolve both arms in
// lockstep, track the inter-arm phase history, recombine, compare against
// the analytic prediction for the scenario's route, and synthesize fringe
// patterns.

#include <vector>

#include "abgrav/scenario.hpp"
#include "abgrav/wavefunction.hpp"

namespace abgrav {

struct FringePattern {
    std::vector<double> screen_positions;
    std::vector<double> intensities;
    double extracted_shift = 0.0; // radians recovered from the fringes
};

struct TwoArmResult {
    PhaseComparison comparison;
    EvolutionRecord arm1;
    EvolutionRecord arm2;
    // Unwrapped inter-arm phase arg<psi1(t)|psi2(t)> at the record times.
    std::vector<double> relative_phases;
    Wavefunction arm1_final;
    Wavefunction arm2_final;
};

struct RouteComparison {
    PhaseComparison semi_covariant;
    PhaseComparison proper_time;
    double difference = 0.0; // proper_time - semi_covariant, numeric
};

// Run the scenario. Throws ContainmentError if, while either arm's
// potential is nonzero, less than 1 - 1e-8 of that arm's norm lies inside
// the tube region (when one is configured).
TwoArmResult run_two_arm(const Scenario& scenario);

// Run the same scenario under the semi-covariant and the proper-time
// routes and report both phases and their difference.
RouteComparison route_equivalence(const Scenario& scenario);

// Beam-recombiner model: apply momentum kicks +/-kick to the two arms,
// superpose with 1/sqrt(2) amplitudes, and read the phase shift back off
// the fringe profile. kick must resolve at least two fringes
// (kick * extent / hbar >= 4 pi).
FringePattern fringe_synthesize(const Wavefunction& arm1,
                                const Wavefunction& arm2, double kick,
                                const Constants& constants);

} // namespace abgrav
