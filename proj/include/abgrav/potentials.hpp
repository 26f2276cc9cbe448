#pragma once

// Builders translating each interferometer scenario into a potential
// schedule and Hamiltonian coefficients for the solver.

#include "abgrav/constants.hpp"
#include "abgrav/metric.hpp"
#include "abgrav/potential_program.hpp"

namespace abgrav {

// Coefficients of H = rest_energy + kinetic_scale * p^2/(2m) + U(t).
// The metric-dependent builders fold the -mM/R effective potential into
// rest_energy; tests check the total operator, not the decomposition.
struct HamiltonianSpec {
    double kinetic_scale = 1.0; // in (0, 1]
    double rest_energy = 0.0;   // >= 0
    PotentialProgram potential;

    void validate() const {
        if (!(kinetic_scale > 0.0) || kinetic_scale > 1.0)
            throw DomainError("HamiltonianSpec: kinetic_scale must be in (0, 1]");
        if (!(rest_energy >= 0.0))
            throw DomainError("HamiltonianSpec: rest_energy must be >= 0");
    }

    static HamiltonianSpec free_particle(double rest = 0.0) {
        HamiltonianSpec spec;
        spec.rest_energy = rest;
        return spec;
    }

    static HamiltonianSpec with_potential(PotentialProgram program,
                                          double rest = 0.0) {
        HamiltonianSpec spec;
        spec.rest_energy = rest;
        spec.potential = std::move(program);
        return spec;
    }
};

namespace potentials {

// zero(lead) -> C1 ramp up -> plateau(amplitude) -> C1 ramp down ->
// zero(tail). The potential is nonzero only while the packet is meant to
// be well inside the tube; the caller is responsible for lead/tail long
// enough that the containment check passes.
PotentialProgram tube_pulse_program(double amplitude, double ramp,
                                    double plateau, double lead, double tail);

// zero(lead) -> constant(level, dwell) -> zero(tail). The ascent/descent
// legs, identical in both arms, are represented by the zero-potential
// lead/tail since identical contributions cancel.
PotentialProgram elevator_program(double level, double dwell, double lead,
                                  double tail);

// Constant level -m*M/R during the dwell, zero elsewhere.
PotentialProgram newtonian_program(double R, double M, double dwell,
                                   const Constants& constants, double lead,
                                   double tail);

// Eq.-of-motion coefficients for a constant-altitude segment of the
// semi-covariant wave equation. With the correction kept the total
// operator is (1 - M/(R c^2)) (m c^2 + p^2/2m); without it the kinetic
// term stays unscaled (low-velocity limit).
HamiltonianSpec semi_covariant_spec(const MetricParams& metric,
                                    const Constants& constants,
                                    bool include_correction);

// Coordinate-time coefficients of the proper-time evolution:
// sqrt(-g_tt) (m c^2 + p^2/2m) with the weak-field factor. Identical
// field-by-field to semi_covariant_spec with the correction kept.
HamiltonianSpec proper_time_spec(const MetricParams& metric,
                                 const Constants& constants);

} // namespace potentials
} // namespace abgrav
