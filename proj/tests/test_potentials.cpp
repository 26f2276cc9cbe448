// Schedule builders and Hamiltonian coefficient builders. Integrals are
// cross-checked by midpoint quadrature; coefficients against closed forms.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "abgrav/potentials.hpp"

using namespace abgrav;
using namespace abgrav::potentials;

namespace {

double quad(const PotentialProgram& p, std::size_t n = 400000) {
    if (p.empty())
        return 0.0;
    double sum = 0.0;
    const double h = p.total_duration() / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
        sum += p.value((static_cast<double>(i) + 0.5) * h);
    return sum * h;
}

} // namespace

TEST_CASE("tube pulse shape") {
    const PotentialProgram pulse =
        tube_pulse_program(1.0, 0.5, 0.5, 0.25, 0.25);
    CHECK(pulse.total_duration() == doctest::Approx(2.0));
    CHECK(pulse.is_continuous());
    CHECK(pulse.max_abs_level() == doctest::Approx(1.0));
    // Off during the lead and tail, full on during the plateau.
    CHECK(pulse.value(0.1) == doctest::Approx(0.0));
    CHECK(pulse.value(1.0) == doctest::Approx(1.0));
    CHECK(pulse.value(1.9) == doctest::Approx(0.0));
    // Ramp midpoints sit at half amplitude.
    CHECK(pulse.value(0.5) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(pulse.value(1.5) == doctest::Approx(0.5).epsilon(1e-14));
    // The symmetric ramps integrate to half a box each:
    // total = amplitude * (ramp + plateau) = 1.0 exactly.
    CHECK(pulse.integral() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(pulse.integral() == doctest::Approx(quad(pulse)).epsilon(1e-9));
}

TEST_CASE("tube pulse degenerate durations") {
    // No lead/tail is fine.
    const PotentialProgram bare = tube_pulse_program(2.0, 1.0, 0.5, 0.0, 0.0);
    CHECK(bare.total_duration() == doctest::Approx(2.5));
    CHECK(bare.integral() == doctest::Approx(2.0 * 1.5).epsilon(1e-14));

    // No plateau: back-to-back ramps.
    const PotentialProgram spike = tube_pulse_program(1.0, 0.5, 0.0, 0.1, 0.1);
    CHECK(spike.total_duration() == doctest::Approx(1.2));
    CHECK(spike.integral() == doctest::Approx(0.5).epsilon(1e-14));

    // Zero amplitude degenerates to a zero program.
    const PotentialProgram off = tube_pulse_program(0.0, 0.0, 0.0, 1.0, 1.0);
    CHECK(off.max_abs_level() == doctest::Approx(0.0));
    CHECK(off.integral() == doctest::Approx(0.0));

    CHECK_THROWS_AS(tube_pulse_program(1.0, 0.0, 0.5, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(tube_pulse_program(1.0, -0.5, 0.5, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(tube_pulse_program(1.0, 0.5, 0.5, -1.0, 0.0), DomainError);
}

TEST_CASE("elevator schedule") {
    const PotentialProgram lift = elevator_program(0.4, 5.0, 0.5, 0.5);
    CHECK(lift.total_duration() == doctest::Approx(6.0));
    CHECK(lift.value(0.25) == doctest::Approx(0.0));
    CHECK(lift.value(3.0) == doctest::Approx(0.4));
    CHECK(lift.value(5.75) == doctest::Approx(0.0));
    CHECK(lift.integral() == doctest::Approx(2.0).epsilon(1e-14));
    // Midpoint quadrature only localizes the two hard switches to one cell.
    CHECK(lift.integral() == doctest::Approx(quad(lift)).epsilon(1e-4));
    CHECK_FALSE(lift.is_continuous());  // hard switch on/off

    // Negative levels are allowed (attractive potentials).
    const PotentialProgram sink = elevator_program(-2.0, 1.0, 0.0, 0.0);
    CHECK(sink.integral() == doctest::Approx(-2.0));

    // Zero dwell degenerates to a zero program.
    const PotentialProgram none = elevator_program(0.4, 0.0, 0.5, 0.5);
    CHECK(none.integral() == doctest::Approx(0.0));
    CHECK(none.max_abs_level() == doctest::Approx(0.0));
    CHECK(elevator_program(0.4, 0.0, 0.0, 0.0).empty());

    CHECK_THROWS_AS(elevator_program(1.0, -1.0, 0.0, 0.0), DomainError);
}

TEST_CASE("newtonian dwell schedule") {
    const Constants constants;
    const PotentialProgram prog =
        newtonian_program(2.0, 1e-3, 10.0, constants, 0.5, 0.5);
    CHECK(prog.total_duration() == doctest::Approx(11.0));
    // Level is -m M / R.
    CHECK(prog.value(5.0) == doctest::Approx(-5e-4).epsilon(1e-15));
    CHECK(prog.integral() == doctest::Approx(-5e-3).epsilon(1e-14));

    Constants heavy;
    heavy.mass = 3.0;
    CHECK(newtonian_program(2.0, 1e-3, 10.0, heavy, 0.0, 0.0).value(1.0) ==
          doctest::Approx(-1.5e-3).epsilon(1e-15));

    CHECK_THROWS_AS(newtonian_program(0.0, 1e-3, 10.0, constants, 0.0, 0.0),
                    DomainError);
    CHECK_THROWS_AS(newtonian_program(1.0, -1.0, 10.0, constants, 0.0, 0.0),
                    DomainError);
}

TEST_CASE("semi-covariant coefficients") {
    Constants constants;
    constants.c = 10.0;
    const MetricParams metric{0.5, 2.0};
    const double chi = 0.5 / (2.0 * 100.0);  // 2.5e-3

    const HamiltonianSpec with = semi_covariant_spec(metric, constants, true);
    CHECK(with.kinetic_scale == doctest::Approx(1.0 - chi).epsilon(1e-15));
    CHECK(with.rest_energy ==
          doctest::Approx(100.0 * (1.0 - chi)).epsilon(1e-15));
    CHECK(with.potential.empty());
    // The folded rest term carries the dwell potential: m c^2 (1 - chi)
    // = m c^2 - m M / R.
    CHECK(with.rest_energy ==
          doctest::Approx(100.0 - 0.5 / 2.0).epsilon(1e-15));

    const HamiltonianSpec without =
        semi_covariant_spec(metric, constants, false);
    CHECK(without.kinetic_scale == doctest::Approx(1.0));
    CHECK(without.rest_energy == doctest::Approx(with.rest_energy));

    // The proper-time coefficients are the corrected semi-covariant ones,
    // field for field.
    const HamiltonianSpec tau = proper_time_spec(metric, constants);
    CHECK(tau.kinetic_scale == with.kinetic_scale);
    CHECK(tau.rest_energy == with.rest_energy);
    CHECK(tau.potential.empty());
}

TEST_CASE("weak-field guard on the metric builders") {
    Constants constants;
    constants.c = 1.0;
    const MetricParams strong{0.2, 1.0};  // chi = 0.2 >= 0.1
    CHECK_THROWS_AS(semi_covariant_spec(strong, constants, true), DomainError);
    CHECK_THROWS_AS(proper_time_spec(strong, constants), DomainError);
    const MetricParams weak{0.05, 1.0};
    CHECK_NOTHROW(semi_covariant_spec(weak, constants, true));
    CHECK_THROWS_AS(
        semi_covariant_spec(MetricParams{-1.0, 1.0}, constants, true),
        DomainError);
}

TEST_CASE("hamiltonian spec validation") {
    HamiltonianSpec spec;
    spec.kinetic_scale = 0.0;
    CHECK_THROWS_AS(spec.validate(), DomainError);
    spec.kinetic_scale = 1.5;
    CHECK_THROWS_AS(spec.validate(), DomainError);
    spec.kinetic_scale = 1.0;
    spec.rest_energy = -1.0;
    CHECK_THROWS_AS(spec.validate(), DomainError);
    spec.rest_energy = 2.0;
    CHECK_NOTHROW(spec.validate());

    const HamiltonianSpec free = HamiltonianSpec::free_particle(3.0);
    CHECK(free.rest_energy == doctest::Approx(3.0));
    CHECK(free.potential.empty());
    const HamiltonianSpec with =
        HamiltonianSpec::with_potential(elevator_program(1.0, 1.0, 0.0, 0.0),
                                        2.0);
    CHECK(with.rest_energy == doctest::Approx(2.0));
    CHECK(with.potential.total_duration() == doctest::Approx(1.0));
}
