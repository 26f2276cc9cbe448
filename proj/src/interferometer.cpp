#include "abgrav/interferometer.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "abgrav/analytic.hpp"
#include "abgrav/errors.hpp"
#include "abgrav/potentials.hpp"

namespace abgrav {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// One homogeneous-in-time slice of the experiment: both arms' Hamiltonian
// coefficients and evolution-parameter scales, for n_steps coordinate steps.
struct Stage {
    HamiltonianSpec spec1;
    HamiltonianSpec spec2;
    double ts1 = 1.0;
    double ts2 = 1.0;
    std::size_t n_steps = 0;
};

std::size_t stage_steps(double duration, double step) {
    if (duration <= 0.0)
        return 0;
    const auto n = static_cast<std::size_t>(std::llround(duration / step));
    if (n == 0 || std::abs(static_cast<double>(n) * step - duration) >
                      1e-9 * duration)
        throw ScenarioError(
            "run_two_arm: stage duration must be an integer number of steps");
    return n;
}

double clamped_value(const PotentialProgram& program, double t) {
    if (program.empty())
        return 0.0;
    if (t < 0.0 || t > program.total_duration())
        return 0.0;
    return program.value(t);
}

std::vector<Stage> build_stages(const Scenario& sc, double* frame_out) {
    std::vector<Stage> stages;
    double frame = 0.0;
    switch (sc.route) {
    case Route::FlatElectric: {
        Stage stage;
        stage.spec1 = HamiltonianSpec::with_potential(sc.arm1_program);
        stage.spec2 = HamiltonianSpec::with_potential(sc.arm2_program);
        stage.n_steps = sc.n_steps;
        stages.push_back(std::move(stage));
        break;
    }
    case Route::Newtonian: {
        Stage stage;
        stage.spec1 = HamiltonianSpec::with_potential(potentials::newtonian_program(
            sc.metric1->R, sc.metric1->M, sc.dwell, sc.constants, sc.lead,
            sc.tail));
        stage.spec2 = HamiltonianSpec::with_potential(potentials::newtonian_program(
            sc.metric2->R, sc.metric2->M, sc.dwell, sc.constants, sc.lead,
            sc.tail));
        stage.n_steps = sc.n_steps;
        stages.push_back(std::move(stage));
        break;
    }
    case Route::SemiCovariant:
    case Route::ProperTime: {
        const double rest = sc.constants.rest_energy();
        frame = sc.subtract_common_rest ? rest : 0.0;
        const std::size_t n_lead = stage_steps(sc.lead, sc.step);
        const std::size_t n_dwell = stage_steps(sc.dwell, sc.step);
        const std::size_t n_tail = stage_steps(sc.tail, sc.step);
        if (n_lead + n_dwell + n_tail != sc.n_steps)
            throw ScenarioError(
                "run_two_arm: n_steps does not match lead + dwell + tail");
        if (n_lead > 0) {
            Stage stage;
            stage.spec1 = HamiltonianSpec::free_particle(rest);
            stage.spec2 = HamiltonianSpec::free_particle(rest);
            stage.n_steps = n_lead;
            stages.push_back(std::move(stage));
        }
        Stage dwell;
        if (sc.route == Route::SemiCovariant) {
            dwell.spec1 = potentials::semi_covariant_spec(
                *sc.metric1, sc.constants, sc.include_correction);
            dwell.spec2 = potentials::semi_covariant_spec(
                *sc.metric2, sc.constants, sc.include_correction);
        } else {
            dwell.spec1 = HamiltonianSpec::free_particle(rest);
            dwell.spec2 = HamiltonianSpec::free_particle(rest);
            dwell.ts1 = analytic::redshift_factor(*sc.metric1, sc.constants,
                                                  RedshiftMode::WeakField);
            dwell.ts2 = analytic::redshift_factor(*sc.metric2, sc.constants,
                                                  RedshiftMode::WeakField);
        }
        dwell.n_steps = n_dwell;
        stages.push_back(std::move(dwell));
        if (n_tail > 0) {
            Stage stage;
            stage.spec1 = HamiltonianSpec::free_particle(rest);
            stage.spec2 = HamiltonianSpec::free_particle(rest);
            stage.n_steps = n_tail;
            stages.push_back(std::move(stage));
        }
        break;
    }
    }
    *frame_out = frame;
    return stages;
}

// The unwrap in the sampling loop can only follow increments below pi.
void check_sampling(const Scenario& sc, const std::vector<Stage>& stages,
                    double frame, double p_sq_mean) {
    auto arm_rate = [&](const HamiltonianSpec& spec, double ts) {
        return (std::abs(ts * spec.rest_energy - frame) +
                ts * spec.kinetic_scale * p_sq_mean /
                    (2.0 * sc.constants.mass) +
                ts * spec.potential.max_abs_level()) /
               sc.constants.hbar;
    };
    double max_rate = 0.0;
    for (const auto& stage : stages) {
        max_rate = std::max(max_rate, arm_rate(stage.spec1, stage.ts1));
        max_rate = std::max(max_rate, arm_rate(stage.spec2, stage.ts2));
    }
    if (max_rate * sc.step * static_cast<double>(sc.record_stride) >= kPi)
        throw SamplingError(
            "run_two_arm: estimated phase advance per sample reaches pi; "
            "reduce record_stride or step");
}

double analytic_prediction(const Scenario& sc, const Observables& obs0) {
    switch (sc.route) {
    case Route::FlatElectric:
        return analytic::electric_ab_phase(sc.arm1_program, sc.arm2_program,
                                           sc.duration(), sc.constants);
    case Route::Newtonian:
        return analytic::newtonian_phase(sc.metric1->R, sc.metric2->R,
                                         sc.dwell, sc.metric1->M,
                                         sc.constants);
    case Route::SemiCovariant:
        return analytic::semi_covariant_phase(
            sc.metric1->R, sc.metric2->R, sc.dwell, sc.metric1->M,
            obs0.mean_p_sq, sc.constants, sc.include_correction);
    case Route::ProperTime:
        return analytic::proper_time_route_phase(
            sc.metric1->R, sc.metric2->R, sc.dwell, sc.metric1->M,
            std::sqrt(obs0.mean_p_sq), sc.constants, RedshiftMode::WeakField);
    }
    throw ScenarioError("run_two_arm: unknown route");
}

// Tracks one unwrapped phase series from wrapped samples.
class Unwrapper {
public:
    double feed(double wrapped, bool first) {
        if (first) {
            value_ = wrapped;
        } else {
            const double inc = wrap_to_pi(wrapped - prev_);
            if (std::abs(inc) >= kPi - 1e-6)
                throw SamplingError(
                    "run_two_arm: phase increment between samples reached "
                    "pi; reduce record_stride or step");
            value_ += inc;
        }
        prev_ = wrapped;
        return value_;
    }

private:
    double prev_ = 0.0;
    double value_ = 0.0;
};

double overlap_phase(const Wavefunction& a, const Wavefunction& b,
                     const char* what) {
    const Complex overlap = inner_product(a, b);
    if (std::abs(overlap) <= 0.1)
        throw DecoherenceError(std::string(what) +
                               ": |overlap| <= 0.1, phase is unreliable");
    return std::arg(overlap);
}

} // namespace

TwoArmResult run_two_arm(const Scenario& scenario) {
    scenario.validate();
    const Constants& constants = scenario.constants;
    Grid1D grid(scenario.grid_n, scenario.grid_length);
    Wavefunction psi0 =
        make_gaussian_packet(grid, scenario.packet.center,
                             scenario.packet.width, scenario.packet.momentum,
                             constants);
    const Observables obs0 = observables(psi0, constants);

    double frame = 0.0;
    const std::vector<Stage> stages = build_stages(scenario, &frame);
    check_sampling(scenario, stages, frame, obs0.mean_p_sq);

    EvolutionRecord rec1;
    EvolutionRecord rec2;
    std::vector<double> relative_phases;
    Unwrapper unwrap_rel;
    Unwrapper unwrap1;
    Unwrapper unwrap2;

    auto sample = [&](const Wavefunction& s1, const Wavefunction& s2, double t,
                      bool first) {
        const Observables o1 = observables(s1, constants);
        const Observables o2 = observables(s2, constants);
        const double rel = unwrap_rel.feed(
            overlap_phase(s1, s2, "run_two_arm inter-arm"), first);
        const double ph1 =
            unwrap1.feed(overlap_phase(psi0, s1, "run_two_arm arm 1"), first);
        const double ph2 =
            unwrap2.feed(overlap_phase(psi0, s2, "run_two_arm arm 2"), first);
        rec1.times.push_back(t);
        rec2.times.push_back(t);
        rec1.norms.push_back(o1.norm);
        rec2.norms.push_back(o2.norm);
        rec1.mean_positions.push_back(o1.mean_x);
        rec2.mean_positions.push_back(o2.mean_x);
        rec1.mean_momenta.push_back(o1.mean_p);
        rec2.mean_momenta.push_back(o2.mean_p);
        rec1.mean_sq_momenta.push_back(o1.mean_p_sq);
        rec2.mean_sq_momenta.push_back(o2.mean_p_sq);
        rec1.global_phases.push_back(ph1);
        rec2.global_phases.push_back(ph2);
        relative_phases.push_back(rel);
    };

    sample(psi0, psi0, 0.0, true);

    const double tube_lo = scenario.tube_center - scenario.tube_half_width;
    const double tube_hi = scenario.tube_center + scenario.tube_half_width;
    auto check_containment = [&](const Wavefunction& s, const char* arm) {
        if (containment_fraction(s, tube_lo, tube_hi) < 1.0 - 1e-8)
            throw ContainmentError(
                std::string("run_two_arm: ") + arm +
                " leaked out of the tube while its potential was active");
    };

    Wavefunction state1 = psi0;
    Wavefunction state2 = psi0;
    std::size_t global_step = 0;
    for (const auto& stage : stages) {
        EvolveOptions opt1{scenario.kick_rule, frame, stage.ts1};
        EvolveOptions opt2{scenario.kick_rule, frame, stage.ts2};
        SplitStepPropagator prop1(state1, stage.spec1, scenario.step,
                                  constants, opt1);
        SplitStepPropagator prop2(state2, stage.spec2, scenario.step,
                                  constants, opt2);
        for (std::size_t s = 0; s < stage.n_steps; ++s) {
            prop1.advance();
            prop2.advance();
            ++global_step;
            if (scenario.tube_half_width > 0.0) {
                const double t_mid =
                    (static_cast<double>(s) + 0.5) * scenario.step;
                if (clamped_value(stage.spec1.potential, t_mid) != 0.0)
                    check_containment(prop1.state(), "arm 1");
                if (clamped_value(stage.spec2.potential, t_mid) != 0.0)
                    check_containment(prop2.state(), "arm 2");
            }
            if (global_step % scenario.record_stride == 0)
                sample(prop1.state(), prop2.state(),
                       static_cast<double>(global_step) * scenario.step,
                       false);
        }
        state1 = prop1.state();
        state2 = prop2.state();
    }

    PhaseComparison comparison;
    comparison.numeric_phase = relative_phases.back();
    comparison.analytic_phase = analytic_prediction(scenario, obs0);
    for (const auto* rec : {&rec1, &rec2}) {
        for (std::size_t i = 0; i < rec->times.size(); ++i) {
            comparison.momentum_drift =
                std::max(comparison.momentum_drift,
                         std::abs(rec->mean_momenta[i] - rec->mean_momenta[0]));
            comparison.norm_drift = std::max(
                comparison.norm_drift, std::abs(rec->norms[i] - 1.0));
        }
    }

    return TwoArmResult{comparison, std::move(rec1), std::move(rec2),
                        std::move(relative_phases), std::move(state1),
                        std::move(state2)};
}

RouteComparison route_equivalence(const Scenario& scenario) {
    Scenario semi = scenario;
    semi.route = Route::SemiCovariant;
    semi.include_correction = true;
    Scenario tau = scenario;
    tau.route = Route::ProperTime;

    const TwoArmResult semi_result = run_two_arm(semi);
    const TwoArmResult tau_result = run_two_arm(tau);

    RouteComparison cmp;
    cmp.semi_covariant = semi_result.comparison;
    cmp.proper_time = tau_result.comparison;
    cmp.difference = tau_result.comparison.numeric_phase -
                     semi_result.comparison.numeric_phase;
    return cmp;
}

FringePattern fringe_synthesize(const Wavefunction& arm1,
                                const Wavefunction& arm2, double kick,
                                const Constants& constants) {
    constants.validate();
    if (!(arm1.grid() == arm2.grid()))
        throw DomainError("fringe_synthesize: arm grids differ");
    if (!(kick > 0.0) || !std::isfinite(kick))
        throw DomainError("fringe_synthesize: kick must be positive");
    const Grid1D& grid = arm1.grid();
    if (kick * grid.length() / constants.hbar < 4.0 * kPi)
        throw DomainError(
            "fringe_synthesize: kick too small to resolve two fringes");

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    FringePattern pattern;
    pattern.screen_positions.resize(grid.size());
    pattern.intensities.resize(grid.size());
    Complex demod = 0.0;
    const double dx = grid.spacing();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.x(i);
        const double phase = kick * x / constants.hbar;
        const Complex a = arm1.amplitudes()[i] * std::polar(1.0, phase);
        const Complex b = arm2.amplitudes()[i] * std::polar(1.0, -phase);
        const Complex mixed = (a + b) * inv_sqrt2;
        const double intensity = std::norm(mixed);
        pattern.screen_positions[i] = x;
        pattern.intensities[i] = intensity;
        demod += intensity * std::polar(1.0, -2.0 * phase) * dx;
    }
    if (std::abs(demod) <= 1e-12)
        throw DecoherenceError(
            "fringe_synthesize: no fringe contrast to read a shift from");
    pattern.extracted_shift = -std::arg(demod);
    return pattern;
}

} // namespace abgrav
