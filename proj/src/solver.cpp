#include "abgrav/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "abgrav/errors.hpp"
#include "abgrav/fft.hpp"

namespace abgrav {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Program queries clamped to the support: times outside it contribute a
// zero potential, so an evolution window may overrun the schedule by
// rounding slack without faulting.
double program_integral(const PotentialProgram& program, double t0, double t1) {
    if (program.empty())
        return 0.0;
    const double lo = std::clamp(t0, 0.0, program.total_duration());
    const double hi = std::clamp(t1, 0.0, program.total_duration());
    if (hi <= lo)
        return 0.0;
    return program.integral(lo, hi);
}

double program_value(const PotentialProgram& program, double t) {
    if (program.empty())
        return 0.0;
    if (t < 0.0 || t > program.total_duration())
        return 0.0;
    return program.value(t);
}

} // namespace

double wrap_to_pi(double angle) {
    double r = std::remainder(angle, 2.0 * kPi);
    if (r <= -kPi)
        r += 2.0 * kPi;
    return r;
}

Observables observables(const Wavefunction& psi, const Constants& constants) {
    constants.validate();
    const Grid1D& grid = psi.grid();
    const auto& amps = psi.amplitudes();
    const std::size_t n = grid.size();
    const double dx = grid.spacing();

    double norm_sq_x = 0.0;
    double mean_x = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = std::norm(amps[i]) * dx;
        norm_sq_x += w;
        mean_x += grid.x(i) * w;
    }
    if (!(norm_sq_x > 0.0))
        throw DomainError("observables: zero-norm state");
    mean_x /= norm_sq_x;

    std::vector<Complex> spectrum = amps;
    Fft fft(n);
    fft.forward(spectrum);
    const double measure = dx / static_cast<double>(n);
    double norm_sq_p = 0.0;
    double mean_p = 0.0;
    double mean_p_sq = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double w = std::norm(spectrum[j]) * measure;
        const double p = constants.hbar * grid.wavenumber(j);
        norm_sq_p += w;
        mean_p += p * w;
        mean_p_sq += p * p * w;
    }
    mean_p /= norm_sq_p;
    mean_p_sq /= norm_sq_p;

    if (std::abs(std::sqrt(norm_sq_x) - std::sqrt(norm_sq_p)) >
        1e-12 * std::max(1.0, std::sqrt(norm_sq_x)))
        throw Error("observables: Parseval norm mismatch");

    Observables obs;
    obs.norm = std::sqrt(norm_sq_x);
    obs.mean_x = mean_x;
    obs.mean_p = mean_p;
    obs.mean_p_sq = mean_p_sq;
    obs.energy = mean_p_sq / (2.0 * constants.mass);
    return obs;
}

double global_phase(const Wavefunction& psi_ref, const Wavefunction& psi) {
    const Complex overlap = inner_product(psi_ref, psi);
    if (std::abs(overlap) <= 0.1)
        throw DecoherenceError(
            "global_phase: |<ref|psi>| <= 0.1, phase is unreliable");
    return std::arg(overlap);
}

double containment_fraction(const Wavefunction& psi, double lo, double hi) {
    if (!(hi > lo))
        throw DomainError("containment_fraction: need hi > lo");
    const Grid1D& grid = psi.grid();
    const auto& amps = psi.amplitudes();
    const double dx = grid.spacing();
    double inside = 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double w = std::norm(amps[i]) * dx;
        total += w;
        const double x = grid.x(i);
        if (x >= lo && x <= hi)
            inside += w;
    }
    if (!(total > 0.0))
        throw DomainError("containment_fraction: zero-norm state");
    return std::clamp(inside / total, 0.0, 1.0);
}

struct SplitStepPropagator::Impl {
    Grid1D grid;
    std::vector<Complex> amps;
    std::vector<Complex> initial;
    HamiltonianSpec spec;
    double step;
    Constants constants;
    EvolveOptions options;
    Fft fft;
    std::vector<Complex> kinetic_factor;
    std::size_t steps = 0;
    mutable std::optional<Wavefunction> cache;

    Impl(const Wavefunction& psi, HamiltonianSpec spec_in, double step_in,
         const Constants& constants_in, EvolveOptions options_in)
        : grid(psi.grid()),
          amps(psi.amplitudes()),
          initial(psi.amplitudes()),
          spec(std::move(spec_in)),
          step(step_in),
          constants(constants_in),
          options(options_in),
          fft(grid.size()) {
        constants.validate();
        spec.validate();
        if (!(step > 0.0) || !std::isfinite(step))
            throw DomainError("SplitStepPropagator: step must be positive and finite");
        if (!(options.time_scale > 0.0) || !std::isfinite(options.time_scale))
            throw DomainError("SplitStepPropagator: time_scale must be positive");
        if (!std::isfinite(options.frame_shift))
            throw DomainError("SplitStepPropagator: frame_shift must be finite");

        const double ts = options.time_scale;
        const double hbar = constants.hbar;
        // Scalar phase per step must stay well inside a branch cut.
        const double scalar_rate =
            ts * spec.potential.max_abs_level() +
            std::abs(ts * spec.rest_energy - options.frame_shift);
        if (scalar_rate * step / hbar >= kPi / 4.0)
            throw StepSizeError(
                "SplitStepPropagator: potential phase per step exceeds pi/4; "
                "reduce the step");
        // Kinetic phase per step at the Nyquist wavenumber below pi.
        const double dx = grid.spacing();
        const double k_max = kPi / dx;
        const double kinetic_rate =
            ts * spec.kinetic_scale * hbar * k_max * k_max /
            (2.0 * constants.mass);
        if (kinetic_rate * step >= kPi)
            throw StepSizeError(
                "SplitStepPropagator: kinetic phase per step at Nyquist "
                "exceeds pi; reduce the step or coarsen the grid");

        kinetic_factor.resize(grid.size());
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double k = grid.wavenumber(j);
            const double phase = ts * spec.kinetic_scale * hbar * k * k * step /
                                 (2.0 * constants.mass);
            kinetic_factor[j] = std::polar(1.0, -phase);
        }
    }

    // Scalar kick phase for the half-interval [a, b] of coordinate time.
    double kick_phase(double a, double b) const {
        const double dt = b - a;
        double action = 0.0;
        if (options.kick_rule == KickRule::ExactIntegral)
            action = program_integral(spec.potential, a, b);
        else
            action = program_value(spec.potential, 0.5 * (a + b)) * dt;
        action += spec.rest_energy * dt;
        return (options.time_scale * action - options.frame_shift * dt) /
               constants.hbar;
    }

    void apply_scalar(double phase) {
        const Complex factor = std::polar(1.0, -phase);
        for (auto& a : amps)
            a *= factor;
    }

    void advance_one() {
        const double t0 = static_cast<double>(steps) * step;
        const double tm = t0 + 0.5 * step;
        const double t1 = t0 + step;
        apply_scalar(kick_phase(t0, tm));
        fft.forward(amps.data());
        for (std::size_t j = 0; j < amps.size(); ++j)
            amps[j] *= kinetic_factor[j];
        fft.backward(amps.data());
        apply_scalar(kick_phase(tm, t1));
        ++steps;
        cache.reset();
    }
};

SplitStepPropagator::SplitStepPropagator(const Wavefunction& psi,
                                         HamiltonianSpec spec, double step,
                                         const Constants& constants,
                                         EvolveOptions options)
    : impl_(std::make_unique<Impl>(psi, std::move(spec), step, constants,
                                   options)) {}

SplitStepPropagator::~SplitStepPropagator() = default;

void SplitStepPropagator::advance() { impl_->advance_one(); }

std::size_t SplitStepPropagator::steps_taken() const { return impl_->steps; }

double SplitStepPropagator::time() const {
    return static_cast<double>(impl_->steps) * impl_->step;
}

const Wavefunction& SplitStepPropagator::state() const {
    if (!impl_->cache)
        impl_->cache.emplace(impl_->grid, impl_->amps);
    return *impl_->cache;
}

Observables SplitStepPropagator::observables() const {
    return abgrav::observables(state(), impl_->constants);
}

double SplitStepPropagator::phase_vs_initial() const {
    const Grid1D& grid = impl_->grid;
    Complex overlap = 0.0;
    for (std::size_t i = 0; i < impl_->amps.size(); ++i)
        overlap += std::conj(impl_->initial[i]) * impl_->amps[i];
    overlap *= grid.spacing();
    if (std::abs(overlap) <= 0.1)
        throw DecoherenceError(
            "phase_vs_initial: |<psi(0)|psi>| <= 0.1, phase is unreliable");
    return std::arg(overlap);
}

std::pair<Wavefunction, EvolutionRecord>
split_step_evolve(const Wavefunction& psi, const HamiltonianSpec& spec,
                  double step, std::size_t n_steps, std::size_t record_stride,
                  const Constants& constants, EvolveOptions options) {
    if (record_stride == 0)
        throw DomainError("split_step_evolve: record_stride must be positive");
    if (n_steps % record_stride != 0)
        throw DomainError("split_step_evolve: record_stride must divide n_steps");

    SplitStepPropagator prop(psi, spec, step, constants, options);

    // Pre-run estimate of the phase advance per recorded sample; the
    // unwrap below can only track increments below pi.
    {
        const Observables obs0 = observables(psi, constants);
        const double ts = options.time_scale;
        const double rate =
            (std::abs(ts * spec.rest_energy - options.frame_shift) +
             ts * spec.kinetic_scale * obs0.mean_p_sq / (2.0 * constants.mass) +
             ts * spec.potential.max_abs_level()) /
            constants.hbar;
        if (rate * step * static_cast<double>(record_stride) >= kPi)
            throw SamplingError(
                "split_step_evolve: estimated phase advance per sample "
                "reaches pi; reduce record_stride or step");
    }

    EvolutionRecord record;
    const std::size_t n_samples = n_steps / record_stride + 1;
    record.times.reserve(n_samples);
    record.norms.reserve(n_samples);
    record.mean_positions.reserve(n_samples);
    record.mean_momenta.reserve(n_samples);
    record.mean_sq_momenta.reserve(n_samples);
    record.global_phases.reserve(n_samples);

    double prev_wrapped = 0.0;
    double unwrapped = 0.0;
    auto record_sample = [&](bool first) {
        const Observables obs = prop.observables();
        const double wrapped = first ? 0.0 : prop.phase_vs_initial();
        if (!first) {
            const double inc = wrap_to_pi(wrapped - prev_wrapped);
            if (std::abs(inc) >= kPi - 1e-6)
                throw SamplingError(
                    "split_step_evolve: phase increment between samples "
                    "reached pi; reduce record_stride or step");
            unwrapped += inc;
        }
        prev_wrapped = wrapped;
        record.times.push_back(prop.time());
        record.norms.push_back(obs.norm);
        record.mean_positions.push_back(obs.mean_x);
        record.mean_momenta.push_back(obs.mean_p);
        record.mean_sq_momenta.push_back(obs.mean_p_sq);
        record.global_phases.push_back(unwrapped);
    };

    record_sample(true);
    for (std::size_t s = 0; s < n_steps; ++s) {
        prop.advance();
        if ((s + 1) % record_stride == 0)
            record_sample(false);
    }
    return {prop.state(), std::move(record)};
}

} // namespace abgrav
