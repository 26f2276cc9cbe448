#pragma once

// Unitary split-step (Strang) spectral propagation of a Wavefunction under
// a HamiltonianSpec, with observable extraction and global-phase tracking.
//
// One step of size h: half potential kick, full kinetic spectral step,
// half potential kick. Because every potential here is spatially uniform,
// the kicks are scalar phases and the splitting itself is exact; the only
// discretization freedom is how the time integral of U is evaluated per
// half-kick (see KickRule).

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "abgrav/constants.hpp"
#include "abgrav/potentials.hpp"
#include "abgrav/wavefunction.hpp"

namespace abgrav {

// How the potential phase over a half-interval is evaluated.
//   ExactIntegral - closed-form segment integrals; makes the phase-factor
//                   law exact at any step size (the default).
//   Midpoint      - U sampled at the half-interval midpoint; the standard
//                   second-order rule, used by the convergence scenario.
enum class KickRule { ExactIntegral, Midpoint };

struct EvolveOptions {
    KickRule kick_rule = KickRule::ExactIntegral;
    // Constant energy subtracted from the propagator (rotating frame).
    // Identical in both arms of an interferometer, it cancels from every
    // relative phase.
    double frame_shift = 0.0;
    // Evolution-parameter scale: each coordinate step h advances the state
    // by time_scale*h (proper-time evolution uses the redshift factor).
    double time_scale = 1.0;
};

struct Observables {
    double norm = 0.0;
    double mean_x = 0.0;
    double mean_p = 0.0;
    double mean_p_sq = 0.0;
    double energy = 0.0; // free-particle expectation <p^2>/2m
};

struct EvolutionRecord {
    std::vector<double> times;
    std::vector<double> norms;
    std::vector<double> mean_positions;
    std::vector<double> mean_momenta;
    std::vector<double> mean_sq_momenta;
    // Unwrapped arg<psi(0)|psi(t)>.
    std::vector<double> global_phases;
};

// Stateful propagator; use split_step_evolve for the one-shot form.
class SplitStepPropagator {
public:
    SplitStepPropagator(const Wavefunction& psi, HamiltonianSpec spec,
                        double step, const Constants& constants,
                        EvolveOptions options = {});
    ~SplitStepPropagator();

    SplitStepPropagator(const SplitStepPropagator&) = delete;
    SplitStepPropagator& operator=(const SplitStepPropagator&) = delete;

    // Advance by one step of size `step`.
    void advance();
    std::size_t steps_taken() const;
    double time() const;

    const Wavefunction& state() const;
    Observables observables() const;
    // Wrapped arg<psi(0)|state>.
    double phase_vs_initial() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Evolve n_steps steps of size `step`, recording observables and the
// unwrapped global phase every record_stride steps (sample 0 included).
//
// Preconditions enforced: max|U + rest - frame| * step / hbar < pi/4,
// kinetic phase per step at Nyquist < pi, record_stride divides n_steps,
// and the estimated per-sample phase increment stays below pi (else
// SamplingError: reduce record_stride). A near-pi wrapped increment
// between consecutive samples also raises SamplingError.
std::pair<Wavefunction, EvolutionRecord>
split_step_evolve(const Wavefunction& psi, const HamiltonianSpec& spec,
                  double step, std::size_t n_steps, std::size_t record_stride,
                  const Constants& constants, EvolveOptions options = {});

// Moments by direct summation (position space) and spectral summation
// (momentum space). Parseval consistency |norm_x - norm_p| < 1e-12.
Observables observables(const Wavefunction& psi, const Constants& constants);

// arg<psi_ref|psi> in (-pi, pi]. DecoherenceError when |<psi_ref|psi>|
// <= 0.1.
double global_phase(const Wavefunction& psi_ref, const Wavefunction& psi);

// Fraction of |psi|^2 inside [lo, hi], in [0, 1].
double containment_fraction(const Wavefunction& psi, double lo, double hi);

// Map an angle to (-pi, pi].
double wrap_to_pi(double angle);

} // namespace abgrav
