#pragma once

// Closed-form and quadrature phase predictions. These are the reference
// values the dynamical solver is checked against.
//
// Sign convention everywhere: the two-arm phase is
//     dphi = arg<arm1|arm2> = (S1 - S2)/hbar,
// where arm i accumulated the action S_i = integral of its uniform
// potential (plus rest-energy terms where those are in play).

#include <vector>

#include "abgrav/constants.hpp"
#include "abgrav/metric.hpp"
#include "abgrav/potential_program.hpp"

namespace abgrav::analytic {

// Altitude history R(t) of one arm, as (t, R) samples. t strictly
// increasing, R > 0.
class Trajectory {
public:
    struct Sample {
        double t;
        double R;
    };

    explicit Trajectory(std::vector<Sample> samples);

    const std::vector<Sample>& samples() const { return samples_; }
    double t_start() const { return samples_.front().t; }
    double t_end() const { return samples_.back().t; }

    // Trapezoid quadrature of 1/R(t) over the sampled history.
    double integral_inverse_radius() const;

    // Split at time t (linear interpolation if t is between samples).
    std::pair<Trajectory, Trajectory> split(double t) const;

private:
    std::vector<Sample> samples_;
};

// Shape of the ascent/descent legs of an elevator trajectory.
enum class LegProfile { Linear, Cosine, Smoothstep };

// Elevator altitude history starting and ending at R_base. When
// dwell_at_top is true the arm ascends, holds R_top for `dwell`, then
// descends; otherwise it ascends, descends immediately, and holds R_base
// for `dwell`. Both variants span [0, 2*leg_time + dwell], and the legs
// are sampled identically so their loop contributions cancel exactly.
Trajectory elevator_trajectory(double R_base, double R_top, double leg_time,
                               double dwell, bool dwell_at_top,
                               LegProfile profile = LegProfile::Cosine,
                               std::size_t samples_per_leg = 64);

// (S1 - S2)/hbar for two potential programs of equal total duration.
// Programs carry energies U = e*phi, so the charge is already folded in.
double electric_ab_phase(const PotentialProgram& program1,
                         const PotentialProgram& program2,
                         const Constants& constants);

// As above, over a common evolution window [0, duration] that may end
// before the programs do.
double electric_ab_phase(const PotentialProgram& program1,
                         const PotentialProgram& program2, double duration,
                         const Constants& constants);

// (e/hbar) (V1 - V2) dwell. V1, V2 are electric potentials.
double elevator_phase(double V1, double V2, double dwell,
                      const Constants& constants);

// (m M / hbar) (1/R2 - 1/R1) dwell.
double newtonian_phase(double R1, double R2, double dwell, double M,
                       const Constants& constants);

// -(m/hbar) * closed-loop integral of M/R(t) dt, traversing traj1 forward
// and traj2 backward. Trajectories must span the same time interval.
double weakfield_loop_phase(const Trajectory& traj1, const Trajectory& traj2,
                            double M, const Constants& constants);

// sqrt(1 - 2M/(R c^2)) in Exact mode, 1 - M/(R c^2) in WeakField mode.
double redshift_factor(const MetricParams& metric, const Constants& constants,
                       RedshiftMode mode);

// Phase difference from evolving each arm under (m c^2 + p^2/2m) for its
// own proper time: (1/hbar)(m c^2 + p^2/2m)(f(R1) - f(R2)) dwell with
// f the redshift factor. In WeakField mode with p = 0 this reduces to
// newtonian_phase identically.
double proper_time_route_phase(double R1, double R2, double dwell, double M,
                               double momentum, const Constants& constants,
                               RedshiftMode mode = RedshiftMode::WeakField);

// Two-arm phase of the semi-covariant wave equation at constant altitudes:
// the Newtonian value plus, when the velocity-correction term is kept,
// (M/c^2)(1/R2 - 1/R1) * (p_sq_mean/2m) * dwell / hbar.
double semi_covariant_phase(double R1, double R2, double dwell, double M,
                            double p_sq_mean, const Constants& constants,
                            bool include_correction);

} // namespace abgrav::analytic
