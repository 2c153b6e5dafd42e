#ifndef RUMOR_INTEGRATOR_HPP
#define RUMOR_INTEGRATOR_HPP

#include <vector>

#include "rumor/model.hpp"

namespace rumor {

struct IntegrationOptions {
    double step = 0.01;       // fixed RK4 time step
    double t_max = 500.0;     // horizon
    int sample_every = 10;    // recording stride, in steps
    double active_tol = 1e-10; // steady-state threshold on s1+s2+h
};

/// Why a trajectory ended.
enum class Termination { steady_state, horizon };

struct TrajectorySample {
    double t = 0.0;
    StateVector state;
};

/// Recorded solution of one mean-field run: samples at the recording stride
/// (plus the last computed step), the final state, and how the run ended.
struct Trajectory {
    std::vector<TrajectorySample> samples;
    Termination terminated_by = Termination::horizon;
    StateVector final;
    double final_time = 0.0;
};

void validate_options_or_throw(const IntegrationOptions& opts);

/// Advance the mean-field system with classical fixed-step RK4.
///
/// Stops at the first step where the system is stationary: all active
/// density (s1+s2+h) below active_tol and the remaining stifler1->stifler2
/// flow omega*r1 below active_tol as well. Otherwise runs to t_max and
/// reports horizon termination.
///
/// Throws NumericalError (naming the time) if a component drops below the
/// roundoff tolerance or the density sum drifts by more than 1e-6.
Trajectory integrate(const ModelParams& params, const StateVector& init,
                     const IntegrationOptions& opts);

/// Final state of a steady-state-terminated trajectory. Guarantees
/// s1+s2+h < active_tol. Throws NotConvergedError for horizon-terminated
/// trajectories.
StateVector final_state(const Trajectory& traj);

} // namespace rumor

#endif
