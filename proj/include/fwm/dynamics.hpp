#ifndef FWM_DYNAMICS_HPP
#define FWM_DYNAMICS_HPP

#include "fwm/params.hpp"
#include "fwm/state.hpp"

namespace fwm {

/// Rotating-frame equations of motion. The frame rotates at omega for mode 1,
/// omega' for mode 2 and 2*omega - omega' for mode 3 and the coherences, so
/// the system is autonomous and its steady state is a fixed point.
HybridState rhs_single(const HybridState& state, const SingleEmitterParams& p);
HybridState rhs_coupled(const HybridState& state, const CoupledEmitterParams& p);

/// Infinity norm of the rotating-frame derivative; zero exactly at a steady
/// state of the algebraic system.
double steady_residual(const HybridState& state, const SingleEmitterParams& p);
double steady_residual(const HybridState& state, const CoupledEmitterParams& p);

/// Integrate the rotating-frame system with an adaptive embedded
/// Runge-Kutta 5(4) pair until the derivative norm stays below
/// steady_residual_tol * max(1, ||state||_inf) for a full residual_window,
/// or until max_time (converged = false in that case).
SteadyStateResult integrate_to_steady_state(const SingleEmitterParams& p,
                                            const HybridState& init,
                                            const IntegrationSettings& settings);
SteadyStateResult integrate_to_steady_state(const CoupledEmitterParams& p,
                                            const HybridState& init,
                                            const IntegrationSettings& settings);

/// Convenience overloads starting from the all-zero initial condition.
SteadyStateResult integrate_to_steady_state(const SingleEmitterParams& p,
                                            const IntegrationSettings& settings);
SteadyStateResult integrate_to_steady_state(const CoupledEmitterParams& p,
                                            const IntegrationSettings& settings);

/// Cross-check of the rotating-frame ansatz: integrates the lab-frame
/// equations with explicit drive oscillations, demodulates the envelopes and
/// returns the maximum modulus deviation from the rotating-frame trajectory
/// sampled at matching times over [0, horizon].
double lab_frame_check(const SingleEmitterParams& p,
                       const IntegrationSettings& settings, double horizon);
double lab_frame_check(const CoupledEmitterParams& p,
                       const IntegrationSettings& settings, double horizon);

} // namespace fwm

#endif
