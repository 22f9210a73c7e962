#ifndef FWM_FIXED_POINT_HPP
#define FWM_FIXED_POINT_HPP

#include "fwm/params.hpp"
#include "fwm/state.hpp"

namespace fwm {

struct FixedPointOptions {
    double damping = 0.5;
    double rel_update_tol = 1e-12;
    long max_iterations = 100000;
};

/// Solves the algebraic steady-state system by damped fixed-point iteration,
/// starting from the pump-linearized guess (chi and f switched off).
/// Independent of the time integrator; used to cross-validate it.
/// Throws NonConvergence when the iteration budget runs out.
SteadyStateResult fixed_point_solve(const SingleEmitterParams& p,
                                    const FixedPointOptions& opt = {});
SteadyStateResult fixed_point_solve(const CoupledEmitterParams& p,
                                    const FixedPointOptions& opt = {});

/// Same, from a caller-provided initial guess.
SteadyStateResult fixed_point_solve(const SingleEmitterParams& p,
                                    const HybridState& guess,
                                    const FixedPointOptions& opt);
SteadyStateResult fixed_point_solve(const CoupledEmitterParams& p,
                                    const HybridState& guess,
                                    const FixedPointOptions& opt);

} // namespace fwm

#endif
