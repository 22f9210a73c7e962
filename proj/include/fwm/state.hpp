#ifndef FWM_STATE_HPP
#define FWM_STATE_HPP

#include <array>
#include <cstddef>
#include <cstdint>

#include "fwm/params.hpp"

namespace fwm {

/// Two-level emitter in the converted-mode rotating frame. Only the upper
/// population is stored; rho_gg is always read as 1 - rho_ee, and rho_eg as
/// conj(rho_ge).
struct EmitterState {
    Complex rho_ge{};
    double rho_ee = 0.0;
};

/// Mode envelopes plus one or two emitters.
struct HybridState {
    std::array<Complex, 3> alpha{};
    std::array<EmitterState, 2> emitters{};
    std::size_t emitter_count = 1;
};

inline HybridState zero_state(std::size_t emitter_count) {
    HybridState s;
    s.emitter_count = emitter_count;
    return s;
}

/// max(-rho_ee, rho_ee - 1, 0) over emitters.
double population_excursion(const HybridState& s);

/// max(|rho_ge|^2 - rho_ee (1 - rho_ee), 0) over emitters.
double positivity_defect(const HybridState& s);

/// Throws InvariantViolation if either defect exceeds tol.
void check_state(const HybridState& s, double tol = kPositivityTol);

struct SteadyStateResult {
    HybridState state;
    bool converged = false;
    double final_residual = 0.0;
    double elapsed_sim_time = 0.0;
    double fwm_intensity = 0.0; // |alpha3|^2 of state, exactly

    // diagnostics
    std::uint64_t steps = 0;
    std::uint64_t rhs_evals = 0;
    double max_population_excursion = 0.0;
    double max_positivity_defect = 0.0;
};

} // namespace fwm

#endif
