#ifndef FWM_PARAMS_HPP
#define FWM_PARAMS_HPP

#include <complex>

#include "fwm/errors.hpp"

namespace fwm {

using Complex = std::complex<double>;

/// Parameters of the grating + single two-level emitter system.
///
/// All frequencies and rates are dimensionless, expressed in units of the
/// first drive frequency (omega_drive = 1 is the conventional choice).
struct SingleEmitterParams {
    // mode angular frequencies
    double omega1 = 1.0;
    double omega2 = 0.5;
    double omega3 = 1.5;
    // emitter level spacing
    double omega_eg = 1.5;
    // mode damping rates
    double gamma1 = 0.01;
    double gamma2 = 0.01;
    double gamma3 = 0.01;
    // emitter population / coherence decay rates
    double gamma_ee = 2e-5;
    double gamma_eg = 1e-5;
    // nonlinear conversion constant (real, >= 0)
    double chi = 1e-5;
    // emitter / converted-mode coupling
    Complex f{0.1, 0.0};
    // pump amplitudes
    Complex eps_p{1e-3, 0.0};
    Complex eps_p_prime{1e-3, 0.0};
    // drive frequencies (omega, omega')
    double omega_drive = 1.0;
    double omega_drive_prime = 0.5;

    /// Frequency of the converted mode's rotating frame, 2*omega - omega'.
    double converted_frame_freq() const { return 2.0 * omega_drive - omega_drive_prime; }
};

/// Parameters of the grating + two coupled emitters system.
struct CoupledEmitterParams {
    double omega1 = 1.0;
    double omega2 = 0.5;
    double omega3 = 1.9;
    double omega_eg_1 = 1.5732;
    double omega_eg_2 = 1.5810;
    double gamma1 = 0.01;
    double gamma2 = 0.01;
    double gamma3 = 0.01;
    double gamma_ee_1 = 1e-5;
    double gamma_ee_2 = 1e-5;
    double gamma_eg_1 = 5e-6;
    double gamma_eg_2 = 5e-6;
    double chi = 1e-5;
    Complex f1{0.1909, 0.0};
    Complex f2{0.1909, 0.0};
    // emitter-emitter coupling (may be complex)
    Complex g{0.1, 0.0101};
    Complex eps_p{1e-3, 0.0};
    Complex eps_p_prime{1e-3, 0.0};
    double omega_drive = 1.0;
    double omega_drive_prime = 0.5;

    double converted_frame_freq() const { return 2.0 * omega_drive - omega_drive_prime; }

    /// Emitter-1-only reduction: drop emitter 2 and the emitter-emitter coupling.
    SingleEmitterParams reduce_to_single() const;
};

/// Integrator control knobs. All durations in units of 1/omega_drive.
struct IntegrationSettings {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    // steady state is declared when ||dstate/dt||_inf stays below
    // steady_residual_tol * max(1, ||state||_inf) for a full residual_window
    double steady_residual_tol = 1e-10;
    double max_time = 0.0;
    double residual_window = 0.0;
    // throw InvariantViolation when positivity breaks beyond tol_positivity
    bool enforce_invariants = true;
};

inline constexpr double kPositivityTol = 1e-9;

/// Settings with the window / horizon derived from the decay rates:
/// residual_window = 10/gamma3, max_time = 50/min(gamma_eg, gamma_ee).
IntegrationSettings default_settings(const SingleEmitterParams& p);
IntegrationSettings default_settings(const CoupledEmitterParams& p);

/// Throw ValidationError naming the offending field.
void validate(const SingleEmitterParams& p);
void validate(const CoupledEmitterParams& p);
void validate(const IntegrationSettings& s);

} // namespace fwm

#endif
