#ifndef FWM_CLOSED_FORM_HPP
#define FWM_CLOSED_FORM_HPP

#include <utility>

#include "fwm/params.hpp"

namespace fwm {

/// Steady-state population inversion y = rho_ee - rho_gg, one entry per
/// emitter. y = -1 is the ground state.
struct InversionEstimate {
    double y1 = -1.0;
    double y2 = -1.0;
};

/// The converted-mode denominator split into the emitter-mediated term and
/// the bare detuning term. Suppression happens when emitter_term blows up,
/// enhancement when the two imaginary parts cancel.
struct DenominatorBreakdown {
    Complex emitter_term{};
    Complex bare_term{};
    Complex total{};
};

/// Closed-form steady-state envelope of the converted mode for the single
/// emitter, given the other two envelopes and the inversion.
/// Throws DegenerateDenominator at an exact pole (|total| < 1e-30).
std::pair<Complex, DenominatorBreakdown>
alpha3_single(Complex alpha1_env, Complex alpha2_env, double y,
              const SingleEmitterParams& p);

/// Coupled-emitter closed form. Reduces exactly to alpha3_single when
/// f2 = 0 and g = 0.
std::pair<Complex, DenominatorBreakdown>
alpha3_coupled(Complex alpha1_env, Complex alpha2_env, double y1, double y2,
               const CoupledEmitterParams& p);

/// The two emitter spacings at which the emitter term cancels the bare
/// converted-mode detuning: roots x of
///     x^2 (omega3 + omega' - 2 omega) + |f|^2 y x
///       + (omega3 + omega' - 2 omega) gamma_eg^2 = 0,
/// returned as omega_eg = 2 omega - omega' + x. first = the root closer to
/// 2 omega - omega' (suppression side), second = the enhancement candidate
/// that minimises the denominator magnitude.
/// Throws ComplexRoots when the discriminant is negative and
/// ValidationError when omega3 + omega' - 2 omega == 0.
std::pair<double, double> enhancement_roots(const SingleEmitterParams& p, double y);

} // namespace fwm

#endif
