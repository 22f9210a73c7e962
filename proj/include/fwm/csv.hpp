#ifndef FWM_CSV_HPP
#define FWM_CSV_HPP

#include <iosfwd>
#include <string>

#include "fwm/state.hpp"
#include "fwm/sweep.hpp"

namespace fwm {

/// Sweep CSV: header then one row per grid point, columns exactly
/// param_value, fwm_intensity, factor, rho_ee_1, rho_ee_2, converged.
/// rho_ee_2 is blank for single-emitter curves. 17 significant digits, so
/// doubles round-trip bit-exactly.
void emit_csv(const SweepCurve& curve, const std::string& path);
void emit_csv(const SweepCurve& curve, std::ostream& out);

/// Single-run CSV: one row of envelope re/im pairs, populations and the
/// final residual.
void emit_csv(const SteadyStateResult& result, const std::string& path);
void emit_csv(const SteadyStateResult& result, std::ostream& out);

std::string format_full_precision(double v);

} // namespace fwm

#endif
