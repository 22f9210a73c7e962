#ifndef FWM_SWEEP_HPP
#define FWM_SWEEP_HPP

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "fwm/dynamics.hpp"
#include "fwm/params.hpp"

namespace fwm {

using ParamsVariant = std::variant<SingleEmitterParams, CoupledEmitterParams>;

/// Reference intensity against which sweep factors are reported.
enum class BaselineKind {
    // f = 0 and omega3 moved onto the 2 omega - omega' resonance
    ResonantNoEmitter,
    // f = 0 at the given (off-resonant) omega3
    OffResonantNoEmitter,
    // best emitter-1-only enhancement over the sweep range
    SingleEmitterOptimum,
};

std::string to_string(BaselineKind k);

struct SweepSpec {
    std::string target = "omega_eg"; // swept parameter identifier
    double start = 1.3;
    double stop = 1.7;
    int n_points = 801;
    ParamsVariant base_params{};
};

void validate(const SweepSpec& spec);

/// Returns base params with the named target set to value. Moduli targets
/// (f, f1, f2, g_modulus) rescale the complex value keeping its phase.
ParamsVariant apply_target(const ParamsVariant& base, const std::string& target,
                           double value);

struct SweepPoint {
    double param_value = 0.0;
    double fwm_intensity = 0.0;
    double factor = 0.0; // fwm_intensity / baseline_intensity, exactly
    double rho_ee_1 = 0.0;
    double rho_ee_2 = 0.0; // unused for single-emitter curves
    bool converged = false;
};

struct SweepCurve {
    std::vector<SweepPoint> points; // sorted by param_value
    double baseline_intensity = 0.0;
    BaselineKind baseline_kind = BaselineKind::ResonantNoEmitter;
    std::size_t emitter_count = 1;
};

/// Steady-state intensity of the baseline configuration derived from params.
/// Throws NonConvergence if the baseline run does not converge.
double baseline_intensity(const ParamsVariant& params, BaselineKind kind,
                          const IntegrationSettings& settings, int workers = 0);

/// One integration from the zero initial condition per grid point.
/// Non-converged points are flagged, never dropped. workers = 0 picks the
/// FWM_WORKERS environment value, falling back to the hardware count.
SweepCurve run_sweep(const SweepSpec& spec, BaselineKind baseline,
                     const IntegrationSettings& settings, int workers = 0);

struct OptimumResult {
    double param_value = 0.0;
    double factor = 0.0;
    double fwm_intensity = 0.0;
    double baseline = 0.0;
};

/// Coarse grid scan at the spec resolution followed by golden-section
/// refinement of the factor to parameter resolution 1e-5. When the target is
/// an emitter spacing the scan grid is densified around the closed-form
/// resonance roots so narrow peaks are not lost between grid points.
/// Throws NoInteriorOptimum if the best factor sits on the sweep boundary.
OptimumResult find_optimum(const SweepSpec& spec, BaselineKind baseline,
                           const IntegrationSettings& settings, int workers = 0);

struct ComparisonReport {
    OptimumResult single_optimum;
    OptimumResult coupled_optimum;
    double ratio = 0.0; // coupled factor / single factor
};

/// Optimises the emitter spacing for the single and the coupled system (each
/// against its own off-resonant f = 0 baseline) and reports the factor ratio.
/// Both parameter sets must share pumps, drive and pump-mode frequencies and
/// the grating decay rates.
ComparisonReport coupled_vs_single_report(const SingleEmitterParams& single_params,
                                          const CoupledEmitterParams& coupled_params,
                                          const IntegrationSettings& settings,
                                          double sweep_start = 1.40,
                                          double sweep_stop = 1.70,
                                          int n_points = 301, int workers = 0);

/// Golden-section maximisation of a unimodal function on [lo, hi] to the
/// given parameter tolerance. Exposed for the solver self-test.
std::pair<double, double> golden_section_maximize(
    const std::function<double(double)>& f, double lo, double hi, double xtol);

/// Number of parallel workers: explicit requested value, else FWM_WORKERS,
/// else hardware concurrency.
int resolve_worker_count(int requested);

} // namespace fwm

#endif
