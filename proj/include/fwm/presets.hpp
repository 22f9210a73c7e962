#ifndef FWM_PRESETS_HPP
#define FWM_PRESETS_HPP

#include <string>
#include <vector>

#include "fwm/sweep.hpp"

namespace fwm {

/// A figure preset: parameter set, default sweep axis and baseline.
struct Preset {
    std::string name;
    ParamsVariant params;
    SweepSpec sweep;
    BaselineKind baseline = BaselineKind::ResonantNoEmitter;
};

/// fig1: suppression dip of the resonant conversion (omega3 = 1.5).
/// fig2: same system, excited-population view.
/// fig3: single-emitter enhancement of the off-resonant conversion
///       (omega3 = 1.85), nominal spacing 1.52.
/// fig4: coupled-emitter enhancement (omega3 = 1.90), emitter 2 fixed at
///       1.5810, nominal emitter-1 spacing 1.5732.
Preset preset_by_name(const std::string& name);

std::vector<std::string> preset_names();

/// Pump amplitude at which the single-emitter enhancement saturates to the
/// reported ~80x scale. The default preset pumps (1e-3) sit in the
/// weak-conversion regime where factors are pump-insensitive; this stronger
/// value is used only for the saturated-enhancement reproduction runs.
double calibrated_enhancement_pump();

} // namespace fwm

#endif
