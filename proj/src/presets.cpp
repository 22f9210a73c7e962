#include "fwm/presets.hpp"

namespace fwm {

namespace {

// Fig. 1/2 system: resonant conversion, emitter tuned through the dip.
// gamma_ee = 2 * gamma_eg follows the stated off-diagonal/diagonal relation.
SingleEmitterParams suppression_params() {
    SingleEmitterParams p;
    p.omega1 = 1.0;
    p.omega2 = 0.5;
    p.omega3 = 1.5;
    p.omega_eg = 1.5;
    p.gamma1 = p.gamma2 = p.gamma3 = 0.01;
    p.gamma_eg = 1e-5;
    p.gamma_ee = 2e-5;
    p.chi = 1e-5;
    p.f = 0.1;
    p.eps_p = 1e-3;
    p.eps_p_prime = 1e-3;
    p.omega_drive = 1.0;
    p.omega_drive_prime = 0.5;
    return p;
}

SingleEmitterParams enhancement_params() {
    SingleEmitterParams p = suppression_params();
    p.omega3 = 1.85;
    p.omega_eg = 1.52;
    return p;
}

CoupledEmitterParams coupled_params() {
    CoupledEmitterParams p;
    p.omega1 = 1.0;
    p.omega2 = 0.5;
    p.omega3 = 1.90;
    p.omega_eg_1 = 1.5732;
    p.omega_eg_2 = 1.5810;
    p.gamma1 = p.gamma2 = p.gamma3 = 0.01;
    p.gamma_ee_1 = p.gamma_ee_2 = 1e-5;
    p.gamma_eg_1 = p.gamma_eg_2 = 5e-6;
    p.chi = 1e-5;
    p.f1 = p.f2 = 0.1909;
    p.g = Complex(0.1000, 0.0101);
    p.eps_p = 1e-3;
    p.eps_p_prime = 1e-3;
    p.omega_drive = 1.0;
    p.omega_drive_prime = 0.5;
    return p;
}

SweepSpec suppression_sweep(const ParamsVariant& params) {
    SweepSpec s;
    s.target = "omega_eg";
    s.start = 1.3;
    s.stop = 1.7;
    s.n_points = 801;
    s.base_params = params;
    return s;
}

SweepSpec enhancement_sweep(const ParamsVariant& params, const std::string& target) {
    SweepSpec s;
    s.target = target;
    s.start = 1.40;
    s.stop = 1.70;
    s.n_points = 1201;
    s.base_params = params;
    return s;
}

} // namespace

Preset preset_by_name(const std::string& name) {
    Preset preset;
    preset.name = name;
    if (name == "fig1" || name == "fig2") {
        preset.params = suppression_params();
        preset.sweep = suppression_sweep(preset.params);
        preset.baseline = BaselineKind::ResonantNoEmitter;
    } else if (name == "fig3") {
        preset.params = enhancement_params();
        preset.sweep = enhancement_sweep(preset.params, "omega_eg");
        preset.baseline = BaselineKind::OffResonantNoEmitter;
    } else if (name == "fig4") {
        preset.params = coupled_params();
        preset.sweep = enhancement_sweep(preset.params, "omega_eg_1");
        preset.baseline = BaselineKind::OffResonantNoEmitter;
    } else {
        throw ValidationError("unknown preset '" + name +
                              "' (expected fig1, fig2, fig3 or fig4)");
    }
    return preset;
}

std::vector<std::string> preset_names() { return {"fig1", "fig2", "fig3", "fig4"}; }

double calibrated_enhancement_pump() { return 0.04; }

} // namespace fwm
