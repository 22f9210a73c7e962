#include "fwm/params.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fwm {

namespace {

void require_positive(double v, const char* field) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        std::ostringstream msg;
        msg << field << " must be strictly positive, got " << v;
        throw ValidationError(msg.str());
    }
}

void require_finite(Complex v, const char* field) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw ValidationError(std::string(field) + " must be finite");
    }
}

} // namespace

SingleEmitterParams CoupledEmitterParams::reduce_to_single() const {
    SingleEmitterParams s;
    s.omega1 = omega1;
    s.omega2 = omega2;
    s.omega3 = omega3;
    s.omega_eg = omega_eg_1;
    s.gamma1 = gamma1;
    s.gamma2 = gamma2;
    s.gamma3 = gamma3;
    s.gamma_ee = gamma_ee_1;
    s.gamma_eg = gamma_eg_1;
    s.chi = chi;
    s.f = f1;
    s.eps_p = eps_p;
    s.eps_p_prime = eps_p_prime;
    s.omega_drive = omega_drive;
    s.omega_drive_prime = omega_drive_prime;
    return s;
}

IntegrationSettings default_settings(const SingleEmitterParams& p) {
    IntegrationSettings s;
    s.residual_window = 10.0 / p.gamma3;
    s.max_time = 50.0 / std::min(p.gamma_eg, p.gamma_ee);
    return s;
}

IntegrationSettings default_settings(const CoupledEmitterParams& p) {
    IntegrationSettings s;
    s.residual_window = 10.0 / p.gamma3;
    s.max_time = 50.0 / std::min({p.gamma_eg_1, p.gamma_eg_2, p.gamma_ee_1, p.gamma_ee_2});
    return s;
}

void validate(const SingleEmitterParams& p) {
    require_positive(p.omega1, "omega1");
    require_positive(p.omega2, "omega2");
    require_positive(p.omega3, "omega3");
    require_positive(p.omega_eg, "omega_eg");
    require_positive(p.omega_drive, "omega_drive");
    require_positive(p.omega_drive_prime, "omega_drive_prime");
    require_positive(p.gamma1, "gamma1");
    require_positive(p.gamma2, "gamma2");
    require_positive(p.gamma3, "gamma3");
    require_positive(p.gamma_ee, "gamma_ee");
    require_positive(p.gamma_eg, "gamma_eg");
    if (!(p.chi >= 0.0) || !std::isfinite(p.chi)) {
        throw ValidationError("chi must be real and non-negative");
    }
    require_finite(p.f, "f");
    require_finite(p.eps_p, "eps_p");
    require_finite(p.eps_p_prime, "eps_p_prime");
}

void validate(const CoupledEmitterParams& p) {
    require_positive(p.omega1, "omega1");
    require_positive(p.omega2, "omega2");
    require_positive(p.omega3, "omega3");
    require_positive(p.omega_eg_1, "omega_eg_1");
    require_positive(p.omega_eg_2, "omega_eg_2");
    require_positive(p.omega_drive, "omega_drive");
    require_positive(p.omega_drive_prime, "omega_drive_prime");
    require_positive(p.gamma1, "gamma1");
    require_positive(p.gamma2, "gamma2");
    require_positive(p.gamma3, "gamma3");
    require_positive(p.gamma_ee_1, "gamma_ee_1");
    require_positive(p.gamma_ee_2, "gamma_ee_2");
    require_positive(p.gamma_eg_1, "gamma_eg_1");
    require_positive(p.gamma_eg_2, "gamma_eg_2");
    if (!(p.chi >= 0.0) || !std::isfinite(p.chi)) {
        throw ValidationError("chi must be real and non-negative");
    }
    require_finite(p.f1, "f1");
    require_finite(p.f2, "f2");
    require_finite(p.g, "g");
    require_finite(p.eps_p, "eps_p");
    require_finite(p.eps_p_prime, "eps_p_prime");
}

void validate(const IntegrationSettings& s) {
    require_positive(s.rel_tol, "rel_tol");
    require_positive(s.abs_tol, "abs_tol");
    require_positive(s.steady_residual_tol, "steady_residual_tol");
    require_positive(s.max_time, "max_time");
    require_positive(s.residual_window, "residual_window");
    if (s.max_time < s.residual_window) {
        throw ValidationError("max_time must be >= residual_window");
    }
}

} // namespace fwm
