#include "fwm/closed_form.hpp"

#include <cmath>

namespace fwm {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPoleTol = 1e-30;

void require_inversion(double y, const char* field) {
    if (!(y >= -1.0 && y <= 1.0)) {
        throw ValidationError(std::string(field) + " must lie in [-1, 1]");
    }
}

} // namespace

std::pair<Complex, DenominatorBreakdown>
alpha3_single(Complex alpha1_env, Complex alpha2_env, double y,
              const SingleEmitterParams& p) {
    require_inversion(y, "y");
    const double delta_eg = p.omega_eg + p.omega_drive_prime - 2.0 * p.omega_drive;
    const double delta3 = p.omega3 + p.omega_drive_prime - 2.0 * p.omega_drive;

    DenominatorBreakdown d;
    d.emitter_term = std::norm(p.f) * y / Complex(p.gamma_eg, delta_eg);
    d.bare_term = -Complex(p.gamma3, delta3);
    d.total = d.emitter_term + d.bare_term;
    if (std::abs(d.total) < kPoleTol) {
        throw DegenerateDenominator("converted-mode denominator is an exact pole");
    }
    const Complex a3 =
        kI * p.chi * std::conj(alpha2_env) * alpha1_env * alpha1_env / d.total;
    return {a3, d};
}

std::pair<Complex, DenominatorBreakdown>
alpha3_coupled(Complex alpha1_env, Complex alpha2_env, double y1, double y2,
               const CoupledEmitterParams& p) {
    require_inversion(y1, "y1");
    require_inversion(y2, "y2");
    const double frame = 2.0 * p.omega_drive - p.omega_drive_prime;
    const Complex beta1(p.gamma_eg_1, p.omega_eg_1 - frame);
    const Complex beta2(p.gamma_eg_2, p.omega_eg_2 - frame);
    const Complex eps3(p.gamma3, p.omega3 - frame);
    const Complex pair_det = beta1 * beta2 + y1 * y2 * std::norm(p.g);

    DenominatorBreakdown d;
    d.emitter_term = y1 * std::norm(p.f1) * beta2 + y2 * std::norm(p.f2) * beta1 +
                     kI * y1 * y2 *
                         (p.f1 * std::conj(p.f2) * std::conj(p.g) +
                          std::conj(p.f1) * p.f2 * p.g);
    d.bare_term = -eps3 * pair_det;
    d.total = d.emitter_term + d.bare_term;
    if (std::abs(d.total) < kPoleTol) {
        throw DegenerateDenominator("converted-mode denominator is an exact pole");
    }
    const Complex a3 = kI * p.chi * pair_det * std::conj(alpha2_env) * alpha1_env *
                       alpha1_env / d.total;
    return {a3, d};
}

std::pair<double, double> enhancement_roots(const SingleEmitterParams& p, double y) {
    require_inversion(y, "y");
    const double frame = 2.0 * p.omega_drive - p.omega_drive_prime;
    const double delta3 = p.omega3 + p.omega_drive_prime - 2.0 * p.omega_drive;
    if (delta3 == 0.0) {
        throw ValidationError(
            "enhancement_roots needs an off-resonant converted mode "
            "(omega3 + omega' - 2 omega != 0)");
    }

    // delta3 * x^2 + |f|^2 y * x + delta3 * gamma_eg^2 = 0
    const double a = delta3;
    const double b = std::norm(p.f) * y;
    const double c = delta3 * p.gamma_eg * p.gamma_eg;
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) {
        throw ComplexRoots("no real emitter spacing cancels the detuning at these "
                           "parameters (negative discriminant)");
    }

    // stable quadratic formula: no cancellation in q, small root via c/q
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    const double x_large = q / a;
    const double x_small = (q != 0.0) ? c / q : 0.0;
    return {frame + x_small, frame + x_large};
}

} // namespace fwm
