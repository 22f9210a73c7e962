#include "fwm/fixed_point.hpp"

#include <algorithm>
#include <cmath>

#include "fwm/closed_form.hpp"
#include "fwm/dynamics.hpp"

namespace fwm {

namespace {

constexpr Complex kI{0.0, 1.0};

double rel_change(Complex updated, Complex previous) {
    const double scale = std::max(std::abs(updated), 1e-30);
    return std::abs(updated - previous) / scale;
}

double rel_change(double updated, double previous) {
    const double scale = std::max(std::abs(updated), 1e-30);
    return std::abs(updated - previous) / scale;
}

Complex damp(Complex previous, Complex updated, double d) {
    return previous + d * (updated - previous);
}

double damp(double previous, double updated, double d) {
    return previous + d * (updated - previous);
}

template <class Params>
SteadyStateResult finish(const HybridState& state, const Params& p, long iterations) {
    SteadyStateResult res;
    res.state = state;
    res.converged = true;
    res.final_residual = steady_residual(state, p);
    res.elapsed_sim_time = 0.0;
    res.fwm_intensity = std::norm(state.alpha[2]);
    res.steps = static_cast<std::uint64_t>(iterations);
    return res;
}

} // namespace

SteadyStateResult fixed_point_solve(const SingleEmitterParams& p,
                                    const HybridState& guess,
                                    const FixedPointOptions& opt) {
    validate(p);
    if (guess.emitter_count != 1) throw ValidationError("expected a single-emitter guess");

    const Complex den1(p.gamma1, p.omega1 - p.omega_drive);
    const Complex den2(p.gamma2, p.omega2 - p.omega_drive_prime);
    const Complex beta_eg(p.gamma_eg,
                          p.omega_eg + p.omega_drive_prime - 2.0 * p.omega_drive);

    Complex a1 = guess.alpha[0], a2 = guess.alpha[1], a3 = guess.alpha[2];
    Complex rge = guess.emitters[0].rho_ge;
    double ree = guess.emitters[0].rho_ee;

    for (long it = 1; it <= opt.max_iterations; ++it) {
        const Complex a1_up = (p.eps_p - 2.0 * kI * p.chi * std::conj(a1) * a2 * a3) / den1;
        const Complex a2_up = (p.eps_p_prime - kI * p.chi * std::conj(a3) * a1 * a1) / den2;
        const double y_old = 2.0 * ree - 1.0;
        const Complex rge_up = kI * std::conj(p.f) * a3 * y_old / beta_eg;
        const double ree_up =
            -2.0 * std::imag(p.f * std::conj(a3) * rge_up) / p.gamma_ee;

        const Complex a1_new = damp(a1, a1_up, opt.damping);
        const Complex a2_new = damp(a2, a2_up, opt.damping);
        const Complex rge_new = damp(rge, rge_up, opt.damping);
        const double ree_new = damp(ree, ree_up, opt.damping);
        const double y_new = std::clamp(2.0 * ree_new - 1.0, -1.0, 1.0);
        const Complex a3_up = alpha3_single(a1_new, a2_new, y_new, p).first;
        const Complex a3_new = damp(a3, a3_up, opt.damping);

        const double update = std::max({rel_change(a1_new, a1), rel_change(a2_new, a2),
                                        rel_change(a3_new, a3), rel_change(rge_new, rge),
                                        rel_change(ree_new, ree)});
        a1 = a1_new; a2 = a2_new; a3 = a3_new; rge = rge_new; ree = ree_new;

        if (update < opt.rel_update_tol) {
            HybridState s = zero_state(1);
            s.alpha = {a1, a2, a3};
            s.emitters[0] = {rge, ree};
            return finish(s, p, it);
        }
    }
    throw NonConvergence("fixed-point iteration did not converge; "
                         "fall back to time integration");
}

SteadyStateResult fixed_point_solve(const CoupledEmitterParams& p,
                                    const HybridState& guess,
                                    const FixedPointOptions& opt) {
    validate(p);
    if (guess.emitter_count != 2) throw ValidationError("expected a two-emitter guess");

    const Complex den1(p.gamma1, p.omega1 - p.omega_drive);
    const Complex den2(p.gamma2, p.omega2 - p.omega_drive_prime);
    const double frame = 2.0 * p.omega_drive - p.omega_drive_prime;
    const Complex beta1(p.gamma_eg_1, p.omega_eg_1 - frame);
    const Complex beta2(p.gamma_eg_2, p.omega_eg_2 - frame);

    Complex a1 = guess.alpha[0], a2 = guess.alpha[1], a3 = guess.alpha[2];
    Complex rge1 = guess.emitters[0].rho_ge, rge2 = guess.emitters[1].rho_ge;
    double ree1 = guess.emitters[0].rho_ee, ree2 = guess.emitters[1].rho_ee;

    for (long it = 1; it <= opt.max_iterations; ++it) {
        const Complex a1_up = (p.eps_p - 2.0 * kI * p.chi * std::conj(a1) * a2 * a3) / den1;
        const Complex a2_up = (p.eps_p_prime - kI * p.chi * std::conj(a3) * a1 * a1) / den2;

        // coherence pair is linear in (rge1, rge2) given a3; solve it exactly
        const double y1_old = 2.0 * ree1 - 1.0;
        const double y2_old = 2.0 * ree2 - 1.0;
        const Complex pair_det = beta1 * beta2 + y1_old * y2_old * std::norm(p.g);
        if (std::abs(pair_det) < 1e-30) {
            throw DegenerateDenominator("coherence pair is singular at this inversion");
        }
        const Complex rge1_up =
            a3 * (kI * std::conj(p.f1) * y1_old * beta2 -
                  std::conj(p.g) * std::conj(p.f2) * y1_old * y2_old) / pair_det;
        const Complex rge2_up =
            a3 * (kI * std::conj(p.f2) * y2_old * beta1 -
                  p.g * std::conj(p.f1) * y1_old * y2_old) / pair_det;

        const double exchange = -2.0 * std::imag(p.g * std::conj(rge2_up) * rge1_up);
        const double ree1_up =
            (-2.0 * std::imag(p.f1 * std::conj(a3) * rge1_up) + exchange) / p.gamma_ee_1;
        const double ree2_up =
            (-2.0 * std::imag(p.f2 * std::conj(a3) * rge2_up) - exchange) / p.gamma_ee_2;

        const Complex a1_new = damp(a1, a1_up, opt.damping);
        const Complex a2_new = damp(a2, a2_up, opt.damping);
        const Complex rge1_new = damp(rge1, rge1_up, opt.damping);
        const Complex rge2_new = damp(rge2, rge2_up, opt.damping);
        const double ree1_new = damp(ree1, ree1_up, opt.damping);
        const double ree2_new = damp(ree2, ree2_up, opt.damping);
        const double y1_new = std::clamp(2.0 * ree1_new - 1.0, -1.0, 1.0);
        const double y2_new = std::clamp(2.0 * ree2_new - 1.0, -1.0, 1.0);
        const Complex a3_up = alpha3_coupled(a1_new, a2_new, y1_new, y2_new, p).first;
        const Complex a3_new = damp(a3, a3_up, opt.damping);

        const double update =
            std::max({rel_change(a1_new, a1), rel_change(a2_new, a2),
                      rel_change(a3_new, a3), rel_change(rge1_new, rge1),
                      rel_change(rge2_new, rge2), rel_change(ree1_new, ree1),
                      rel_change(ree2_new, ree2)});
        a1 = a1_new; a2 = a2_new; a3 = a3_new;
        rge1 = rge1_new; rge2 = rge2_new; ree1 = ree1_new; ree2 = ree2_new;

        if (update < opt.rel_update_tol) {
            HybridState s = zero_state(2);
            s.alpha = {a1, a2, a3};
            s.emitters[0] = {rge1, ree1};
            s.emitters[1] = {rge2, ree2};
            return finish(s, p, it);
        }
    }
    throw NonConvergence("fixed-point iteration did not converge; "
                         "fall back to time integration");
}

SteadyStateResult fixed_point_solve(const SingleEmitterParams& p,
                                    const FixedPointOptions& opt) {
    // pump-linearized guess: conversion and emitter switched off
    HybridState guess = zero_state(1);
    guess.alpha[0] = p.eps_p / Complex(p.gamma1, p.omega1 - p.omega_drive);
    guess.alpha[1] = p.eps_p_prime / Complex(p.gamma2, p.omega2 - p.omega_drive_prime);
    return fixed_point_solve(p, guess, opt);
}

SteadyStateResult fixed_point_solve(const CoupledEmitterParams& p,
                                    const FixedPointOptions& opt) {
    HybridState guess = zero_state(2);
    guess.alpha[0] = p.eps_p / Complex(p.gamma1, p.omega1 - p.omega_drive);
    guess.alpha[1] = p.eps_p_prime / Complex(p.gamma2, p.omega2 - p.omega_drive_prime);
    return fixed_point_solve(p, guess, opt);
}

} // namespace fwm
