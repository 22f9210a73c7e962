#include "fwm/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace fwm {

namespace {

constexpr Complex kI{0.0, 1.0};

// ---------------------------------------------------------------------------
// Flattened right-hand sides. Layout: re/im pairs for the three mode
// envelopes, then per emitter (re/im of rho_ge, rho_ee).
// ---------------------------------------------------------------------------

struct SingleRotating {
    static constexpr int dim = 9;
    static constexpr std::size_t emitters = 1;

    Complex c1, c2, c3, ceg; // -(i*detuning + damping)
    Complex f, f_conj;
    Complex eps_p, eps_pp;
    double chi, gamma_ee;

    explicit SingleRotating(const SingleEmitterParams& p)
        : c1(-Complex(p.gamma1, p.omega1 - p.omega_drive)),
          c2(-Complex(p.gamma2, p.omega2 - p.omega_drive_prime)),
          c3(-Complex(p.gamma3, p.omega3 + p.omega_drive_prime - 2.0 * p.omega_drive)),
          ceg(-Complex(p.gamma_eg, p.omega_eg + p.omega_drive_prime - 2.0 * p.omega_drive)),
          f(p.f), f_conj(std::conj(p.f)), eps_p(p.eps_p), eps_pp(p.eps_p_prime),
          chi(p.chi), gamma_ee(p.gamma_ee) {}

    void deriv(double /*t*/, const double* y, double* dy) const {
        const Complex a1(y[0], y[1]);
        const Complex a2(y[2], y[3]);
        const Complex a3(y[4], y[5]);
        const Complex rge(y[6], y[7]);
        const double ree = y[8];
        const double inv = 2.0 * ree - 1.0; // rho_ee - rho_gg

        const Complex a1sq = a1 * a1;
        const Complex d1 = c1 * a1 - 2.0 * kI * chi * std::conj(a1) * a2 * a3 + eps_p;
        const Complex d2 = c2 * a2 - kI * chi * std::conj(a3) * a1sq + eps_pp;
        const Complex d3 = c3 * a3 - kI * chi * std::conj(a2) * a1sq - kI * f * rge;
        const Complex dge = ceg * rge + kI * f_conj * a3 * inv;
        // conjugate-pair assembly keeps the population derivative exactly real
        const double dee = -gamma_ee * ree - 2.0 * std::imag(f * std::conj(a3) * rge);

        dy[0] = d1.real(); dy[1] = d1.imag();
        dy[2] = d2.real(); dy[3] = d2.imag();
        dy[4] = d3.real(); dy[5] = d3.imag();
        dy[6] = dge.real(); dy[7] = dge.imag();
        dy[8] = dee;
    }
};

struct CoupledRotating {
    static constexpr int dim = 12;
    static constexpr std::size_t emitters = 2;

    Complex c1, c2, c3, ceg1, ceg2;
    Complex f1, f2, f1_conj, f2_conj, g, g_conj;
    Complex eps_p, eps_pp;
    double chi, gamma_ee_1, gamma_ee_2;

    explicit CoupledRotating(const CoupledEmitterParams& p)
        : c1(-Complex(p.gamma1, p.omega1 - p.omega_drive)),
          c2(-Complex(p.gamma2, p.omega2 - p.omega_drive_prime)),
          c3(-Complex(p.gamma3, p.omega3 + p.omega_drive_prime - 2.0 * p.omega_drive)),
          ceg1(-Complex(p.gamma_eg_1, p.omega_eg_1 + p.omega_drive_prime - 2.0 * p.omega_drive)),
          ceg2(-Complex(p.gamma_eg_2, p.omega_eg_2 + p.omega_drive_prime - 2.0 * p.omega_drive)),
          f1(p.f1), f2(p.f2), f1_conj(std::conj(p.f1)), f2_conj(std::conj(p.f2)),
          g(p.g), g_conj(std::conj(p.g)), eps_p(p.eps_p), eps_pp(p.eps_p_prime),
          chi(p.chi), gamma_ee_1(p.gamma_ee_1), gamma_ee_2(p.gamma_ee_2) {}

    void deriv(double /*t*/, const double* y, double* dy) const {
        const Complex a1(y[0], y[1]);
        const Complex a2(y[2], y[3]);
        const Complex a3(y[4], y[5]);
        const Complex rge1(y[6], y[7]);
        const double ree1 = y[8];
        const Complex rge2(y[9], y[10]);
        const double ree2 = y[11];
        const double inv1 = 2.0 * ree1 - 1.0;
        const double inv2 = 2.0 * ree2 - 1.0;

        const Complex a1sq = a1 * a1;
        const Complex d1 = c1 * a1 - 2.0 * kI * chi * std::conj(a1) * a2 * a3 + eps_p;
        const Complex d2 = c2 * a2 - kI * chi * std::conj(a3) * a1sq + eps_pp;
        const Complex d3 =
            c3 * a3 - kI * chi * std::conj(a2) * a1sq - kI * f1 * rge1 - kI * f2 * rge2;
        const Complex dge1 = ceg1 * rge1 + kI * f1_conj * a3 * inv1 + kI * g_conj * inv1 * rge2;
        const Complex dge2 = ceg2 * rge2 + kI * f2_conj * a3 * inv2 + kI * g * inv2 * rge1;
        // the emitter-emitter exchange terms are exact negatives of each other,
        // so the total population changes by decay only
        const double exchange = -2.0 * std::imag(g * std::conj(rge2) * rge1);
        const double dee1 =
            -gamma_ee_1 * ree1 - 2.0 * std::imag(f1 * std::conj(a3) * rge1) + exchange;
        const double dee2 =
            -gamma_ee_2 * ree2 - 2.0 * std::imag(f2 * std::conj(a3) * rge2) - exchange;

        dy[0] = d1.real(); dy[1] = d1.imag();
        dy[2] = d2.real(); dy[3] = d2.imag();
        dy[4] = d3.real(); dy[5] = d3.imag();
        dy[6] = dge1.real(); dy[7] = dge1.imag();
        dy[8] = dee1;
        dy[9] = dge2.real(); dy[10] = dge2.imag();
        dy[11] = dee2;
    }
};

// Lab-frame variants: full optical frequencies and explicit drive phases.
struct SingleLab {
    static constexpr int dim = 9;
    static constexpr std::size_t emitters = 1;

    Complex c1, c2, c3, ceg;
    Complex f, f_conj;
    Complex eps_p, eps_pp;
    double chi, gamma_ee, wd, wdp;

    explicit SingleLab(const SingleEmitterParams& p)
        : c1(-Complex(p.gamma1, p.omega1)), c2(-Complex(p.gamma2, p.omega2)),
          c3(-Complex(p.gamma3, p.omega3)), ceg(-Complex(p.gamma_eg, p.omega_eg)),
          f(p.f), f_conj(std::conj(p.f)), eps_p(p.eps_p), eps_pp(p.eps_p_prime),
          chi(p.chi), gamma_ee(p.gamma_ee), wd(p.omega_drive), wdp(p.omega_drive_prime) {}

    void deriv(double t, const double* y, double* dy) const {
        const Complex a1(y[0], y[1]);
        const Complex a2(y[2], y[3]);
        const Complex a3(y[4], y[5]);
        const Complex rge(y[6], y[7]);
        const double ree = y[8];
        const double inv = 2.0 * ree - 1.0;

        const Complex a1sq = a1 * a1;
        const Complex d1 = c1 * a1 - 2.0 * kI * chi * std::conj(a1) * a2 * a3 +
                           eps_p * std::polar(1.0, -wd * t);
        const Complex d2 = c2 * a2 - kI * chi * std::conj(a3) * a1sq +
                           eps_pp * std::polar(1.0, -wdp * t);
        const Complex d3 = c3 * a3 - kI * chi * std::conj(a2) * a1sq - kI * f * rge;
        const Complex dge = ceg * rge + kI * f_conj * a3 * inv;
        const double dee = -gamma_ee * ree - 2.0 * std::imag(f * std::conj(a3) * rge);

        dy[0] = d1.real(); dy[1] = d1.imag();
        dy[2] = d2.real(); dy[3] = d2.imag();
        dy[4] = d3.real(); dy[5] = d3.imag();
        dy[6] = dge.real(); dy[7] = dge.imag();
        dy[8] = dee;
    }
};

struct CoupledLab {
    static constexpr int dim = 12;
    static constexpr std::size_t emitters = 2;

    Complex c1, c2, c3, ceg1, ceg2;
    Complex f1, f2, f1_conj, f2_conj, g, g_conj;
    Complex eps_p, eps_pp;
    double chi, gamma_ee_1, gamma_ee_2, wd, wdp;

    explicit CoupledLab(const CoupledEmitterParams& p)
        : c1(-Complex(p.gamma1, p.omega1)), c2(-Complex(p.gamma2, p.omega2)),
          c3(-Complex(p.gamma3, p.omega3)), ceg1(-Complex(p.gamma_eg_1, p.omega_eg_1)),
          ceg2(-Complex(p.gamma_eg_2, p.omega_eg_2)), f1(p.f1), f2(p.f2),
          f1_conj(std::conj(p.f1)), f2_conj(std::conj(p.f2)), g(p.g), g_conj(std::conj(p.g)),
          eps_p(p.eps_p), eps_pp(p.eps_p_prime), chi(p.chi), gamma_ee_1(p.gamma_ee_1),
          gamma_ee_2(p.gamma_ee_2), wd(p.omega_drive), wdp(p.omega_drive_prime) {}

    void deriv(double t, const double* y, double* dy) const {
        const Complex a1(y[0], y[1]);
        const Complex a2(y[2], y[3]);
        const Complex a3(y[4], y[5]);
        const Complex rge1(y[6], y[7]);
        const double ree1 = y[8];
        const Complex rge2(y[9], y[10]);
        const double ree2 = y[11];
        const double inv1 = 2.0 * ree1 - 1.0;
        const double inv2 = 2.0 * ree2 - 1.0;

        const Complex a1sq = a1 * a1;
        const Complex d1 = c1 * a1 - 2.0 * kI * chi * std::conj(a1) * a2 * a3 +
                           eps_p * std::polar(1.0, -wd * t);
        const Complex d2 = c2 * a2 - kI * chi * std::conj(a3) * a1sq +
                           eps_pp * std::polar(1.0, -wdp * t);
        const Complex d3 =
            c3 * a3 - kI * chi * std::conj(a2) * a1sq - kI * f1 * rge1 - kI * f2 * rge2;
        const Complex dge1 = ceg1 * rge1 + kI * f1_conj * a3 * inv1 + kI * g_conj * inv1 * rge2;
        const Complex dge2 = ceg2 * rge2 + kI * f2_conj * a3 * inv2 + kI * g * inv2 * rge1;
        const double exchange = -2.0 * std::imag(g * std::conj(rge2) * rge1);
        const double dee1 =
            -gamma_ee_1 * ree1 - 2.0 * std::imag(f1 * std::conj(a3) * rge1) + exchange;
        const double dee2 =
            -gamma_ee_2 * ree2 - 2.0 * std::imag(f2 * std::conj(a3) * rge2) - exchange;

        dy[0] = d1.real(); dy[1] = d1.imag();
        dy[2] = d2.real(); dy[3] = d2.imag();
        dy[4] = d3.real(); dy[5] = d3.imag();
        dy[6] = dge1.real(); dy[7] = dge1.imag();
        dy[8] = dee1;
        dy[9] = dge2.real(); dy[10] = dge2.imag();
        dy[11] = dee2;
    }
};

// ---------------------------------------------------------------------------
// State <-> flat vector
// ---------------------------------------------------------------------------

void flatten(const HybridState& s, double* y) {
    y[0] = s.alpha[0].real(); y[1] = s.alpha[0].imag();
    y[2] = s.alpha[1].real(); y[3] = s.alpha[1].imag();
    y[4] = s.alpha[2].real(); y[5] = s.alpha[2].imag();
    std::size_t k = 6;
    for (std::size_t e = 0; e < s.emitter_count; ++e) {
        y[k++] = s.emitters[e].rho_ge.real();
        y[k++] = s.emitters[e].rho_ge.imag();
        y[k++] = s.emitters[e].rho_ee;
    }
}

HybridState unflatten(const double* y, std::size_t emitter_count) {
    HybridState s;
    s.emitter_count = emitter_count;
    s.alpha[0] = Complex(y[0], y[1]);
    s.alpha[1] = Complex(y[2], y[3]);
    s.alpha[2] = Complex(y[4], y[5]);
    std::size_t k = 6;
    for (std::size_t e = 0; e < emitter_count; ++e) {
        s.emitters[e].rho_ge = Complex(y[k], y[k + 1]);
        s.emitters[e].rho_ee = y[k + 2];
        k += 3;
    }
    return s;
}

template <int N>
double inf_norm(const double* v) {
    double m = 0.0;
    for (int i = 0; i < N; ++i) m = std::max(m, std::abs(v[i]));
    return m;
}

// ---------------------------------------------------------------------------
// Dormand-Prince 5(4) with FSAL and standard step-size control.
// ---------------------------------------------------------------------------

struct StepStats {
    std::uint64_t steps = 0;
    std::uint64_t rhs_evals = 0;
    bool step_underflow = false;
};

// Observer: bool observe(double t, const double* y, const double* dy);
// return false to stop the integration early.
template <class Sys, class Observer>
StepStats integrate_adaptive(const Sys& sys, double* y, double t0, double t_end,
                             double rel_tol, double abs_tol, double max_step,
                             Observer&& observe) {
    constexpr int N = Sys::dim;
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                     a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                     a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                     b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                     e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    double k1[N], k2[N], k3[N], k4[N], k5[N], k6[N], k7[N];
    double ytmp[N], ynew[N];

    StepStats stats;
    double t = t0;
    sys.deriv(t, y, k1);
    ++stats.rhs_evals;
    if (!observe(t, y, k1)) return stats;

    // initial step: conservative scale from the first derivative
    double h;
    {
        const double d0 = inf_norm<N>(y);
        const double d1 = inf_norm<N>(k1);
        h = (d1 > 1e-12) ? 0.01 * std::max(d0, 1.0) / d1 : 1e-3;
        h = std::min({h, max_step, t_end - t0});
        h = std::max(h, 1e-12);
    }

    bool last_rejected = false;
    while (t < t_end) {
        h = std::min(h, std::min(max_step, t_end - t));
        if (!(h > std::abs(t) * 1e-14 + 1e-300) || !std::isfinite(h)) {
            stats.step_underflow = true;
            break;
        }

        for (int i = 0; i < N; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
        sys.deriv(t + c2 * h, ytmp, k2);
        for (int i = 0; i < N; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        sys.deriv(t + c3 * h, ytmp, k3);
        for (int i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        sys.deriv(t + c4 * h, ytmp, k4);
        for (int i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        sys.deriv(t + c5 * h, ytmp, k5);
        for (int i = 0; i < N; ++i)
            ytmp[i] = y[i] +
                      h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        sys.deriv(t + h, ytmp, k6);
        for (int i = 0; i < N; ++i)
            ynew[i] = y[i] +
                      h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        sys.deriv(t + h, ynew, k7);
        stats.rhs_evals += 6;

        double err_sq = 0.0;
        for (int i = 0; i < N; ++i) {
            const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                   e6 * k6[i] + e7 * k7[i]);
            const double sc = abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            const double q = ei / sc;
            err_sq += q * q;
        }
        const double err = std::sqrt(err_sq / N);

        if (err <= 1.0 || !std::isfinite(err)) {
            if (!std::isfinite(err)) {
                // state blew up; surface it as a stalled step
                stats.step_underflow = true;
                break;
            }
            t += h;
            ++stats.steps;
            for (int i = 0; i < N; ++i) {
                y[i] = ynew[i];
                k1[i] = k7[i]; // FSAL
            }
            if (!observe(t, y, k1)) return stats;
            const double facmax = last_rejected ? 1.0 : 10.0;
            const double fac = (err > 0.0) ? 0.9 * std::pow(err, -0.2) : facmax;
            h *= std::clamp(fac, 0.2, facmax);
            last_rejected = false;
        } else {
            h *= std::clamp(0.9 * std::pow(err, -0.2), 0.1, 1.0);
            last_rejected = true;
        }
    }
    return stats;
}

// ---------------------------------------------------------------------------
// Steady-state driver
// ---------------------------------------------------------------------------

template <class Sys>
SteadyStateResult run_to_steady_state(const Sys& sys, const HybridState& init,
                                      const IntegrationSettings& settings) {
    constexpr int N = Sys::dim;
    validate(settings);
    check_state(init);

    double y[N];
    flatten(init, y);

    SteadyStateResult res;
    double below_since = -1.0;
    double last_residual = 0.0;
    double last_t = 0.0;
    bool converged = false;

    auto observer = [&](double t, const double* yv, const double* dyv) {
        last_t = t;
        last_residual = inf_norm<N>(dyv);

        const HybridState hs = unflatten(yv, Sys::emitters);
        res.max_population_excursion =
            std::max(res.max_population_excursion, population_excursion(hs));
        res.max_positivity_defect = std::max(res.max_positivity_defect, positivity_defect(hs));
        if (settings.enforce_invariants &&
            (res.max_population_excursion > kPositivityTol ||
             res.max_positivity_defect > kPositivityTol)) {
            throw InvariantViolation(
                "density-matrix positivity broken along the trajectory; "
                "integrator tolerances are too loose for these parameters");
        }

        const double threshold = settings.steady_residual_tol * std::max(1.0, inf_norm<N>(yv));
        if (last_residual < threshold) {
            if (below_since < 0.0) below_since = t;
            if (t - below_since >= settings.residual_window) {
                converged = true;
                return false;
            }
        } else {
            below_since = -1.0;
        }
        return true;
    };

    const double max_step = settings.residual_window / 4.0;
    const StepStats stats = integrate_adaptive(sys, y, 0.0, settings.max_time,
                                               settings.rel_tol, settings.abs_tol,
                                               max_step, observer);

    res.state = unflatten(y, Sys::emitters);
    res.converged = converged;
    res.final_residual = last_residual;
    res.elapsed_sim_time = last_t;
    res.fwm_intensity = std::norm(res.state.alpha[2]);
    res.steps = stats.steps;
    res.rhs_evals = stats.rhs_evals;
    return res;
}

// ---------------------------------------------------------------------------
// Frame-equivalence driver
// ---------------------------------------------------------------------------

template <class RotSys, class LabSys>
double run_lab_frame_check(const RotSys& rot, const LabSys& lab, double wd, double wdp,
                           const IntegrationSettings& settings, double horizon) {
    constexpr int N = RotSys::dim;
    static_assert(N == LabSys::dim);
    if (!(horizon > 0.0)) throw ValidationError("horizon must be strictly positive");

    constexpr int n_samples = 200;
    const double big = horizon * 10.0; // no early stop wanted
    auto no_stop = [](double, const double*, const double*) { return true; };

    double y_rot[N] = {0.0};
    double y_lab[N] = {0.0};
    const double wc = 2.0 * wd - wdp; // converted-mode frame frequency

    double max_dev = 0.0;
    double t = 0.0;
    for (int s = 1; s <= n_samples; ++s) {
        const double t_next = horizon * s / n_samples;
        integrate_adaptive(rot, y_rot, t, t_next, settings.rel_tol, settings.abs_tol, big,
                           no_stop);
        integrate_adaptive(lab, y_lab, t, t_next, settings.rel_tol, settings.abs_tol, big,
                           no_stop);
        t = t_next;

        // demodulate the lab trajectory onto envelopes
        const Complex ph1 = std::polar(1.0, wd * t);
        const Complex ph2 = std::polar(1.0, wdp * t);
        const Complex ph3 = std::polar(1.0, wc * t);
        const Complex phases[3] = {ph1, ph2, ph3};
        for (int m = 0; m < 3; ++m) {
            const Complex env_lab = Complex(y_lab[2 * m], y_lab[2 * m + 1]) * phases[m];
            const Complex env_rot(y_rot[2 * m], y_rot[2 * m + 1]);
            max_dev = std::max(max_dev, std::abs(env_lab - env_rot));
        }
        std::size_t k = 6;
        for (std::size_t e = 0; e < RotSys::emitters; ++e) {
            const Complex coh_lab = Complex(y_lab[k], y_lab[k + 1]) * ph3;
            const Complex coh_rot(y_rot[k], y_rot[k + 1]);
            max_dev = std::max(max_dev, std::abs(coh_lab - coh_rot));
            max_dev = std::max(max_dev, std::abs(y_lab[k + 2] - y_rot[k + 2]));
            k += 3;
        }
    }
    return max_dev;
}

} // namespace

// ---------------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------------

HybridState rhs_single(const HybridState& state, const SingleEmitterParams& p) {
    validate(p);
    double y[SingleRotating::dim], dy[SingleRotating::dim];
    flatten(state, y);
    SingleRotating(p).deriv(0.0, y, dy);
    return unflatten(dy, 1);
}

HybridState rhs_coupled(const HybridState& state, const CoupledEmitterParams& p) {
    validate(p);
    double y[CoupledRotating::dim], dy[CoupledRotating::dim];
    flatten(state, y);
    CoupledRotating(p).deriv(0.0, y, dy);
    return unflatten(dy, 2);
}

double steady_residual(const HybridState& state, const SingleEmitterParams& p) {
    double y[SingleRotating::dim], dy[SingleRotating::dim];
    flatten(state, y);
    SingleRotating(p).deriv(0.0, y, dy);
    return inf_norm<SingleRotating::dim>(dy);
}

double steady_residual(const HybridState& state, const CoupledEmitterParams& p) {
    double y[CoupledRotating::dim], dy[CoupledRotating::dim];
    flatten(state, y);
    CoupledRotating(p).deriv(0.0, y, dy);
    return inf_norm<CoupledRotating::dim>(dy);
}

SteadyStateResult integrate_to_steady_state(const SingleEmitterParams& p,
                                            const HybridState& init,
                                            const IntegrationSettings& settings) {
    validate(p);
    if (init.emitter_count != 1) throw ValidationError("expected a single-emitter state");
    return run_to_steady_state(SingleRotating(p), init, settings);
}

SteadyStateResult integrate_to_steady_state(const CoupledEmitterParams& p,
                                            const HybridState& init,
                                            const IntegrationSettings& settings) {
    validate(p);
    if (init.emitter_count != 2) throw ValidationError("expected a two-emitter state");
    return run_to_steady_state(CoupledRotating(p), init, settings);
}

SteadyStateResult integrate_to_steady_state(const SingleEmitterParams& p,
                                            const IntegrationSettings& settings) {
    return integrate_to_steady_state(p, zero_state(1), settings);
}

SteadyStateResult integrate_to_steady_state(const CoupledEmitterParams& p,
                                            const IntegrationSettings& settings) {
    return integrate_to_steady_state(p, zero_state(2), settings);
}

double lab_frame_check(const SingleEmitterParams& p, const IntegrationSettings& settings,
                       double horizon) {
    validate(p);
    return run_lab_frame_check(SingleRotating(p), SingleLab(p), p.omega_drive,
                               p.omega_drive_prime, settings, horizon);
}

double lab_frame_check(const CoupledEmitterParams& p, const IntegrationSettings& settings,
                       double horizon) {
    validate(p);
    return run_lab_frame_check(CoupledRotating(p), CoupledLab(p), p.omega_drive,
                               p.omega_drive_prime, settings, horizon);
}

} // namespace fwm
