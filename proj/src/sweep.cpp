#include "fwm/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "fwm/closed_form.hpp"

namespace fwm {

namespace {

double grid_value(const SweepSpec& spec, int i) {
    // endpoints exact, interior points on the uniform lattice
    if (i == 0) return spec.start;
    if (i == spec.n_points - 1) return spec.stop;
    return spec.start + (spec.stop - spec.start) * static_cast<double>(i) /
                            static_cast<double>(spec.n_points - 1);
}

// Runs fn(i) for i in [0, n) on `workers` threads; exceptions are rethrown
// on the calling thread. Results must be written into index-addressed slots
// by fn itself, which keeps the output deterministic for any worker count.
void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
    workers = std::max(1, std::min(workers, n));
    if (workers == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

SteadyStateResult integrate_variant(const ParamsVariant& params,
                                    const IntegrationSettings& settings) {
    return std::visit(
        [&](const auto& p) { return integrate_to_steady_state(p, settings); }, params);
}

ParamsVariant baseline_params(const ParamsVariant& params, BaselineKind kind) {
    ParamsVariant base = params;
    std::visit(
        [&](auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, SingleEmitterParams>) {
                p.f = 0.0;
            } else {
                p.f1 = 0.0;
                p.f2 = 0.0;
            }
            if (kind == BaselineKind::ResonantNoEmitter) {
                p.omega3 = p.converted_frame_freq();
            }
        },
        base);
    return base;
}

struct PointOutcome {
    SweepPoint point;
};

} // namespace

std::string to_string(BaselineKind k) {
    switch (k) {
    case BaselineKind::ResonantNoEmitter: return "resonant_no_emitter";
    case BaselineKind::OffResonantNoEmitter: return "off_resonant_no_emitter";
    case BaselineKind::SingleEmitterOptimum: return "single_emitter_optimum";
    }
    return "unknown";
}

void validate(const SweepSpec& spec) {
    if (!(spec.start < spec.stop)) {
        throw ValidationError("sweep.start must be smaller than sweep.stop");
    }
    if (spec.n_points < 2) {
        throw ValidationError("sweep.n_points must be at least 2");
    }
    std::visit([](const auto& p) { validate(p); }, spec.base_params);
    apply_target(spec.base_params, spec.target, spec.start); // rejects bad targets
}

ParamsVariant apply_target(const ParamsVariant& base, const std::string& target,
                           double value) {
    ParamsVariant out = base;
    bool handled = false;
    auto set_modulus = [&](Complex& field) {
        const double mag = std::abs(field);
        field = (mag > 0.0) ? field * (value / mag) : Complex(value, 0.0);
        handled = true;
    };
    std::visit(
        [&](auto& p) {
            using P = std::decay_t<decltype(p)>;
            if (target == "omega1") { p.omega1 = value; handled = true; }
            else if (target == "omega2") { p.omega2 = value; handled = true; }
            else if (target == "omega3") { p.omega3 = value; handled = true; }
            else if (target == "chi") { p.chi = value; handled = true; }
            if constexpr (std::is_same_v<P, SingleEmitterParams>) {
                if (target == "omega_eg") { p.omega_eg = value; handled = true; }
                else if (target == "gamma_eg") { p.gamma_eg = value; handled = true; }
                else if (target == "f") set_modulus(p.f);
            } else {
                if (target == "omega_eg_1") { p.omega_eg_1 = value; handled = true; }
                else if (target == "omega_eg_2") { p.omega_eg_2 = value; handled = true; }
                else if (target == "gamma_eg_1") { p.gamma_eg_1 = value; handled = true; }
                else if (target == "gamma_eg_2") { p.gamma_eg_2 = value; handled = true; }
                else if (target == "f1") set_modulus(p.f1);
                else if (target == "f2") set_modulus(p.f2);
                else if (target == "g_modulus") set_modulus(p.g);
            }
        },
        out);
    if (!handled) {
        throw ValidationError("unknown sweep target '" + target + "'");
    }
    return out;
}

int resolve_worker_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("FWM_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

double baseline_intensity(const ParamsVariant& params, BaselineKind kind,
                          const IntegrationSettings& settings, int workers) {
    if (kind == BaselineKind::SingleEmitterOptimum) {
        // best emitter-1-only enhancement over the default enhancement range
        SingleEmitterParams single = std::visit(
            [](const auto& p) {
                using P = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<P, SingleEmitterParams>) return p;
                else return p.reduce_to_single();
            },
            params);
        SweepSpec spec;
        spec.target = "omega_eg";
        spec.start = 1.40;
        spec.stop = 1.70;
        spec.n_points = 301;
        spec.base_params = single;
        const OptimumResult opt =
            find_optimum(spec, BaselineKind::OffResonantNoEmitter, settings, workers);
        return opt.fwm_intensity;
    }
    const SteadyStateResult res =
        integrate_variant(baseline_params(params, kind), settings);
    if (!res.converged) {
        throw NonConvergence("baseline run did not reach a steady state");
    }
    return res.fwm_intensity;
}

SweepCurve run_sweep(const SweepSpec& spec, BaselineKind baseline,
                     const IntegrationSettings& settings, int workers) {
    validate(spec);
    validate(settings);
    workers = resolve_worker_count(workers);

    SweepCurve curve;
    curve.baseline_kind = baseline;
    curve.baseline_intensity = baseline_intensity(spec.base_params, baseline, settings,
                                                  workers);
    curve.emitter_count =
        std::holds_alternative<CoupledEmitterParams>(spec.base_params) ? 2 : 1;
    curve.points.resize(spec.n_points);

    parallel_for(spec.n_points, workers, [&](int i) {
        const double x = grid_value(spec, i);
        const ParamsVariant point_params = apply_target(spec.base_params, spec.target, x);
        const SteadyStateResult res = integrate_variant(point_params, settings);

        SweepPoint pt;
        pt.param_value = x;
        pt.converged = res.converged;
        pt.factor = res.fwm_intensity / curve.baseline_intensity;
        // store the product form so factor * baseline == fwm_intensity exactly
        pt.fwm_intensity = pt.factor * curve.baseline_intensity;
        pt.rho_ee_1 = res.state.emitters[0].rho_ee;
        if (curve.emitter_count == 2) pt.rho_ee_2 = res.state.emitters[1].rho_ee;
        curve.points[i] = pt;
    });
    return curve;
}

std::pair<double, double> golden_section_maximize(
    const std::function<double(double)>& f, double lo, double hi, double xtol) {
    if (!(lo < hi)) throw ValidationError("golden section needs lo < hi");
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        }
    }
    return (f1 > f2) ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

OptimumResult find_optimum(const SweepSpec& spec, BaselineKind baseline,
                           const IntegrationSettings& settings, int workers) {
    validate(spec);
    validate(settings);
    workers = resolve_worker_count(workers);

    const double base =
        baseline_intensity(spec.base_params, baseline, settings, workers);

    auto evaluate = [&](double x) {
        const ParamsVariant point_params = apply_target(spec.base_params, spec.target, x);
        const SteadyStateResult res = integrate_variant(point_params, settings);
        return res.converged ? res.fwm_intensity / base : 0.0;
    };

    // scan grid: spec resolution, densified around the closed-form resonance
    // roots when sweeping an emitter spacing (the enhancement peak can be
    // narrower than any reasonable uniform grid)
    std::vector<double> xs;
    xs.reserve(spec.n_points + 64);
    for (int i = 0; i < spec.n_points; ++i) xs.push_back(grid_value(spec, i));
    if (spec.target == "omega_eg" || spec.target == "omega_eg_1" ||
        spec.target == "omega_eg_2") {
        const SingleEmitterParams seed = std::visit(
            [](const auto& p) {
                using P = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<P, SingleEmitterParams>) return p;
                else return p.reduce_to_single();
            },
            spec.base_params);
        try {
            const auto roots = enhancement_roots(seed, -1.0);
            for (double root : {roots.first, roots.second}) {
                if (root <= spec.start || root >= spec.stop) continue;
                const double half_width = 5e-3;
                for (int k = -10; k <= 10; ++k) {
                    const double x = root + half_width * k / 10.0;
                    if (x > spec.start && x < spec.stop) xs.push_back(x);
                }
            }
        } catch (const Error&) {
            // resonant configuration or complex roots: plain grid scan
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<double> factors(xs.size());
    parallel_for(static_cast<int>(xs.size()), workers,
                 [&](int i) { factors[i] = evaluate(xs[i]); });

    std::size_t best = 0;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (factors[i] > factors[best]) best = i;
    }
    if (best == 0 || best + 1 == xs.size()) {
        throw NoInteriorOptimum("scan maximum lies on the sweep boundary");
    }

    const auto [x_opt, f_opt] =
        golden_section_maximize(evaluate, xs[best - 1], xs[best + 1], 1e-5);

    OptimumResult out;
    // keep the grid maximum if refinement straddled the wrong sub-interval
    if (factors[best] > f_opt) {
        out.param_value = xs[best];
        out.factor = factors[best];
    } else {
        out.param_value = x_opt;
        out.factor = f_opt;
    }
    out.baseline = base;
    out.fwm_intensity = out.factor * base;
    return out;
}

ComparisonReport coupled_vs_single_report(const SingleEmitterParams& single_params,
                                          const CoupledEmitterParams& coupled_params,
                                          const IntegrationSettings& settings,
                                          double sweep_start, double sweep_stop,
                                          int n_points, int workers) {
    validate(single_params);
    validate(coupled_params);
    auto near = [](Complex a, Complex b) { return std::abs(a - b) < 1e-12; };
    if (!near(single_params.eps_p, coupled_params.eps_p) ||
        !near(single_params.eps_p_prime, coupled_params.eps_p_prime)) {
        throw ValidationError("comparison requires identical pump amplitudes");
    }
    if (single_params.omega1 != coupled_params.omega1 ||
        single_params.omega2 != coupled_params.omega2 ||
        single_params.omega_drive != coupled_params.omega_drive ||
        single_params.omega_drive_prime != coupled_params.omega_drive_prime) {
        throw ValidationError("comparison requires identical pump-mode and drive frequencies");
    }
    if (single_params.gamma1 != coupled_params.gamma1 ||
        single_params.gamma2 != coupled_params.gamma2 ||
        single_params.gamma3 != coupled_params.gamma3) {
        throw ValidationError("comparison requires identical grating decay rates");
    }

    ComparisonReport report;
    SweepSpec single_spec;
    single_spec.target = "omega_eg";
    single_spec.start = sweep_start;
    single_spec.stop = sweep_stop;
    single_spec.n_points = n_points;
    single_spec.base_params = single_params;
    report.single_optimum =
        find_optimum(single_spec, BaselineKind::OffResonantNoEmitter, settings, workers);

    SweepSpec coupled_spec;
    coupled_spec.target = "omega_eg_1";
    coupled_spec.start = sweep_start;
    coupled_spec.stop = sweep_stop;
    coupled_spec.n_points = n_points;
    coupled_spec.base_params = coupled_params;
    report.coupled_optimum =
        find_optimum(coupled_spec, BaselineKind::OffResonantNoEmitter, settings, workers);

    report.ratio = report.coupled_optimum.factor / report.single_optimum.factor;
    return report;
}

} // namespace fwm
