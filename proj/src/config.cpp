#include "fwm/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <sstream>
#include <vector>

#include "fwm/presets.hpp"

namespace fwm {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size()) {
        throw ParseError("value of '" + key + "' is not a number: '" + text + "'");
    }
    return v;
}

int parse_int(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    char* end = nullptr;
    const long v = std::strtol(t.c_str(), &end, 10);
    if (t.empty() || end != t.c_str() + t.size()) {
        throw ParseError("value of '" + key + "' is not an integer: '" + text + "'");
    }
    return static_cast<int>(v);
}

bool parse_bool(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    if (t == "true" || t == "yes" || t == "1") return true;
    if (t == "false" || t == "no" || t == "0") return false;
    throw ParseError("value of '" + key + "' is not a boolean: '" + text + "'");
}

const std::set<std::string> kCommonParamKeys = {
    "omega1", "omega2", "omega3", "gamma1", "gamma2", "gamma3",
    "chi", "eps_p", "eps_p_prime", "omega_drive", "omega_drive_prime"};
const std::set<std::string> kSingleParamKeys = {"omega_eg", "gamma_ee", "gamma_eg", "f"};
const std::set<std::string> kCoupledParamKeys = {
    "omega_eg_1", "omega_eg_2", "gamma_ee_1", "gamma_ee_2",
    "gamma_eg_1", "gamma_eg_2", "f1", "f2", "g"};

bool is_param_key(const std::string& field, bool coupled) {
    if (kCommonParamKeys.count(field)) return true;
    return coupled ? kCoupledParamKeys.count(field) > 0
                   : kSingleParamKeys.count(field) > 0;
}

void set_single_field(SingleEmitterParams& p, const std::string& field,
                      const std::string& key, const std::string& value) {
    if (field == "omega1") p.omega1 = parse_double(key, value);
    else if (field == "omega2") p.omega2 = parse_double(key, value);
    else if (field == "omega3") p.omega3 = parse_double(key, value);
    else if (field == "omega_eg") p.omega_eg = parse_double(key, value);
    else if (field == "gamma1") p.gamma1 = parse_double(key, value);
    else if (field == "gamma2") p.gamma2 = parse_double(key, value);
    else if (field == "gamma3") p.gamma3 = parse_double(key, value);
    else if (field == "gamma_ee") p.gamma_ee = parse_double(key, value);
    else if (field == "gamma_eg") p.gamma_eg = parse_double(key, value);
    else if (field == "chi") p.chi = parse_double(key, value);
    else if (field == "f") p.f = parse_complex(value);
    else if (field == "eps_p") p.eps_p = parse_complex(value);
    else if (field == "eps_p_prime") p.eps_p_prime = parse_complex(value);
    else if (field == "omega_drive") p.omega_drive = parse_double(key, value);
    else if (field == "omega_drive_prime") p.omega_drive_prime = parse_double(key, value);
    else throw UnknownKeyError("unknown key '" + key + "'");
}

void set_coupled_field(CoupledEmitterParams& p, const std::string& field,
                       const std::string& key, const std::string& value) {
    if (field == "omega1") p.omega1 = parse_double(key, value);
    else if (field == "omega2") p.omega2 = parse_double(key, value);
    else if (field == "omega3") p.omega3 = parse_double(key, value);
    else if (field == "omega_eg_1") p.omega_eg_1 = parse_double(key, value);
    else if (field == "omega_eg_2") p.omega_eg_2 = parse_double(key, value);
    else if (field == "gamma1") p.gamma1 = parse_double(key, value);
    else if (field == "gamma2") p.gamma2 = parse_double(key, value);
    else if (field == "gamma3") p.gamma3 = parse_double(key, value);
    else if (field == "gamma_ee_1") p.gamma_ee_1 = parse_double(key, value);
    else if (field == "gamma_ee_2") p.gamma_ee_2 = parse_double(key, value);
    else if (field == "gamma_eg_1") p.gamma_eg_1 = parse_double(key, value);
    else if (field == "gamma_eg_2") p.gamma_eg_2 = parse_double(key, value);
    else if (field == "chi") p.chi = parse_double(key, value);
    else if (field == "f1") p.f1 = parse_complex(value);
    else if (field == "f2") p.f2 = parse_complex(value);
    else if (field == "g") p.g = parse_complex(value);
    else if (field == "eps_p") p.eps_p = parse_complex(value);
    else if (field == "eps_p_prime") p.eps_p_prime = parse_complex(value);
    else if (field == "omega_drive") p.omega_drive = parse_double(key, value);
    else if (field == "omega_drive_prime") p.omega_drive_prime = parse_double(key, value);
    else throw UnknownKeyError("unknown key '" + key + "'");
}

struct KeyValue {
    std::string key;
    std::string value;
    int line = 0;
};

std::vector<KeyValue> tokenize(const std::string& text) {
    std::vector<KeyValue> out;
    std::istringstream stream(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ParseError("line " + std::to_string(line_no) +
                                 ": unterminated section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty()) {
                throw ParseError("line " + std::to_string(line_no) + ": empty section name");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected 'key = value', got '" + line + "'");
        }
        std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ParseError("line " + std::to_string(line_no) + ": empty key");
        }
        // dotted keys are absolute; bare keys inherit the current section
        if (!section.empty() && key.find('.') == std::string::npos) {
            key = section + "." + key;
        }
        out.push_back({key, value, line_no});
    }
    return out;
}

RunMode parse_mode(const std::string& value) {
    if (value == "simulate") return RunMode::Simulate;
    if (value == "sweep") return RunMode::Sweep;
    if (value == "optimize") return RunMode::Optimize;
    if (value == "validate") return RunMode::Validate;
    throw ParseError("unknown mode '" + value +
                     "' (expected simulate, sweep, optimize or validate)");
}

BaselineKind parse_baseline(const std::string& value) {
    if (value == "resonant_no_emitter") return BaselineKind::ResonantNoEmitter;
    if (value == "off_resonant_no_emitter") return BaselineKind::OffResonantNoEmitter;
    if (value == "single_emitter_optimum") return BaselineKind::SingleEmitterOptimum;
    throw ParseError("unknown baseline '" + value + "'");
}

} // namespace

Complex parse_complex(const std::string& text) {
    std::string t = trim(text);
    if (t.empty()) throw ParseError("empty complex value");

    if (t.front() == '(' && t.back() == ')') {
        const std::string inner = t.substr(1, t.size() - 2);
        const auto comma = inner.find(',');
        if (comma == std::string::npos) {
            throw ParseError("complex value '" + text + "' needs '(re, im)'");
        }
        return {parse_double("complex", inner.substr(0, comma)),
                parse_double("complex", inner.substr(comma + 1))};
    }

    if (t.back() != 'i' && t.back() != 'I') {
        return {parse_double("complex", t), 0.0};
    }
    t.pop_back();
    // split at the last +/- that is not a leading sign or exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t i = t.size(); i-- > 1;) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto imag_of = [&](std::string part) {
        part = trim(part);
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        return parse_double("complex", part);
    };
    if (split == std::string::npos) {
        return {0.0, imag_of(t)};
    }
    return {parse_double("complex", t.substr(0, split)), imag_of(t.substr(split))};
}

RunConfig parse_config(const std::string& text) {
    const std::vector<KeyValue> items = tokenize(text);

    // preset and variant shape the parameter block; pick them up first
    std::optional<std::string> preset;
    bool coupled = false;
    bool variant_given = false;
    for (const auto& kv : items) {
        if (kv.key == "preset") {
            preset = kv.value;
        } else if (kv.key == "params.variant") {
            if (kv.value == "single") coupled = false;
            else if (kv.value == "coupled") coupled = true;
            else throw ParseError("params.variant must be 'single' or 'coupled'");
            variant_given = true;
        }
    }

    RunConfig cfg;
    std::optional<SweepSpec> preset_sweep;
    if (preset) {
        const Preset p = preset_by_name(*preset);
        cfg.preset = preset;
        cfg.params = p.params;
        cfg.baseline = p.baseline;
        preset_sweep = p.sweep;
        coupled = std::holds_alternative<CoupledEmitterParams>(p.params);
        if (variant_given) {
            const bool preset_coupled = coupled;
            for (const auto& kv : items) {
                if (kv.key == "params.variant") {
                    const bool asked_coupled = kv.value == "coupled";
                    if (asked_coupled != preset_coupled) {
                        throw ValidationError("params.variant conflicts with preset '" +
                                              *preset + "'");
                    }
                }
            }
        }
    } else if (coupled) {
        cfg.params = CoupledEmitterParams{};
    } else {
        cfg.params = SingleEmitterParams{};
    }

    std::set<std::string> params_seen;
    std::set<std::string> sweep_seen;
    bool baseline_given = false;

    for (const auto& kv : items) {
        const std::string& key = kv.key;
        if (key == "preset" || key == "params.variant") continue;

        if (key == "mode") {
            cfg.mode = parse_mode(kv.value);
        } else if (key == "output" || key == "out") {
            cfg.output_path = kv.value;
        } else if (key == "workers") {
            cfg.workers = parse_int(key, kv.value);
            if (cfg.workers < 0) throw ValidationError("workers must be non-negative");
        } else if (key == "baseline" || key == "sweep.baseline") {
            cfg.baseline = parse_baseline(kv.value);
            baseline_given = true;
        } else if (key.rfind("params.", 0) == 0) {
            const std::string field = key.substr(7);
            if (coupled) {
                set_coupled_field(std::get<CoupledEmitterParams>(cfg.params), field, key,
                                  kv.value);
            } else {
                set_single_field(std::get<SingleEmitterParams>(cfg.params), field, key,
                                 kv.value);
            }
            params_seen.insert(field);
        } else if (key == "sweep.target") {
            if (!cfg.sweep) cfg.sweep = preset_sweep.value_or(SweepSpec{});
            cfg.sweep->target = kv.value;
            sweep_seen.insert("target");
        } else if (key == "sweep.start") {
            if (!cfg.sweep) cfg.sweep = preset_sweep.value_or(SweepSpec{});
            cfg.sweep->start = parse_double(key, kv.value);
            sweep_seen.insert("start");
        } else if (key == "sweep.stop") {
            if (!cfg.sweep) cfg.sweep = preset_sweep.value_or(SweepSpec{});
            cfg.sweep->stop = parse_double(key, kv.value);
            sweep_seen.insert("stop");
        } else if (key == "sweep.n_points") {
            if (!cfg.sweep) cfg.sweep = preset_sweep.value_or(SweepSpec{});
            cfg.sweep->n_points = parse_int(key, kv.value);
            sweep_seen.insert("n_points");
        } else if (key == "settings.rel_tol") {
            cfg.settings.rel_tol = parse_double(key, kv.value);
            cfg.settings_given = true;
        } else if (key == "settings.abs_tol") {
            cfg.settings.abs_tol = parse_double(key, kv.value);
            cfg.settings_given = true;
        } else if (key == "settings.steady_residual_tol") {
            cfg.settings.steady_residual_tol = parse_double(key, kv.value);
            cfg.settings_given = true;
        } else if (key == "settings.max_time") {
            cfg.settings.max_time = parse_double(key, kv.value);
            cfg.settings_given = true;
        } else if (key == "settings.residual_window") {
            cfg.settings.residual_window = parse_double(key, kv.value);
            cfg.settings_given = true;
        } else if (key == "settings.enforce_invariants") {
            cfg.settings.enforce_invariants = parse_bool(key, kv.value);
        } else {
            throw UnknownKeyError("unknown key '" + key + "' (line " +
                                  std::to_string(kv.line) + ")");
        }
    }

    if (!preset) {
        // a complete parameter block is required when no preset anchors it
        std::vector<std::string> required(kCommonParamKeys.begin(), kCommonParamKeys.end());
        const auto& extra = coupled ? kCoupledParamKeys : kSingleParamKeys;
        required.insert(required.end(), extra.begin(), extra.end());
        for (const auto& field : required) {
            if (!params_seen.count(field)) {
                throw ValidationError("params." + field +
                                      " is required when no preset is given");
            }
        }
    }

    if (!cfg.sweep && preset_sweep &&
        (cfg.mode == RunMode::Sweep || cfg.mode == RunMode::Optimize)) {
        cfg.sweep = preset_sweep;
    }
    if (cfg.sweep) {
        if (!preset) {
            for (const char* field : {"target", "start", "stop"}) {
                if (!sweep_seen.count(field)) {
                    throw ValidationError(std::string("sweep.") + field +
                                          " is required when no preset is given");
                }
            }
        }
        cfg.sweep->base_params = cfg.params;
    }
    if (!baseline_given && !preset) {
        cfg.baseline = BaselineKind::ResonantNoEmitter;
    }

    finalize_config(cfg);
    return cfg;
}

void apply_override(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "preset") {
        throw ValidationError("preset cannot be changed by an override; "
                              "use --preset or the config file");
    }
    const bool coupled = std::holds_alternative<CoupledEmitterParams>(cfg.params);
    if (key == "mode") {
        cfg.mode = parse_mode(value);
    } else if (key == "output" || key == "out") {
        cfg.output_path = value;
    } else if (key == "workers") {
        cfg.workers = parse_int(key, value);
    } else if (key == "baseline" || key == "sweep.baseline") {
        cfg.baseline = parse_baseline(value);
    } else if (key.rfind("params.", 0) == 0) {
        const std::string field = key.substr(7);
        if (!is_param_key(field, coupled)) {
            throw UnknownKeyError("unknown key '" + key + "'");
        }
        if (coupled) {
            set_coupled_field(std::get<CoupledEmitterParams>(cfg.params), field, key, value);
        } else {
            set_single_field(std::get<SingleEmitterParams>(cfg.params), field, key, value);
        }
        if (cfg.sweep) cfg.sweep->base_params = cfg.params;
    } else if (key == "sweep.target" || key == "sweep.start" || key == "sweep.stop" ||
               key == "sweep.n_points") {
        if (!cfg.sweep) {
            cfg.sweep = SweepSpec{};
            cfg.sweep->base_params = cfg.params;
        }
        if (key == "sweep.target") cfg.sweep->target = value;
        else if (key == "sweep.start") cfg.sweep->start = parse_double(key, value);
        else if (key == "sweep.stop") cfg.sweep->stop = parse_double(key, value);
        else cfg.sweep->n_points = parse_int(key, value);
    } else if (key.rfind("settings.", 0) == 0) {
        const std::string field = key.substr(9);
        if (field == "rel_tol") cfg.settings.rel_tol = parse_double(key, value);
        else if (field == "abs_tol") cfg.settings.abs_tol = parse_double(key, value);
        else if (field == "steady_residual_tol")
            cfg.settings.steady_residual_tol = parse_double(key, value);
        else if (field == "max_time") cfg.settings.max_time = parse_double(key, value);
        else if (field == "residual_window")
            cfg.settings.residual_window = parse_double(key, value);
        else if (field == "enforce_invariants")
            cfg.settings.enforce_invariants = parse_bool(key, value);
        else throw UnknownKeyError("unknown key '" + key + "'");
        if (field != "enforce_invariants") cfg.settings_given = true;
    } else {
        throw UnknownKeyError("unknown key '" + key + "'");
    }
}

void finalize_config(RunConfig& cfg) {
    std::visit([](const auto& p) { validate(p); }, cfg.params);

    // settings not given explicitly derive their horizon from the decay rates
    IntegrationSettings defaults =
        std::visit([](const auto& p) { return default_settings(p); }, cfg.params);
    if (cfg.settings.max_time <= 0.0) cfg.settings.max_time = defaults.max_time;
    if (cfg.settings.residual_window <= 0.0) {
        cfg.settings.residual_window = defaults.residual_window;
    }
    validate(cfg.settings);

    if (cfg.mode == RunMode::Sweep || cfg.mode == RunMode::Optimize) {
        if (!cfg.sweep) {
            throw ValidationError("sweep block (or a preset) is required for "
                                  "sweep/optimize modes");
        }
    }
    if (cfg.sweep) {
        cfg.sweep->base_params = cfg.params;
        validate(*cfg.sweep);
    }
}

} // namespace fwm
