#ifndef FWM_CONFIG_HPP
#define FWM_CONFIG_HPP

#include <optional>
#include <string>

#include "fwm/sweep.hpp"

namespace fwm {

enum class RunMode { Simulate, Sweep, Optimize, Validate };

struct RunConfig {
    RunMode mode = RunMode::Simulate;
    std::optional<std::string> preset;
    ParamsVariant params{};
    std::optional<SweepSpec> sweep;
    BaselineKind baseline = BaselineKind::ResonantNoEmitter;
    std::string output_path;
    IntegrationSettings settings{};
    bool settings_given = false; // explicit [settings] overrides defaults
    int workers = 0;
};

/// Parses the key-value config format:
///   - `key = value` lines, `#` comments, blank lines allowed
///   - `[section]` headers scope following keys (e.g. [params], [sweep],
///     [settings]); dotted keys (`params.f = 0`) are equivalent
///   - complex values accept `a`, `a+bi`, `a-bi`, `bi`
/// Unknown keys are fatal. Every embedded invariant is checked and reported
/// with the offending key name.
RunConfig parse_config(const std::string& text);

/// Single `key=value` override (same key space as the file format),
/// applied on top of an existing config.
void apply_override(RunConfig& cfg, const std::string& key,
                    const std::string& value);

/// Re-validate a fully assembled config (invariants of every embedded type).
void finalize_config(RunConfig& cfg);

Complex parse_complex(const std::string& text); // throws ParseError

} // namespace fwm

#endif
