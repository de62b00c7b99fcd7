#pragma once

#include <optional>
#include <string>
#include <vector>

#include "astrogate/gate.hpp"
#include "astrogate/sweep.hpp"

namespace astrogate {

/// Result of loading a key-value config file: exactly one of `run` / `sweep`
/// is engaged. `echo` lists the resolved settings and every override applied
/// on top of the preset defaults.
struct LoadedConfig {
    std::optional<GateConfig> run;
    std::optional<SweepSpec> sweep;
    std::vector<std::string> echo;
};

/// Parses a `key = value` file (# starts a comment). Keys mirror the config
/// fields; unknown keys and invariant violations are ConfigErrors naming the
/// offending key. Whether the file describes a single run or a sweep is
/// taken from the optional `mode` key, else inferred from the keys present.
LoadedConfig load_config(const std::string& path);

/// Echo lines for a fully resolved gate config (used for config_echo files).
std::vector<std::string> describe(const GateConfig& cfg);
std::vector<std::string> describe(const SweepSpec& spec);

} // namespace astrogate
