#include "astrogate/config.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "astrogate/csv.hpp"
#include "astrogate/errors.hpp"

namespace astrogate {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(value, &pos);
        if (pos != value.size()) {
            throw std::invalid_argument(value);
        }
        return x;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': cannot parse '" + value + "' as a number");
    }
}

long long parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const long long x = std::stoll(value, &pos);
        if (pos != value.size()) {
            throw std::invalid_argument(value);
        }
        return x;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': cannot parse '" + value + "' as an integer");
    }
}

std::uint64_t parse_seed(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const std::uint64_t x = std::stoull(value, &pos);
        if (pos != value.size()) {
            throw std::invalid_argument(value);
        }
        return x;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': cannot parse '" + value + "' as a seed");
    }
}

std::array<bool, 2> parse_inputs(const std::string& key, const std::string& value) {
    std::string s = value;
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](char c) { return c == ' ' || c == ','; }),
            s.end());
    if (s.size() != 2 || (s[0] != '0' && s[0] != '1') || (s[1] != '0' && s[1] != '1')) {
        throw ConfigError("key '" + key + "': logic inputs must be two binary digits, e.g. 10");
    }
    return {s[0] == '1', s[1] == '1'};
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::string item;
    std::istringstream in(value);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            items.push_back(item);
        }
    }
    return items;
}

const std::set<std::string> kRunKeys = {
    "mode", "preset", "kind", "inputs", "sigma", "seed", "dt", "neuron",
    "total_duration", "on_start", "on_end", "amplitude",
    "w", "e_syn", "tau_g",
    "a", "b", "c", "d",
    "alpha", "beta", "gamma", "delta",
    "k1", "k2", "k3", "k4", "eps_c", "r", "tau_c", "tau_sm", "tau_gm",
    "s_sm", "s_gm", "h_sm", "h_gm", "d_sm", "d_gm",
};

const std::set<std::string> kSweepKeys = {
    "mode", "sigma_values", "trials_per_sigma", "gate_variants", "input_cases",
    "base_seed",
};

GateConfig base_config_for(const std::map<std::string, std::string>& kv) {
    const auto preset_it = kv.find("preset");
    const GatePreset preset = preset_it != kv.end() ? parse_preset(preset_it->second)
                                                    : GatePreset::custom;
    if (preset != GatePreset::custom) {
        return build_gate(preset, {true, true}, 0.0, 0);
    }
    // Custom gate: start from a neutral skeleton; the required keys are
    // checked after the overrides are applied.
    if (kv.find("neuron") == kv.end() || kv.find("w") == kv.end() ||
        kv.find("amplitude") == kv.end() || kv.find("kind") == kv.end()) {
        throw ConfigError("preset 'custom' requires at least: neuron, w, amplitude, kind");
    }
    GateConfig cfg;
    cfg.preset = GatePreset::custom;
    const NeuronPreset neuron = neuron_preset("tonic");
    for (int i = 0; i < 3; ++i) {
        cfg.neuron_params[i] = neuron.params;
        cfg.initial_state[i] = neuron.initial;
    }
    cfg.synapse_params = {SynapseParams{0.0, 0.0, 10.0}, SynapseParams{0.0, 0.0, 10.0}};
    cfg.astro_params = {AstrocyteParams{}, AstrocyteParams{}};
    cfg.stimulus = StimulusProtocol{};
    cfg.logic_inputs = {true, true};
    return cfg;
}

GateConfig make_run_config(const std::map<std::string, std::string>& kv,
                           std::vector<std::string>& echo) {
    GateConfig cfg = base_config_for(kv);
    bool eps_c_set = false;
    bool k4_set = false;
    // The neuron preset is applied before any a/b/c/d override can land on it.
    if (const auto it = kv.find("neuron"); it != kv.end()) {
        const NeuronPreset neuron = neuron_preset(it->second);
        for (int i = 0; i < 3; ++i) {
            cfg.neuron_params[i] = neuron.params;
            cfg.initial_state[i] = neuron.initial;
        }
        echo.push_back("override: neuron = " + it->second);
    }
    for (const auto& [key, value] : kv) {
        if (key == "mode" || key == "preset" || key == "neuron") {
            continue;
        }
        const auto note = [&](const std::string& detail) {
            echo.push_back("override: " + key + " = " + detail);
        };
        if (key == "kind") {
            if (value == "OR") {
                cfg.kind = GateKind::or_gate;
            } else if (value == "AND") {
                cfg.kind = GateKind::and_gate;
            } else {
                throw ConfigError("key 'kind': must be OR or AND");
            }
            note(value);
        } else if (key == "inputs") {
            cfg.logic_inputs = parse_inputs(key, value);
            note(format_inputs(cfg.logic_inputs));
        } else if (key == "sigma") {
            cfg.noise_sigma = parse_double(key, value);
            note(value);
        } else if (key == "seed") {
            cfg.seed = parse_seed(key, value);
            note(value);
        } else if (key == "dt") {
            cfg.dt = parse_double(key, value);
            note(value);
        } else if (key == "total_duration") {
            cfg.stimulus.total_duration = parse_double(key, value);
            note(value);
        } else if (key == "on_start") {
            cfg.stimulus.on_start = parse_double(key, value);
            note(value);
        } else if (key == "on_end") {
            cfg.stimulus.on_end = parse_double(key, value);
            note(value);
        } else if (key == "amplitude") {
            cfg.stimulus.amplitude = parse_double(key, value);
            note(value);
        } else if (key == "w") {
            const double w = parse_double(key, value);
            cfg.synapse_params[0].w = w;
            cfg.synapse_params[1].w = w;
            note(value);
        } else if (key == "e_syn") {
            const double e = parse_double(key, value);
            cfg.synapse_params[0].e_syn = e;
            cfg.synapse_params[1].e_syn = e;
            note(value);
        } else if (key == "tau_g") {
            const double tau = parse_double(key, value);
            cfg.synapse_params[0].tau_g = tau;
            cfg.synapse_params[1].tau_g = tau;
            note(value);
        } else if (key == "a" || key == "b" || key == "c" || key == "d") {
            const double x = parse_double(key, value);
            for (int i = 0; i < 3; ++i) {
                NeuronParams& n = cfg.neuron_params[i];
                if (key == "a") n.a = x;
                else if (key == "b") n.b = x;
                else if (key == "c") n.c = x;
                else n.d = x;
                n.label = "custom";
            }
            for (int i = 0; i < 3; ++i) {
                cfg.initial_state[i] = {cfg.neuron_params[i].c,
                                        cfg.neuron_params[i].b * cfg.neuron_params[i].c,
                                        false};
            }
            note(value);
        } else {
            // Astrocyte constants and gains apply to both astrocytes.
            const double x = parse_double(key, value);
            for (int i = 0; i < 2; ++i) {
                AstrocyteParams& a = cfg.astro_params[i];
                if (key == "alpha") a.alpha = x;
                else if (key == "beta") a.beta = x;
                else if (key == "gamma") a.gamma = x;
                else if (key == "delta") a.delta = x;
                else if (key == "k1") a.k1 = x;
                else if (key == "k2") a.k2 = x;
                else if (key == "k3") a.k3 = x;
                else if (key == "k4") a.k4 = x;
                else if (key == "eps_c") a.eps_c = x;
                else if (key == "r") a.r = x;
                else if (key == "tau_c") a.tau_c = x;
                else if (key == "tau_sm") a.tau_sm = x;
                else if (key == "tau_gm") a.tau_gm = x;
                else if (key == "s_sm") a.s_sm = x;
                else if (key == "s_gm") a.s_gm = x;
                else if (key == "h_sm") a.h_sm = x;
                else if (key == "h_gm") a.h_gm = x;
                else if (key == "d_sm") a.d_sm = x;
                else if (key == "d_gm") a.d_gm = x;
            }
            if (key == "eps_c") eps_c_set = true;
            if (key == "k4") k4_set = true;
            note(value);
        }
    }
    // k4 tracks 2/eps_c unless pinned explicitly.
    if (eps_c_set && !k4_set) {
        for (int i = 0; i < 2; ++i) {
            cfg.astro_params[i].k4 = 2.0 / cfg.astro_params[i].eps_c;
        }
        echo.push_back("derived: k4 = 2/eps_c");
    }
    validate(cfg);
    return cfg;
}

SweepSpec make_sweep_spec(const std::map<std::string, std::string>& kv,
                          std::vector<std::string>& echo) {
    SweepSpec spec;
    for (const auto& [key, value] : kv) {
        if (key == "mode") {
            continue;
        }
        echo.push_back("override: " + key + " = " + value);
        if (key == "sigma_values") {
            spec.sigma_values.clear();
            for (const std::string& item : split_list(value)) {
                spec.sigma_values.push_back(parse_double(key, item));
            }
        } else if (key == "trials_per_sigma") {
            spec.trials_per_sigma = static_cast<int>(parse_int(key, value));
        } else if (key == "gate_variants") {
            spec.gate_variants.clear();
            for (const std::string& item : split_list(value)) {
                spec.gate_variants.push_back(parse_preset(item));
            }
        } else if (key == "input_cases") {
            spec.input_cases.clear();
            for (const std::string& item : split_list(value)) {
                spec.input_cases.push_back(parse_inputs(key, item));
            }
        } else if (key == "base_seed") {
            spec.base_seed = parse_seed(key, value);
        }
    }
    validate(spec);
    return spec;
}

} // namespace

LoadedConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    std::map<std::string, std::string> kv;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            std::ostringstream msg;
            msg << path << ":" << line_no << ": expected 'key = value', got '" << line << "'";
            throw ConfigError(msg.str());
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            std::ostringstream msg;
            msg << path << ":" << line_no << ": empty key or value";
            throw ConfigError(msg.str());
        }
        if (!kv.emplace(key, value).second) {
            throw ConfigError("duplicate key '" + key + "'");
        }
    }

    // Mode: explicit `mode = run|sweep`, else inferred from the keys present.
    std::string mode;
    if (const auto it = kv.find("mode"); it != kv.end()) {
        mode = it->second;
        if (mode != "run" && mode != "sweep") {
            throw ConfigError("key 'mode': must be run or sweep");
        }
    } else {
        const bool any_sweep = std::any_of(kv.begin(), kv.end(), [](const auto& e) {
            return kSweepKeys.count(e.first) > 0 && e.first != "mode";
        });
        const bool any_run = std::any_of(kv.begin(), kv.end(), [](const auto& e) {
            return kRunKeys.count(e.first) > 0 && e.first != "mode";
        });
        if (any_sweep && any_run) {
            throw ConfigError("config mixes run keys and sweep keys; set 'mode' explicitly");
        }
        mode = any_sweep ? "sweep" : "run";
    }

    const std::set<std::string>& allowed = mode == "run" ? kRunKeys : kSweepKeys;
    for (const auto& [key, value] : kv) {
        if (allowed.count(key) == 0) {
            throw ConfigError("unknown key '" + key + "' in " + mode + " config");
        }
    }

    LoadedConfig loaded;
    if (mode == "run") {
        loaded.run = make_run_config(kv, loaded.echo);
    } else {
        loaded.sweep = make_sweep_spec(kv, loaded.echo);
    }
    return loaded;
}

std::vector<std::string> describe(const GateConfig& cfg) {
    std::vector<std::string> lines;
    const auto add = [&](const std::string& k, const std::string& v) {
        lines.push_back(k + " = " + v);
    };
    add("preset", preset_name(cfg.preset));
    add("kind", cfg.kind == GateKind::or_gate ? "OR" : "AND");
    add("inputs", format_inputs(cfg.logic_inputs));
    add("sigma", format_double(cfg.noise_sigma));
    add("seed", std::to_string(cfg.seed));
    add("dt", format_double(cfg.dt));
    add("neuron", cfg.neuron_params[0].label);
    add("a", format_double(cfg.neuron_params[0].a));
    add("b", format_double(cfg.neuron_params[0].b));
    add("c", format_double(cfg.neuron_params[0].c));
    add("d", format_double(cfg.neuron_params[0].d));
    add("on_start", format_double(cfg.stimulus.on_start));
    add("on_end", format_double(cfg.stimulus.on_end));
    add("amplitude", format_double(cfg.stimulus.amplitude));
    add("total_duration", format_double(cfg.stimulus.total_duration));
    add("w", format_double(cfg.synapse_params[0].w));
    add("e_syn", format_double(cfg.synapse_params[0].e_syn));
    add("tau_g", format_double(cfg.synapse_params[0].tau_g));
    const AstrocyteParams& a = cfg.astro_params[0];
    add("alpha", format_double(a.alpha));
    add("beta", format_double(a.beta));
    add("gamma", format_double(a.gamma));
    add("delta", format_double(a.delta));
    add("k1", format_double(a.k1));
    add("k2", format_double(a.k2));
    add("k3", format_double(a.k3));
    add("k4", format_double(a.k4));
    add("eps_c", format_double(a.eps_c));
    add("r", format_double(a.r));
    add("tau_c", format_double(a.tau_c));
    add("tau_sm", format_double(a.tau_sm));
    add("tau_gm", format_double(a.tau_gm));
    add("s_sm", format_double(a.s_sm));
    add("s_gm", format_double(a.s_gm));
    add("h_sm", format_double(a.h_sm));
    add("h_gm", format_double(a.h_gm));
    add("d_sm", format_double(a.d_sm));
    add("d_gm", format_double(a.d_gm));
    return lines;
}

std::vector<std::string> describe(const SweepSpec& spec) {
    std::vector<std::string> lines;
    std::string sigmas;
    for (double s : spec.sigma_values) {
        if (!sigmas.empty()) {
            sigmas += ",";
        }
        sigmas += format_double(s);
    }
    lines.push_back("mode = sweep");
    lines.push_back("sigma_values = " + sigmas);
    lines.push_back("trials_per_sigma = " + std::to_string(spec.trials_per_sigma));
    std::string variants;
    for (GatePreset p : spec.gate_variants) {
        if (!variants.empty()) {
            variants += ",";
        }
        variants += preset_name(p);
    }
    lines.push_back("gate_variants = " + variants);
    std::string cases;
    for (const auto& inputs : spec.input_cases) {
        if (!cases.empty()) {
            cases += ",";
        }
        cases += format_inputs(inputs);
    }
    lines.push_back("input_cases = " + cases);
    lines.push_back("base_seed = " + std::to_string(spec.base_seed));
    return lines;
}

} // namespace astrogate
