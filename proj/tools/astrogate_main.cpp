// Command-line front end: single gate runs, noise sweeps, preset listing.

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "astrogate/config.hpp"
#include "astrogate/csv.hpp"
#include "astrogate/errors.hpp"
#include "astrogate/harness.hpp"

namespace {

using namespace astrogate;

std::array<bool, 2> parse_inputs_flag(const std::string& inputs) {
    if (inputs.size() != 2 || (inputs[0] != '0' && inputs[0] != '1') ||
        (inputs[1] != '0' && inputs[1] != '1')) {
        throw ConfigError("--inputs must be two binary digits, e.g. 10");
    }
    return {inputs[0] == '1', inputs[1] == '1'};
}

struct RunFlags {
    std::string preset;
    std::string inputs;
    double sigma = 0.0;
    std::uint64_t seed = 0;
    std::string config_path;
    std::string out_dir = "out";
    bool has_inputs = false;
    bool has_sigma = false;
    bool has_seed = false;
};

int cmd_run(const RunFlags& flags) {
    GateConfig cfg;
    if (!flags.config_path.empty()) {
        const LoadedConfig loaded = load_config(flags.config_path);
        if (!loaded.run) {
            throw ConfigError("'" + flags.config_path +
                              "' is a sweep config; use the sweep command");
        }
        cfg = *loaded.run;
        for (const std::string& line : loaded.echo) {
            std::printf("%s\n", line.c_str());
        }
        // Command-line flags override the file where given.
        if (!flags.preset.empty()) {
            throw ConfigError("--preset cannot be combined with --config; set it in the file");
        }
        if (flags.has_inputs) {
            cfg.logic_inputs = parse_inputs_flag(flags.inputs);
        }
        if (flags.has_sigma) {
            cfg.noise_sigma = flags.sigma;
        }
        if (flags.has_seed) {
            cfg.seed = flags.seed;
        }
        validate(cfg);
    } else {
        if (flags.preset.empty()) {
            throw ConfigError("either --preset or --config is required");
        }
        const std::array<bool, 2> in =
            flags.has_inputs ? parse_inputs_flag(flags.inputs) : std::array<bool, 2>{true, true};
        cfg = build_gate(parse_preset(flags.preset), in, flags.sigma, flags.seed);
    }
    run_single(cfg, flags.out_dir);
    return 0;
}

int cmd_sweep(const std::string& config_path, std::uint64_t base_seed,
              bool has_base_seed, const std::string& out_dir) {
    SweepSpec spec;
    if (!config_path.empty()) {
        const LoadedConfig loaded = load_config(config_path);
        if (!loaded.sweep) {
            throw ConfigError("'" + config_path + "' is a run config; use the run command");
        }
        spec = *loaded.sweep;
        for (const std::string& line : loaded.echo) {
            std::printf("%s\n", line.c_str());
        }
    }
    if (has_base_seed) {
        spec.base_seed = base_seed;
    }
    const std::vector<SummaryRow> summary = run_sweep(spec, out_dir);
    for (const SummaryRow& row : summary) {
        std::printf("%s %s sigma=%g: accuracy %.2f +- %.2f, LER %.2f%% +- %.2f (n=%d, failures=%d)\n",
                    preset_name(row.variant), format_inputs(row.inputs).c_str(), row.sigma,
                    row.acc_mean, row.acc_std, row.ler_mean, row.ler_std, row.n_trials,
                    row.failures);
    }
    return 0;
}

int cmd_presets() {
    std::printf("%-13s %-7s %6s %6s %6s %6s %6s %6s\n", "preset", "neuron", "I_on",
                "w", "alpha", "beta", "gamma", "delta");
    for (GatePreset p : {GatePreset::or_phasic, GatePreset::and_phasic,
                         GatePreset::or_tonic, GatePreset::and_tonic,
                         GatePreset::or_denoised, GatePreset::and_denoised}) {
        const GateConfig cfg = build_gate(p, {true, true}, 0.0, 0);
        const AstrocyteParams& a = cfg.astro_params[0];
        std::printf("%-13s %-7s %6g %6g %6g %6g %6g %6g\n", preset_name(p),
                    cfg.neuron_params[0].label.c_str(), cfg.stimulus.amplitude,
                    cfg.synapse_params[0].w, a.alpha, a.beta, a.gamma, a.delta);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic simulator for neuron-astrocyte AND/OR logic gates"};
    app.require_subcommand(1);

    RunFlags flags;
    std::uint64_t base_seed = 0;

    CLI::App* run = app.add_subcommand("run", "simulate one gate and write trace + metrics CSVs");
    run->add_option("--preset", flags.preset, "gate preset name (see `presets`)");
    CLI::Option* inputs_opt =
        run->add_option("--inputs", flags.inputs, "logic inputs as two binary digits, e.g. 10");
    CLI::Option* sigma_opt = run->add_option("--sigma", flags.sigma, "noise standard deviation");
    CLI::Option* seed_opt = run->add_option("--seed", flags.seed, "RNG seed");
    run->add_option("--config", flags.config_path, "key = value config file");
    run->add_option("--out", flags.out_dir, "output directory");

    CLI::App* sweep = app.add_subcommand("sweep", "run a noise sensitivity sweep");
    sweep->add_option("--config", flags.config_path, "key = value sweep config file");
    CLI::Option* base_seed_opt =
        sweep->add_option("--base-seed", base_seed, "base seed for per-cell seed derivation");
    sweep->add_option("--out", flags.out_dir, "output directory");

    CLI::App* presets = app.add_subcommand("presets", "list registered gate presets");

    try {
        app.parse(argc, argv);
        if (run->parsed()) {
            flags.has_inputs = inputs_opt->count() > 0;
            flags.has_sigma = sigma_opt->count() > 0;
            flags.has_seed = seed_opt->count() > 0;
            return cmd_run(flags);
        }
        if (sweep->parsed()) {
            return cmd_sweep(flags.config_path, base_seed, base_seed_opt->count() > 0,
                             flags.out_dir);
        }
        if (presets->parsed()) {
            return cmd_presets();
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const astrogate::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const astrogate::SimulationError& e) {
        std::fprintf(stderr, "simulation error: %s\n", e.what());
        return 2;
    } catch (const astrogate::IoError& e) {
        std::fprintf(stderr, "I/O error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
