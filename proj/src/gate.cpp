#include "astrogate/gate.hpp"

#include <cmath>
#include <sstream>

#include "astrogate/errors.hpp"

namespace astrogate {

const char* preset_name(GatePreset preset) {
    switch (preset) {
        case GatePreset::or_phasic: return "OR_phasic";
        case GatePreset::and_phasic: return "AND_phasic";
        case GatePreset::or_tonic: return "OR_tonic";
        case GatePreset::and_tonic: return "AND_tonic";
        case GatePreset::or_denoised: return "OR_denoised";
        case GatePreset::and_denoised: return "AND_denoised";
        case GatePreset::custom: return "custom";
    }
    return "?";
}

GatePreset parse_preset(std::string_view name) {
    for (GatePreset p : {GatePreset::or_phasic, GatePreset::and_phasic,
                         GatePreset::or_tonic, GatePreset::and_tonic,
                         GatePreset::or_denoised, GatePreset::and_denoised,
                         GatePreset::custom}) {
        if (name == preset_name(p)) {
            return p;
        }
    }
    std::ostringstream msg;
    msg << "unknown gate preset '" << name
        << "'; registered presets: OR_phasic, AND_phasic, OR_tonic, AND_tonic, "
           "OR_denoised, AND_denoised, custom";
    throw ConfigError(msg.str());
}

GateKind preset_kind(GatePreset preset) {
    switch (preset) {
        case GatePreset::or_phasic:
        case GatePreset::or_tonic:
        case GatePreset::or_denoised:
            return GateKind::or_gate;
        case GatePreset::and_phasic:
        case GatePreset::and_tonic:
        case GatePreset::and_denoised:
            return GateKind::and_gate;
        case GatePreset::custom:
            break;
    }
    throw ConfigError("gate kind of 'custom' must be set explicitly");
}

namespace {

struct PresetRecipe {
    const char* neuron;
    double amplitude;
    double w;
    double alpha, beta, gamma, delta;
};

PresetRecipe preset_recipe(GatePreset preset) {
    switch (preset) {
        case GatePreset::or_phasic:    return {"phasic", 0.5, 0.02, 0, 0, 0, 0};
        case GatePreset::and_phasic:   return {"phasic", 0.5, 0.01, 0, 0, 0, 0};
        case GatePreset::or_tonic:     return {"tonic", 4.0, 0.09, 0, 0, 0, 0};
        case GatePreset::and_tonic:    return {"tonic", 4.0, 0.05, 0, 0, 0, 0};
        case GatePreset::or_denoised:  return {"tonic", 4.0, 0.22, 0, 0.05, 0.0, 15.0};
        case GatePreset::and_denoised: return {"tonic", 4.0, 0.11, 0, 0.05, 1.5, 10.0};
        case GatePreset::custom:
            break;
    }
    throw ConfigError("preset 'custom' requires explicit parameters from a config file");
}

} // namespace

GateConfig build_gate(GatePreset preset, std::array<bool, 2> logic_inputs,
                      double noise_sigma, std::uint64_t seed) {
    const PresetRecipe recipe = preset_recipe(preset);
    const NeuronPreset neuron = neuron_preset(recipe.neuron);

    GateConfig cfg;
    cfg.preset = preset;
    cfg.kind = preset_kind(preset);
    cfg.logic_inputs = logic_inputs;
    for (int i = 0; i < 3; ++i) {
        cfg.neuron_params[i] = neuron.params;
        cfg.initial_state[i] = neuron.initial;
    }
    for (int i = 0; i < 2; ++i) {
        cfg.synapse_params[i] = SynapseParams{recipe.w, 0.0, 10.0};
        AstrocyteParams astro;
        astro.alpha = recipe.alpha;
        astro.beta = recipe.beta;
        astro.gamma = recipe.gamma;
        astro.delta = recipe.delta;
        cfg.astro_params[i] = astro;
    }
    cfg.stimulus = StimulusProtocol{500.0, 1500.0, recipe.amplitude, 2500.0};
    cfg.noise_sigma = noise_sigma;
    cfg.seed = seed;
    cfg.dt = 0.5;
    validate(cfg);
    return cfg;
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw ConfigError(what);
    }
}

} // namespace

void validate(const GateConfig& cfg) {
    require(cfg.dt > 0.0, "dt must be positive");
    require(cfg.noise_sigma >= 0.0, "noise_sigma must be >= 0");
    const StimulusProtocol& st = cfg.stimulus;
    require(st.on_start >= 0.0 && st.on_start < st.on_end && st.on_end <= st.total_duration,
            "stimulus must satisfy 0 <= on_start < on_end <= total_duration");
    const double steps = st.total_duration / cfg.dt;
    require(std::abs(steps - std::llround(steps)) < 1e-9,
            "total_duration must be an integer multiple of dt");
    for (int i = 0; i < 3; ++i) {
        const NeuronParams& n = cfg.neuron_params[i];
        require(n.a > 0.0, "neuron parameter a must be positive");
        require(n.c < kSpikeCutoff, "neuron reset potential c must lie below the spike cutoff");
    }
    for (int i = 0; i < 2; ++i) {
        const SynapseParams& syn = cfg.synapse_params[i];
        require(syn.tau_g > 0.0, "tau_g must be positive");
        if (cfg.dt >= syn.tau_g) {
            std::ostringstream msg;
            msg << "dt=" << cfg.dt << " must be smaller than tau_g=" << syn.tau_g;
            throw ConfigError(msg.str());
        }
        const AstrocyteParams& a = cfg.astro_params[i];
        require(a.tau_c > 0.0 && a.tau_sm > 0.0 && a.tau_gm > 0.0,
                "astrocyte time constants must be positive");
        require(a.eps_c > 0.0, "eps_c must be positive");
        require(a.d_sm > 0.0 && a.d_gm > 0.0, "relaxation constants d_Sm, d_Gm must be positive");
        // Explicit-Euler stability margin of the stiff ER pool.
        if (cfg.dt > 2.0 * a.eps_c * a.tau_c) {
            std::ostringstream msg;
            msg << "dt=" << cfg.dt << " exceeds the calcium stability bound 2*eps_c*tau_c="
                << 2.0 * a.eps_c * a.tau_c;
            throw ConfigError(msg.str());
        }
    }
}

NetworkState initial_network_state(const GateConfig& cfg) {
    NetworkState s;
    s.neurons = cfg.initial_state;
    s.synapses = {SynapseState{}, SynapseState{}};
    s.astro = {AstrocyteState{}, AstrocyteState{}};
    return s;
}

namespace {

void check_finite(double x, const char* name, double t) {
    if (!std::isfinite(x)) {
        std::ostringstream msg;
        msg << "non-finite " << name << " at t=" << t << " ms";
        throw SimulationError(msg.str());
    }
}

} // namespace

StepCurrents network_step(NetworkState& state, const GateConfig& cfg, double t,
                          NoiseSource& noise) {
    const double dt = cfg.dt;
    const double t_next = t + dt;

    const auto step_neuron = [&](int idx, double current) {
        try {
            state.neurons[idx] =
                neuron_step(state.neurons[idx], cfg.neuron_params[idx], current, dt);
        } catch (const SimulationError& e) {
            std::ostringstream msg;
            msg << "v" << (idx + 1) << "/u" << (idx + 1) << ": " << e.what();
            throw SimulationError(msg.str());
        }
    };

    // 1+2: stimulus and input neuron steps
    for (int i = 0; i < 2; ++i) {
        step_neuron(i, stimulus_current(cfg.stimulus, cfg.logic_inputs[i], t));
    }

    // 3: conductance rise for this step's spikes
    for (int i = 0; i < 2; ++i) {
        state.synapses[i] = register_spike(state.synapses[i], state.neurons[i].fired);
    }

    // 4: astrocytes, driven by the post-rise conductance and the output
    //    neuron's recovery variable
    const double u_rec = state.neurons[2].u;
    for (int i = 0; i < 2; ++i) {
        state.astro[i] = astrocyte_step(state.astro[i], state.synapses[i].g_syn,
                                        u_rec, cfg.astro_params[i], dt);
        check_finite(state.astro[i].c, i == 0 ? "c1" : "c2", t_next);
        check_finite(state.astro[i].c_e, i == 0 ? "ce1" : "ce2", t_next);
    }

    // 5: currents
    StepCurrents cur;
    const double v_post = state.neurons[2].v;
    for (int i = 0; i < 2; ++i) {
        cur.i_syn[i] = synaptic_current(state.synapses[i], cfg.synapse_params[i],
                                        v_post, cfg.astro_params[i].delta,
                                        state.astro[i].g_m);
        cur.i_glion[i] = glion_current(state.astro[i].g_m, cfg.astro_params[i].gamma);
    }
    cur.i_noise = noise.sample();
    cur.i_tot = total_current(cur.i_syn[0], cur.i_syn[1], cur.i_glion[0],
                              cur.i_glion[1], cur.i_noise);

    // 6: output neuron
    step_neuron(2, cur.i_tot);

    // 7: conductance decay, advancing g_syn to the next step
    for (int i = 0; i < 2; ++i) {
        state.synapses[i] = decay_step(state.synapses[i], cfg.synapse_params[i].tau_g, dt);
    }
    return cur;
}

Trace run_simulation(const GateConfig& cfg) {
    validate(cfg);
    const long long n_steps = std::llround(cfg.stimulus.total_duration / cfg.dt);
    const std::size_t n_samples = static_cast<std::size_t>(n_steps) + 1;

    Trace trace;
    trace.t_ms.reserve(n_samples);
    for (int i = 0; i < 3; ++i) {
        trace.v[i].reserve(n_samples);
        trace.u[i].reserve(n_samples);
        trace.fired[i].reserve(n_samples);
    }
    for (int i = 0; i < 2; ++i) {
        trace.g_syn[i].reserve(n_samples);
        trace.c[i].reserve(n_samples);
        trace.c_e[i].reserve(n_samples);
        trace.s_m[i].reserve(n_samples);
        trace.g_m[i].reserve(n_samples);
        trace.i_syn[i].reserve(n_samples);
        trace.i_glion[i].reserve(n_samples);
    }
    trace.i_noise.reserve(n_samples);
    trace.i_tot.reserve(n_samples);

    NetworkState state = initial_network_state(cfg);
    NoiseSource noise(cfg.noise_sigma, cfg.seed);

    const auto record = [&](double t, const StepCurrents& cur) {
        trace.t_ms.push_back(t);
        for (int i = 0; i < 3; ++i) {
            trace.v[i].push_back(trace_sample(state.neurons[i]));
            trace.u[i].push_back(state.neurons[i].u);
            trace.fired[i].push_back(state.neurons[i].fired ? 1 : 0);
            if (state.neurons[i].fired) {
                trace.spike_times[i].push_back(t);
            }
        }
        for (int i = 0; i < 2; ++i) {
            trace.g_syn[i].push_back(state.synapses[i].g_syn);
            trace.c[i].push_back(state.astro[i].c);
            trace.c_e[i].push_back(state.astro[i].c_e);
            trace.s_m[i].push_back(state.astro[i].s_m);
            trace.g_m[i].push_back(state.astro[i].g_m);
            trace.i_syn[i].push_back(cur.i_syn[i]);
            trace.i_glion[i].push_back(cur.i_glion[i]);
        }
        trace.i_noise.push_back(cur.i_noise);
        trace.i_tot.push_back(cur.i_tot);
    };

    record(0.0, StepCurrents{});
    for (long long k = 1; k <= n_steps; ++k) {
        const double t = static_cast<double>(k - 1) * cfg.dt;
        StepCurrents cur;
        try {
            cur = network_step(state, cfg, t, noise);
        } catch (const SimulationError& e) {
            std::ostringstream msg;
            msg << e.what() << " (step " << k << ", t=" << t << " ms)";
            throw SimulationError(msg.str());
        }
        record(static_cast<double>(k) * cfg.dt, cur);
    }
    return trace;
}

} // namespace astrogate
