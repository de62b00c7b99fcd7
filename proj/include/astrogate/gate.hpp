#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "astrogate/astrocyte.hpp"
#include "astrogate/neuron.hpp"
#include "astrogate/noise.hpp"
#include "astrogate/synapse.hpp"

namespace astrogate {

enum class GatePreset {
    or_phasic,
    and_phasic,
    or_tonic,
    and_tonic,
    or_denoised,
    and_denoised,
    custom,
};

enum class GateKind { or_gate, and_gate };

const char* preset_name(GatePreset preset);
GatePreset parse_preset(std::string_view name);
GateKind preset_kind(GatePreset preset);

/// Rectangular stimulus: `amplitude` on [on_start, on_end), zero elsewhere.
struct StimulusProtocol {
    double on_start = 500.0;
    double on_end = 1500.0;
    double amplitude = 4.0;
    double total_duration = 2500.0;
};

inline double stimulus_current(const StimulusProtocol& p, bool input_high, double t) {
    return (input_high && t >= p.on_start && t < p.on_end) ? p.amplitude : 0.0;
}

/// Complete description of one gate experiment: two input neurons, two
/// astrocyte-regulated synapses, one output neuron, stimulus, noise, seed.
struct GateConfig {
    GatePreset preset = GatePreset::custom;
    GateKind kind = GateKind::or_gate;
    std::array<bool, 2> logic_inputs{false, false};
    std::array<NeuronParams, 3> neuron_params;  // inputs 1, 2 and output 3
    std::array<NeuronState, 3> initial_state;
    std::array<SynapseParams, 2> synapse_params;
    std::array<AstrocyteParams, 2> astro_params;
    StimulusProtocol stimulus;
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;
    double dt = 0.5;
};

/// Fully populated config for a registered preset. Throws ConfigError for
/// `custom` (which only makes sense with explicit parameters from a config
/// file) and for unregistered names.
GateConfig build_gate(GatePreset preset, std::array<bool, 2> logic_inputs,
                      double noise_sigma, std::uint64_t seed);

/// Validates every config invariant (dt bounds, stimulus ordering, time
/// constants, ...). Throws ConfigError naming the offending field.
void validate(const GateConfig& cfg);

struct NetworkState {
    std::array<NeuronState, 3> neurons;
    std::array<SynapseState, 2> synapses;
    std::array<AstrocyteState, 2> astro;
};

NetworkState initial_network_state(const GateConfig& cfg);

/// Currents formed during one step, recorded in the trace.
struct StepCurrents {
    std::array<double, 2> i_syn{0.0, 0.0};
    std::array<double, 2> i_glion{0.0, 0.0};
    double i_noise = 0.0;
    double i_tot = 0.0;
};

/// Plain sum of the two synaptic, two glion and one noise contribution.
inline double total_current(double i_syn1, double i_syn2, double i_glion1,
                            double i_glion2, double i_noise) {
    return i_syn1 + i_syn2 + i_glion1 + i_glion2 + i_noise;
}

/// Advances the network by one dt from time `t` (start of the step).
///
/// Stage order inside the step:
///   1. stimulus currents for both inputs
///   2. Euler step of both input neurons
///   3. conductance rise for inputs that fired this step
///   4. synchronous Euler step of both astrocytes (S_m from the
///      post-rise conductance, calcium from the output neuron's u)
///   5. synaptic + glion currents, one noise draw, I_tot
///   6. Euler step of the output neuron under I_tot
///   7. conductance decay, advancing g_syn to the next step
///
/// The decay runs after the currents: each presynaptic spike must reach the
/// postsynaptic side at full unit strength on the step it occurs.
StepCurrents network_step(NetworkState& state, const GateConfig& cfg, double t,
                          NoiseSource& noise);

/// Full per-step record of one simulation. Every series holds
/// total_duration/dt + 1 samples; sample 0 is the initial state.
struct Trace {
    std::vector<double> t_ms;
    std::array<std::vector<double>, 3> v;
    std::array<std::vector<double>, 3> u;
    std::array<std::vector<std::uint8_t>, 3> fired;
    std::array<std::vector<double>, 2> g_syn;
    std::array<std::vector<double>, 2> c;
    std::array<std::vector<double>, 2> c_e;
    std::array<std::vector<double>, 2> s_m;
    std::array<std::vector<double>, 2> g_m;
    std::array<std::vector<double>, 2> i_syn;
    std::array<std::vector<double>, 2> i_glion;
    std::vector<double> i_noise;
    std::vector<double> i_tot;
    std::array<std::vector<double>, 3> spike_times; // ms, strictly increasing
};

/// Runs the configured experiment from t=0 to total_duration.
/// Deterministic in (config, seed). Step errors carry the timestamp.
Trace run_simulation(const GateConfig& cfg);

} // namespace astrogate
