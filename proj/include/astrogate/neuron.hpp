#pragma once

#include <string>
#include <string_view>

namespace astrogate {

/// Spike cutoff of the Izhikevich model. Crossing it counts as a spike;
/// trace samples are clamped to it so all spikes have the same amplitude.
inline constexpr double kSpikeCutoff = 30.0;

/// Parameters of one Izhikevich neuron,
///   dv/dt = 0.04 v^2 + 5 v + 140 - u + I
///   du/dt = a (b v - u)
/// with after-spike reset v <- c, u <- u + d once v reaches +30 mV.
struct NeuronParams {
    double a;          ///< recovery time scale
    double b;          ///< recovery sensitivity to v
    double c;          ///< after-spike reset potential (mV)
    double d;          ///< after-spike recovery increment
    std::string label; ///< preset name ("tonic", "phasic", ...)
};

struct NeuronState {
    double v;           ///< membrane potential (mV)
    double u;           ///< recovery variable
    bool fired = false; ///< true iff v reached the cutoff during the last step
};

struct NeuronDerivatives {
    double dv_dt;
    double du_dt;
};

inline NeuronDerivatives neuron_derivatives(const NeuronState& s,
                                            const NeuronParams& p,
                                            double current) {
    return {0.04 * s.v * s.v + 5.0 * s.v + 140.0 - s.u + current,
            p.a * (p.b * s.v - s.u)};
}

/// One explicit Euler step of size `dt` (ms) under stimulating `current`,
/// with the after-spike reset applied in the same step. Throws
/// SimulationError if the state leaves the finite range.
NeuronState neuron_step(const NeuronState& s, const NeuronParams& p,
                        double current, double dt);

/// Membrane potential as it appears in recorded traces: the sample of a
/// spike step is the cutoff, not the already-reset v.
inline double trace_sample(const NeuronState& s) {
    return s.fired ? kSpikeCutoff : s.v;
}

struct NeuronPreset {
    NeuronParams params;
    NeuronState initial;
};

/// Named spike-pattern presets. Throws ConfigError for unknown names,
/// listing the registered ones.
NeuronPreset neuron_preset(std::string_view name);

} // namespace astrogate
