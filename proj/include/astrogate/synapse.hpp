#pragma once

namespace astrogate {

/// Conductance synapse with instantaneous rise and single-exponential decay.
struct SynapseParams {
    double w;     ///< synaptic weight
    double e_syn; ///< reversal potential (mV); 0 for all-excitatory gates
    double tau_g; ///< conductance decay time constant (ms)
};

struct SynapseState {
    double g_syn = 0.0; ///< conductance, >= 0
};

/// g_syn <- g_syn + 1 on a presynaptic spike, unchanged otherwise.
inline SynapseState register_spike(SynapseState s, bool fired) {
    if (fired) {
        s.g_syn += 1.0;
    }
    return s;
}

/// Euler step of dg/dt = -g/tau_g. Requires dt < tau_g (checked at
/// configuration time), so the factor stays in (0, 1).
inline SynapseState decay_step(SynapseState s, double tau_g, double dt) {
    s.g_syn *= 1.0 - dt / tau_g;
    return s;
}

/// Per-synapse summand of the postsynaptic current:
/// w g (E_syn - v_post) - delta G_m, with the astrocyte negative feedback
/// folded into this synapse's contribution.
inline double synaptic_current(const SynapseState& s, const SynapseParams& p,
                               double v_post, double delta, double g_m) {
    return p.w * s.g_syn * (p.e_syn - v_post) - delta * g_m;
}

} // namespace astrogate
