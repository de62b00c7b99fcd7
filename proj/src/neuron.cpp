#include "astrogate/neuron.hpp"

#include <cmath>
#include <sstream>

#include "astrogate/errors.hpp"

namespace astrogate {

NeuronState neuron_step(const NeuronState& s, const NeuronParams& p,
                        double current, double dt) {
    const NeuronDerivatives d = neuron_derivatives(s, p, current);
    NeuronState next;
    next.v = s.v + dt * d.dv_dt;
    next.u = s.u + dt * d.du_dt;
    if (!std::isfinite(next.v) || !std::isfinite(next.u)) {
        std::ostringstream msg;
        msg << "neuron state diverged (v=" << next.v << ", u=" << next.u
            << ", I=" << current << ")";
        throw SimulationError(msg.str());
    }
    if (next.v >= kSpikeCutoff) {
        next.fired = true;
        next.v = p.c;
        next.u += p.d;
    } else {
        next.fired = false;
    }
    return next;
}

NeuronPreset neuron_preset(std::string_view name) {
    // Values from the standard Izhikevich parameter sets for these patterns.
    // Initial state: v0 = c, u0 = b*v0; both presets settle to their resting
    // point well inside the 0.5 s unstimulated window.
    NeuronParams params;
    if (name == "tonic") {
        params = {0.02, 0.2, -65.0, 6.0, "tonic"};
    } else if (name == "phasic") {
        params = {0.02, 0.25, -65.0, 6.0, "phasic"};
    } else {
        std::ostringstream msg;
        msg << "unknown neuron preset '" << name
            << "'; registered presets: tonic, phasic";
        throw ConfigError(msg.str());
    }
    NeuronState initial{params.c, params.b * params.c, false};
    return {params, initial};
}

} // namespace astrogate
