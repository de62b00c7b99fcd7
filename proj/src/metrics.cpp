#include "astrogate/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "astrogate/errors.hpp"

namespace astrogate {

BinGrid::Bin BinGrid::bin(std::size_t k) const {
    if (k < on_bins()) {
        return {on_edges[k], on_edges[k + 1], true};
    }
    const std::size_t j = k - on_bins();
    return {off_edges[j], off_edges[j + 1], false};
}

BinGrid build_bin_grid(const std::vector<double>& reference_spikes,
                       const StimulusProtocol& protocol) {
    if (reference_spikes.size() < 2) {
        std::ostringstream msg;
        msg << "bin grid undefined: need >= 2 reference spikes in the ON phase, got "
            << reference_spikes.size();
        throw SimulationError(msg.str());
    }
    const std::vector<double>& s = reference_spikes;
    BinGrid grid;
    grid.on_edges.reserve(s.size() + 1);
    grid.on_edges.push_back(s.front() - (s[1] - s[0]) / 2.0);
    for (std::size_t i = 1; i < s.size(); ++i) {
        grid.on_edges.push_back((s[i - 1] + s[i]) / 2.0);
    }
    grid.on_edges.push_back(s.back() + (s.back() - s[s.size() - 2]) / 2.0);

    // Outer edges may overshoot the phase window; clip them to it.
    for (double& e : grid.on_edges) {
        e = std::clamp(e, protocol.on_start, protocol.on_end);
    }
    const double phase = protocol.on_end - protocol.on_start;
    grid.off_edges.reserve(grid.on_edges.size());
    for (double e : grid.on_edges) {
        grid.off_edges.push_back(e + phase);
    }
    return grid;
}

namespace {

std::vector<long> spikes_per_bin(const std::vector<double>& spike_times,
                                 const BinGrid& grid) {
    std::vector<long> counts(grid.bin_count(), 0);
    for (std::size_t k = 0; k < counts.size(); ++k) {
        const BinGrid::Bin b = grid.bin(k);
        for (double t : spike_times) {
            if (t >= b.lo && t < b.hi) {
                ++counts[k];
            }
        }
    }
    return counts;
}

} // namespace

BitStream encode_bits(const std::vector<double>& spike_times, const BinGrid& grid) {
    const std::vector<long> counts = spikes_per_bin(spike_times, grid);
    BitStream bits(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k) {
        bits[k] = counts[k] > 0 ? 1 : 0;
    }
    return bits;
}

BitStream expected_bits(GateKind kind, std::array<bool, 2> logic_inputs,
                        const BinGrid& grid) {
    const bool high = kind == GateKind::or_gate
                          ? (logic_inputs[0] || logic_inputs[1])
                          : (logic_inputs[0] && logic_inputs[1]);
    BitStream bits(grid.bin_count(), 0);
    for (std::size_t k = 0; k < grid.on_bins(); ++k) {
        bits[k] = high ? 1 : 0;
    }
    return bits;
}

double ler(const BitStream& observed, const BitStream& expected) {
    if (observed.size() != expected.size()) {
        std::ostringstream msg;
        msg << "bit stream length mismatch: " << observed.size() << " vs "
            << expected.size();
        throw SimulationError(msg.str());
    }
    long wrong = 0;
    for (std::size_t k = 0; k < observed.size(); ++k) {
        if (observed[k] != expected[k]) {
            ++wrong;
        }
    }
    return 100.0 * static_cast<double>(wrong) / static_cast<double>(observed.size());
}

ConfusionCounts classify_confusion(const std::vector<double>& spike_times,
                                   const BinGrid& grid, const BitStream& expected) {
    if (expected.size() != grid.bin_count()) {
        throw SimulationError("expected bit stream does not match the grid");
    }
    const std::vector<long> counts = spikes_per_bin(spike_times, grid);
    ConfusionCounts out;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        const long n = counts[k];
        if (expected[k]) {
            if (n == 0) {
                ++out.fn;
            } else {
                ++out.tp;
                out.fp += n - 1;
            }
        } else {
            if (n == 0) {
                ++out.tn;
            } else {
                out.fp += n;
            }
        }
    }
    return out;
}

double accuracy(const ConfusionCounts& counts) {
    const long total = counts.tp + counts.tn + counts.fp + counts.fn;
    if (total <= 0) {
        throw SimulationError("accuracy undefined: all confusion counts are zero");
    }
    return static_cast<double>(counts.tp + counts.tn) / static_cast<double>(total);
}

namespace {

std::vector<double> spikes_in_on_window(const std::vector<double>& spikes,
                                        const StimulusProtocol& protocol) {
    std::vector<double> out;
    for (double t : spikes) {
        if (t >= protocol.on_start && t < protocol.on_end) {
            out.push_back(t);
        }
    }
    return out;
}

/// Single tonic neuron at I=4 under the same timing: the grid reference for
/// the [0 0] case, where neither input carries spikes.
std::vector<double> calibration_spikes(const StimulusProtocol& protocol, double dt) {
    const NeuronPreset preset = neuron_preset("tonic");
    StimulusProtocol cal = protocol;
    cal.amplitude = 4.0;
    NeuronState s = preset.initial;
    std::vector<double> spikes;
    const long long n_steps = std::llround(cal.total_duration / dt);
    for (long long k = 1; k <= n_steps; ++k) {
        const double t = static_cast<double>(k - 1) * dt;
        s = neuron_step(s, preset.params, stimulus_current(cal, true, t), dt);
        if (s.fired) {
            spikes.push_back(static_cast<double>(k) * dt);
        }
    }
    return spikes;
}

} // namespace

std::vector<double> reference_spikes(const Trace& trace, const GateConfig& cfg) {
    std::vector<double> ref;
    if (cfg.logic_inputs[0]) {
        ref = trace.spike_times[0];
    } else if (cfg.logic_inputs[1]) {
        ref = trace.spike_times[1];
    } else {
        ref = calibration_spikes(cfg.stimulus, cfg.dt);
    }
    return spikes_in_on_window(ref, cfg.stimulus);
}

MetricsReport evaluate_trace(const Trace& trace, const GateConfig& cfg) {
    MetricsReport report;
    report.grid = build_bin_grid(reference_spikes(trace, cfg), cfg.stimulus);
    report.observed_bits = encode_bits(trace.spike_times[2], report.grid);
    report.expected_bits = expected_bits(cfg.kind, cfg.logic_inputs, report.grid);
    report.confusion = classify_confusion(trace.spike_times[2], report.grid,
                                          report.expected_bits);
    report.accuracy = accuracy(report.confusion);
    report.ler_percent = ler(report.observed_bits, report.expected_bits);
    return report;
}

} // namespace astrogate
