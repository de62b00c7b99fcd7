#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "astrogate/gate.hpp"

namespace astrogate {

using BitStream = std::vector<std::uint8_t>;

/// Time segmentation for reading the output as a binary word. ON bins are
/// centred on the reference input's spikes; OFF bins are the same edges
/// shifted by the phase duration. Bins are half-open: [lo, hi).
struct BinGrid {
    std::vector<double> on_edges;  // strictly increasing, clipped to the ON window
    std::vector<double> off_edges; // on_edges + (on_end - on_start)

    std::size_t on_bins() const { return on_edges.empty() ? 0 : on_edges.size() - 1; }
    std::size_t off_bins() const { return off_edges.empty() ? 0 : off_edges.size() - 1; }
    std::size_t bin_count() const { return on_bins() + off_bins(); }

    struct Bin {
        double lo;
        double hi;
        bool on;
    };
    /// ON bins first, then OFF bins.
    Bin bin(std::size_t k) const;
};

struct ConfusionCounts {
    long tp = 0;
    long tn = 0;
    long fp = 0;
    long fn = 0;
};

struct MetricsReport {
    BinGrid grid;
    BitStream observed_bits;
    BitStream expected_bits;
    ConfusionCounts confusion;
    double accuracy = 0.0;
    double ler_percent = 0.0;
};

/// Builds the grid from >= 2 reference spikes inside the ON phase: interior
/// edges halve the interspike intervals, the outer edges extend the first
/// and last bin symmetrically, and edges are clipped to the ON window.
/// Throws SimulationError when fewer than 2 reference spikes are given.
BinGrid build_bin_grid(const std::vector<double>& reference_spikes,
                       const StimulusProtocol& protocol);

/// bit = 1 iff at least one spike lands in the bin; spikes outside all bins
/// (settling phase, inter-phase gap) are ignored.
BitStream encode_bits(const std::vector<double>& spike_times, const BinGrid& grid);

/// ON bins carry the gate's Boolean output for the given inputs, OFF bins 0.
BitStream expected_bits(GateKind kind, std::array<bool, 2> logic_inputs,
                        const BinGrid& grid);

/// Percentage of positions where the two streams differ. Throws
/// SimulationError on length mismatch.
double ler(const BitStream& observed, const BitStream& expected);

/// Per-bin spike counting against the expected bit: an expected-1 bin with n
/// spikes yields one TP and n-1 FP (none: one FN); an expected-0 bin with n
/// spikes yields n FP (none: one TN).
ConfusionCounts classify_confusion(const std::vector<double>& spike_times,
                                   const BinGrid& grid, const BitStream& expected);

/// (TP+TN) / (TP+TN+FP+FN). Throws SimulationError when all counts are zero.
double accuracy(const ConfusionCounts& counts);

/// Spike train the grid is built from: input 1 when logic input 1 is high,
/// else input 2; for [0 0] a noiseless calibration run of a tonic neuron at
/// I=4 under the same protocol. Filtered to the ON window.
std::vector<double> reference_spikes(const Trace& trace, const GateConfig& cfg);

/// Full report for one simulation: grid, both bit streams, confusion counts,
/// accuracy and LER.
MetricsReport evaluate_trace(const Trace& trace, const GateConfig& cfg);

} // namespace astrogate
