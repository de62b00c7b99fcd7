#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "astrogate/gate.hpp"
#include "astrogate/metrics.hpp"

namespace astrogate {

/// Noise sensitivity sweep: sigma levels x trials x gate variants x input
/// cases. Within one (inputs, sigma, trial) cell every variant consumes the
/// identical noise stream, so variants are compared on shared observations.
struct SweepSpec {
    std::vector<double> sigma_values{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    int trials_per_sigma = 10;
    std::vector<GatePreset> gate_variants{GatePreset::or_tonic, GatePreset::or_denoised,
                                          GatePreset::and_tonic, GatePreset::and_denoised};
    std::vector<std::array<bool, 2>> input_cases{{true, false}, {true, true}};
    std::uint64_t base_seed = 0;
};

void validate(const SweepSpec& spec);

struct TrialRecord {
    GatePreset variant;
    std::array<bool, 2> inputs;
    double sigma = 0.0;
    int trial = 0;
    std::uint64_t seed = 0;
    ConfusionCounts confusion;
    double accuracy = 0.0;
    double ler_percent = 0.0;
    int n_bins = 0;
    bool failed = false;
    std::string error;
};

struct SummaryRow {
    GatePreset variant;
    std::array<bool, 2> inputs;
    double sigma = 0.0;
    int n_trials = 0; ///< successful trials entering the means
    double acc_mean = 0.0;
    double acc_std = 0.0; ///< sample std (n-1); NaN when n_trials < 2
    double ler_mean = 0.0;
    double ler_std = 0.0;
    int failures = 0;
};

/// Seed for one sweep cell: a splitmix64 chain over (base_seed, sigma index,
/// trial index, input-case index). Deliberately independent of the gate
/// variant so variants share the noise stream.
std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t sigma_index,
                         std::size_t trial_index, std::size_t input_index);

/// Runs every cell of the sweep. Per-trial simulation errors are recorded on
/// the trial and the sweep continues.
std::vector<TrialRecord> run_sweep_trials(const SweepSpec& spec);

/// Means and sample standard deviations per (variant, inputs, sigma) cell,
/// ordered by variant, then inputs, then ascending sigma. Throws
/// SimulationError if a cell has no successful trial and no failures.
std::vector<SummaryRow> aggregate(const std::vector<TrialRecord>& trials);

} // namespace astrogate
