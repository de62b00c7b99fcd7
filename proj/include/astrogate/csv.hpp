#pragma once

#include <string>
#include <vector>

#include "astrogate/gate.hpp"
#include "astrogate/metrics.hpp"
#include "astrogate/sweep.hpp"

namespace astrogate {

/// Doubles are serialized with 17 significant digits so reading them back
/// recovers the exact bit pattern.
std::string format_double(double x);

/// Logic inputs as two digits, e.g. "10".
std::string format_inputs(std::array<bool, 2> inputs);

/// One row per step:
/// t_ms, v1, u1, v2, u2, v3, u3, g1, g2, c1, ce1, Sm1, Gm1, c2, ce2, Sm2,
/// Gm2, Isyn1, Isyn2, Iglion1, Iglion2, Inoise, Itot, fired1, fired2, fired3
void write_trace_csv(const Trace& trace, const std::string& path);

/// Header: gate, inputs, sigma, trial_seed, TP, TN, FP, FN, accuracy,
/// ler_percent, n_bins
void write_metrics_csv(const MetricsReport& report, const GateConfig& cfg,
                       const std::string& path);

void write_per_trial_csv(const std::vector<TrialRecord>& trials, const std::string& path);
std::vector<TrialRecord> read_per_trial_csv(const std::string& path);

/// Header: variant, inputs, sigma, n_trials, acc_mean, acc_std, ler_mean,
/// ler_std, failures
void write_summary_csv(const std::vector<SummaryRow>& rows, const std::string& path);

void write_text_file(const std::string& content, const std::string& path);

} // namespace astrogate
