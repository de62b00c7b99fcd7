#pragma once

#include <string>

#include "astrogate/gate.hpp"
#include "astrogate/metrics.hpp"
#include "astrogate/sweep.hpp"

namespace astrogate {

/// Runs one simulation and writes trace_<gate>_<inputs>.csv, metrics.csv and
/// config_echo.txt into `out_dir` (created if missing). Prints accuracy and
/// LER to stdout as "accuracy=%.2f, LER=%.2f%%".
MetricsReport run_single(const GateConfig& cfg, const std::string& out_dir);

/// Runs the full sweep and writes per_trial.csv, summary.csv and
/// config_echo.txt into `out_dir`. Per-trial failures are recorded in the
/// CSVs; the sweep itself only throws on I/O problems.
std::vector<SummaryRow> run_sweep(const SweepSpec& spec, const std::string& out_dir);

} // namespace astrogate
