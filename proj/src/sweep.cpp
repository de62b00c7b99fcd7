#include "astrogate/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

#include "astrogate/errors.hpp"

namespace astrogate {

void validate(const SweepSpec& spec) {
    if (spec.trials_per_sigma < 1) {
        throw ConfigError("trials_per_sigma must be >= 1");
    }
    if (spec.sigma_values.empty()) {
        throw ConfigError("sigma_values must not be empty");
    }
    for (double s : spec.sigma_values) {
        if (s < 0.0) {
            throw ConfigError("sigma_values must be non-negative");
        }
    }
    if (spec.gate_variants.empty()) {
        throw ConfigError("gate_variants must not be empty");
    }
    if (spec.input_cases.empty()) {
        throw ConfigError("input_cases must not be empty");
    }
    for (GatePreset p : spec.gate_variants) {
        if (p == GatePreset::custom) {
            throw ConfigError("sweep variants must be registered presets, not 'custom'");
        }
    }
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t sigma_index,
                         std::size_t trial_index, std::size_t input_index) {
    std::uint64_t h = splitmix64(base_seed);
    h = splitmix64(h ^ (sigma_index + 1));
    h = splitmix64(h ^ (trial_index + 1));
    h = splitmix64(h ^ (input_index + 1));
    return h;
}

std::vector<TrialRecord> run_sweep_trials(const SweepSpec& spec) {
    validate(spec);
    std::vector<TrialRecord> trials;
    trials.reserve(spec.sigma_values.size() * static_cast<std::size_t>(spec.trials_per_sigma) *
                   spec.gate_variants.size() * spec.input_cases.size());
    for (std::size_t ii = 0; ii < spec.input_cases.size(); ++ii) {
        for (std::size_t si = 0; si < spec.sigma_values.size(); ++si) {
            for (int ti = 0; ti < spec.trials_per_sigma; ++ti) {
                const std::uint64_t seed =
                    trial_seed(spec.base_seed, si, static_cast<std::size_t>(ti), ii);
                for (GatePreset variant : spec.gate_variants) {
                    TrialRecord rec;
                    rec.variant = variant;
                    rec.inputs = spec.input_cases[ii];
                    rec.sigma = spec.sigma_values[si];
                    rec.trial = ti;
                    rec.seed = seed;
                    try {
                        const GateConfig cfg = build_gate(variant, rec.inputs, rec.sigma, seed);
                        const Trace trace = run_simulation(cfg);
                        const MetricsReport report = evaluate_trace(trace, cfg);
                        rec.confusion = report.confusion;
                        rec.accuracy = report.accuracy;
                        rec.ler_percent = report.ler_percent;
                        rec.n_bins = static_cast<int>(report.grid.bin_count());
                    } catch (const std::exception& e) {
                        rec.failed = true;
                        rec.error = e.what();
                    }
                    trials.push_back(std::move(rec));
                }
            }
        }
    }
    return trials;
}

namespace {

struct CellStats {
    std::vector<double> acc;
    std::vector<double> ler;
    int failures = 0;
};

double mean(const std::vector<double>& xs) {
    double sum = 0.0;
    for (double x : xs) {
        sum += x;
    }
    return sum / static_cast<double>(xs.size());
}

double sample_std(const std::vector<double>& xs, double m) {
    if (xs.size() < 2) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    double ss = 0.0;
    for (double x : xs) {
        ss += (x - m) * (x - m);
    }
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

} // namespace

std::vector<SummaryRow> aggregate(const std::vector<TrialRecord>& trials) {
    if (trials.empty()) {
        throw SimulationError("aggregate: no trials");
    }
    // Fixed cell order: variant (preset order), inputs, ascending sigma.
    using Key = std::tuple<int, int, double>;
    std::map<Key, CellStats> cells;
    for (const TrialRecord& t : trials) {
        const int input_key = (t.inputs[0] ? 2 : 0) + (t.inputs[1] ? 1 : 0);
        CellStats& cell = cells[{static_cast<int>(t.variant), input_key, t.sigma}];
        if (t.failed) {
            ++cell.failures;
        } else {
            cell.acc.push_back(t.accuracy);
            cell.ler.push_back(t.ler_percent);
        }
    }
    std::vector<SummaryRow> rows;
    rows.reserve(cells.size());
    for (const auto& [key, cell] : cells) {
        SummaryRow row;
        row.variant = static_cast<GatePreset>(std::get<0>(key));
        const int input_key = std::get<1>(key);
        row.inputs = {(input_key & 2) != 0, (input_key & 1) != 0};
        row.sigma = std::get<2>(key);
        row.n_trials = static_cast<int>(cell.acc.size());
        row.failures = cell.failures;
        if (!cell.acc.empty()) {
            row.acc_mean = mean(cell.acc);
            row.acc_std = sample_std(cell.acc, row.acc_mean);
            row.ler_mean = mean(cell.ler);
            row.ler_std = sample_std(cell.ler, row.ler_mean);
        } else {
            row.acc_mean = std::numeric_limits<double>::quiet_NaN();
            row.acc_std = std::numeric_limits<double>::quiet_NaN();
            row.ler_mean = std::numeric_limits<double>::quiet_NaN();
            row.ler_std = std::numeric_limits<double>::quiet_NaN();
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace astrogate
