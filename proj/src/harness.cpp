#include "astrogate/harness.hpp"

#include <cstdio>
#include <filesystem>
#include <string>

#include "astrogate/config.hpp"
#include "astrogate/csv.hpp"
#include "astrogate/errors.hpp"

namespace astrogate {

namespace {

void ensure_dir(const std::string& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory '" + out_dir + "': " + ec.message());
    }
}

std::string join(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

std::string echo_text(const std::vector<std::string>& lines) {
    std::string text;
    for (const std::string& line : lines) {
        text += line;
        text += '\n';
    }
    return text;
}

} // namespace

MetricsReport run_single(const GateConfig& cfg, const std::string& out_dir) {
    validate(cfg);
    ensure_dir(out_dir);

    const Trace trace = run_simulation(cfg);
    const MetricsReport report = evaluate_trace(trace, cfg);

    const std::string tag = std::string(preset_name(cfg.preset)) + "_" +
                            format_inputs(cfg.logic_inputs);
    write_trace_csv(trace, join(out_dir, "trace_" + tag + ".csv"));
    write_metrics_csv(report, cfg, join(out_dir, "metrics.csv"));
    write_text_file(echo_text(describe(cfg)), join(out_dir, "config_echo.txt"));

    std::printf("accuracy=%.2f, LER=%.2f%%\n", report.accuracy, report.ler_percent);
    return report;
}

std::vector<SummaryRow> run_sweep(const SweepSpec& spec, const std::string& out_dir) {
    validate(spec);
    ensure_dir(out_dir);

    const std::vector<TrialRecord> trials = run_sweep_trials(spec);
    const std::vector<SummaryRow> summary = aggregate(trials);

    write_per_trial_csv(trials, join(out_dir, "per_trial.csv"));
    write_summary_csv(summary, join(out_dir, "summary.csv"));
    write_text_file(echo_text(describe(spec)), join(out_dir, "config_echo.txt"));
    return summary;
}

} // namespace astrogate
