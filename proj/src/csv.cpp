#include "astrogate/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "astrogate/errors.hpp"

namespace astrogate {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_inputs(std::array<bool, 2> inputs) {
    std::string s(2, '0');
    s[0] = inputs[0] ? '1' : '0';
    s[1] = inputs[1] ? '1' : '0';
    return s;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    return out;
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) {
        throw IoError("write to '" + path + "' failed");
    }
}

} // namespace

void write_trace_csv(const Trace& trace, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "t_ms,v1,u1,v2,u2,v3,u3,g1,g2,c1,ce1,Sm1,Gm1,c2,ce2,Sm2,Gm2,"
           "Isyn1,Isyn2,Iglion1,Iglion2,Inoise,Itot,fired1,fired2,fired3\n";
    for (std::size_t k = 0; k < trace.t_ms.size(); ++k) {
        out << format_double(trace.t_ms[k]);
        for (int i = 0; i < 3; ++i) {
            out << ',' << format_double(trace.v[i][k]) << ',' << format_double(trace.u[i][k]);
        }
        out << ',' << format_double(trace.g_syn[0][k]) << ',' << format_double(trace.g_syn[1][k]);
        for (int i = 0; i < 2; ++i) {
            out << ',' << format_double(trace.c[i][k]) << ',' << format_double(trace.c_e[i][k])
                << ',' << format_double(trace.s_m[i][k]) << ',' << format_double(trace.g_m[i][k]);
        }
        out << ',' << format_double(trace.i_syn[0][k]) << ',' << format_double(trace.i_syn[1][k])
            << ',' << format_double(trace.i_glion[0][k]) << ',' << format_double(trace.i_glion[1][k])
            << ',' << format_double(trace.i_noise[k]) << ',' << format_double(trace.i_tot[k])
            << ',' << int(trace.fired[0][k]) << ',' << int(trace.fired[1][k])
            << ',' << int(trace.fired[2][k]) << '\n';
    }
    finish(out, path);
}

void write_metrics_csv(const MetricsReport& report, const GateConfig& cfg,
                       const std::string& path) {
    std::ofstream out = open_out(path);
    out << "gate,inputs,sigma,trial_seed,TP,TN,FP,FN,accuracy,ler_percent,n_bins\n";
    out << preset_name(cfg.preset) << ',' << format_inputs(cfg.logic_inputs) << ','
        << format_double(cfg.noise_sigma) << ',' << cfg.seed << ','
        << report.confusion.tp << ',' << report.confusion.tn << ','
        << report.confusion.fp << ',' << report.confusion.fn << ','
        << format_double(report.accuracy) << ',' << format_double(report.ler_percent)
        << ',' << report.grid.bin_count() << '\n';
    finish(out, path);
}

void write_per_trial_csv(const std::vector<TrialRecord>& trials, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "variant,inputs,sigma,trial,trial_seed,TP,TN,FP,FN,accuracy,ler_percent,"
           "n_bins,failed,error\n";
    for (const TrialRecord& t : trials) {
        std::string error = t.error;
        for (char& ch : error) {
            if (ch == ',' || ch == '\n') {
                ch = ';';
            }
        }
        out << preset_name(t.variant) << ',' << format_inputs(t.inputs) << ','
            << format_double(t.sigma) << ',' << t.trial << ',' << t.seed << ','
            << t.confusion.tp << ',' << t.confusion.tn << ',' << t.confusion.fp << ','
            << t.confusion.fn << ',' << format_double(t.accuracy) << ','
            << format_double(t.ler_percent) << ',' << t.n_bins << ','
            << (t.failed ? 1 : 0) << ',' << error << '\n';
    }
    finish(out, path);
}

namespace {

std::vector<std::string> split_line(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == sep) {
        fields.emplace_back();
    }
    return fields;
}

} // namespace

std::vector<TrialRecord> read_per_trial_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw IoError("'" + path + "' is empty");
    }
    std::vector<TrialRecord> trials;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const std::vector<std::string> f = split_line(line, ',');
        if (f.size() < 13) {
            throw IoError("malformed per-trial row: " + line);
        }
        TrialRecord t;
        t.variant = parse_preset(f[0]);
        t.inputs = {f[1].size() > 0 && f[1][0] == '1', f[1].size() > 1 && f[1][1] == '1'};
        t.sigma = std::stod(f[2]);
        t.trial = std::stoi(f[3]);
        t.seed = std::stoull(f[4]);
        t.confusion.tp = std::stol(f[5]);
        t.confusion.tn = std::stol(f[6]);
        t.confusion.fp = std::stol(f[7]);
        t.confusion.fn = std::stol(f[8]);
        t.accuracy = std::stod(f[9]);
        t.ler_percent = std::stod(f[10]);
        t.n_bins = std::stoi(f[11]);
        t.failed = f[12] == "1";
        if (f.size() > 13) {
            t.error = f[13];
        }
        trials.push_back(std::move(t));
    }
    return trials;
}

void write_summary_csv(const std::vector<SummaryRow>& rows, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "variant,inputs,sigma,n_trials,acc_mean,acc_std,ler_mean,ler_std,failures\n";
    for (const SummaryRow& r : rows) {
        out << preset_name(r.variant) << ',' << format_inputs(r.inputs) << ','
            << format_double(r.sigma) << ',' << r.n_trials << ','
            << format_double(r.acc_mean) << ',' << format_double(r.acc_std) << ','
            << format_double(r.ler_mean) << ',' << format_double(r.ler_std) << ','
            << r.failures << '\n';
    }
    finish(out, path);
}

void write_text_file(const std::string& content, const std::string& path) {
    std::ofstream out = open_out(path);
    out << content;
    finish(out, path);
}

} // namespace astrogate
