#pragma once

#include "chowkernel/pipeline.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace chowkernel {

inline constexpr const char* kToolVersion = "0.1.0";

enum class ReportFormat { Text, Json };

struct RunConfig {
    std::vector<std::string> checks; // empty = all
    ReportFormat format = ReportFormat::Text;
    bool fail_fast = false;
};

struct Report {
    std::string tool_version = kToolVersion;
    PaperParams params;
    std::vector<CheckResult> results;
    int n_pass = 0;
    int n_fail = 0;
    long long elapsed_ms = 0;
};

/// One sweep entry: either a full report or a rejected tuple with the
/// violated inequality.
struct SweepEntry {
    std::string label;
    std::optional<Report> report;
    std::string error;
};

struct SweepReport {
    std::string tool_version = kToolVersion;
    std::vector<SweepEntry> entries;
    int n_pass = 0;
    int n_fail = 0;
    long long elapsed_ms = 0;
};

inline Report run_checks(const PaperParams& params, const RunConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    Report report;
    report.params = params;
    std::vector<std::string> names = config.checks;
    if (names.empty())
        for (const auto& info : pipeline::check_registry()) names.push_back(info.name);
    for (const auto& name : names) {
        const pipeline::CheckInfo* info = pipeline::find_check(name);
        if (!info) throw std::invalid_argument("unknown check: " + name);
        bool failed = false;
        for (auto& r : info->run(params)) {
            r.pass ? ++report.n_pass : ++report.n_fail;
            failed = failed || !r.pass;
            report.results.push_back(std::move(r));
        }
        if (failed && config.fail_fast) break;
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return report;
}

/// The six-tuple default grid: minimal (n, r) pairs exercising both boundary
/// inequalities, each with the smallest admissible degree vector and the
/// default d = max(d_r, 2(n+r)).
inline std::vector<PaperParams> default_grid() {
    std::vector<PaperParams> grid;
    grid.push_back(PaperParams::make(3, 2, {2, 3}));
    grid.push_back(PaperParams::make(4, 2, {2, 3}));
    grid.push_back(PaperParams::make(4, 3, {2, 2, 3}));
    grid.push_back(PaperParams::make(5, 2, {2, 3}));
    grid.push_back(PaperParams::make(5, 3, {2, 2, 3}));
    grid.push_back(PaperParams::make(5, 4, {2, 2, 2, 3}));
    return grid;
}

/// Grid file: one tuple per line, "n r d1,d2,... [d] [w]" with "-" for a
/// defaulted d. Blank lines and lines starting with # are skipped.
/// Tuples are validated lazily by the sweep, so a bad line becomes a
/// recorded error entry rather than a parse failure.
struct GridLine {
    int n = 0;
    int r = 0;
    std::vector<int> degrees;
    std::optional<int> d;
    std::optional<int> w;
};

inline std::vector<GridLine> parse_grid(std::istream& in) {
    std::vector<GridLine> out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        GridLine g;
        g.n = std::stoi(tok);
        if (!(ls >> g.r)) throw std::invalid_argument("grid line missing r: " + line);
        std::string degs;
        if (!(ls >> degs)) throw std::invalid_argument("grid line missing degrees: " + line);
        std::istringstream ds(degs);
        std::string piece;
        while (std::getline(ds, piece, ',')) g.degrees.push_back(std::stoi(piece));
        if (ls >> tok && tok != "-") g.d = std::stoi(tok);
        if (ls >> tok && tok != "-") g.w = std::stoi(tok);
        out.push_back(std::move(g));
    }
    return out;
}

inline SweepReport run_sweep(const std::vector<GridLine>& grid, const RunConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    SweepReport sweep;
    for (const auto& g : grid) {
        SweepEntry entry;
        try {
            const PaperParams params = PaperParams::make(g.n, g.r, g.degrees, g.d, g.w);
            entry.label = params.label();
            entry.report = run_checks(params, config);
            sweep.n_pass += entry.report->n_pass;
            sweep.n_fail += entry.report->n_fail;
        } catch (const ParamsError& e) {
            std::string degs;
            for (size_t i = 0; i < g.degrees.size(); ++i)
                degs += (i ? "," : "") + std::to_string(g.degrees[i]);
            entry.label = "(" + std::to_string(g.n) + "," + std::to_string(g.r) + ",(" + degs +
                          "))";
            entry.error = e.what();
            ++sweep.n_fail;
        }
        const bool bad = !entry.error.empty() ||
                         (entry.report && entry.report->n_fail > 0);
        sweep.entries.push_back(std::move(entry));
        if (bad && config.fail_fast) break;
    }
    sweep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    return sweep;
}

inline SweepReport run_sweep(const std::vector<PaperParams>& grid, const RunConfig& config) {
    std::vector<GridLine> lines;
    for (const auto& p : grid) {
        GridLine g;
        g.n = p.n;
        g.r = p.r;
        g.degrees = p.degrees;
        g.d = p.d;
        g.w = p.w;
        lines.push_back(std::move(g));
    }
    return run_sweep(lines, config);
}

// ---------------------------------------------------------------------------
// Rendering. JSON bodies carry no timing, so identical inputs render to
// byte-identical bytes; text output isolates elapsed time in a footer line.
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json params_json(const PaperParams& p) {
    nlohmann::ordered_json j;
    j["n"] = p.n;
    j["r"] = p.r;
    j["degrees"] = p.degrees;
    j["d"] = p.d;
    j["deg_Y"] = rational_to_string(p.deg_Y);
    j["deg_X"] = rational_to_string(p.deg_X);
    if (p.w)
        j["w"] = *p.w;
    else
        j["w"] = nullptr;
    return j;
}

inline nlohmann::ordered_json results_json(const std::vector<CheckResult>& results) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json jr;
        jr["name"] = r.name;
        jr["expected"] = r.expected;
        jr["computed"] = r.computed;
        jr["pass"] = r.pass;
        jr["paper_anchor"] = r.paper_anchor;
        arr.push_back(std::move(jr));
    }
    return arr;
}

inline std::string render_json(const Report& report) {
    nlohmann::ordered_json j;
    j["version"] = report.tool_version;
    j["params"] = params_json(report.params);
    j["results"] = results_json(report.results);
    j["summary"] = {{"pass", report.n_pass}, {"fail", report.n_fail}};
    return j.dump(2) + "\n";
}

inline std::string render_json(const SweepReport& sweep) {
    nlohmann::ordered_json j;
    j["version"] = sweep.tool_version;
    nlohmann::ordered_json grid = nlohmann::ordered_json::array();
    for (const auto& e : sweep.entries) {
        nlohmann::ordered_json je;
        if (e.report) {
            je["params"] = params_json(e.report->params);
            je["results"] = results_json(e.report->results);
            je["summary"] = {{"pass", e.report->n_pass}, {"fail", e.report->n_fail}};
        } else {
            je["params"] = e.label;
            je["error"] = e.error;
            je["summary"] = {{"pass", 0}, {"fail", 1}};
        }
        grid.push_back(std::move(je));
    }
    j["grid"] = std::move(grid);
    j["summary"] = {{"pass", sweep.n_pass}, {"fail", sweep.n_fail}};
    return j.dump(2) + "\n";
}

inline std::string render_text(const Report& report, bool footer = true) {
    std::ostringstream os;
    os << "chowkernel " << report.tool_version << "\n";
    const PaperParams& p = report.params;
    os << "params: n=" << p.n << " r=" << p.r << " degrees=";
    for (size_t i = 0; i < p.degrees.size(); ++i) os << (i ? "," : "") << p.degrees[i];
    os << " d=" << p.d << " deg_Y=" << rational_to_string(p.deg_Y)
       << " deg_X=" << rational_to_string(p.deg_X);
    if (p.w) os << " w=" << *p.w;
    os << "\n";
    if (p.d_overridden)
        os << "warning: d below the default max(d_r, 2(n+r))\n";
    for (const auto& r : report.results) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": expected " << r.expected
           << ", computed " << r.computed << "   (" << r.paper_anchor << ")\n";
    }
    os << "summary: " << report.n_pass << " passed, " << report.n_fail << " failed\n";
    if (footer) os << "elapsed: " << report.elapsed_ms << " ms\n";
    return os.str();
}

inline std::string render_text(const SweepReport& sweep) {
    std::ostringstream os;
    os << "chowkernel " << sweep.tool_version << " sweep (" << sweep.entries.size()
       << " tuples)\n";
    for (const auto& e : sweep.entries) {
        if (e.report) {
            os << "== " << e.label << "\n";
            os << render_text(*e.report, /*footer=*/false);
        } else {
            os << "== " << e.label << "\n";
            os << "[FAIL] invalid parameters: " << e.error << "\n";
        }
    }
    os << "sweep summary: " << sweep.n_pass << " passed, " << sweep.n_fail << " failed\n";
    os << "elapsed: " << sweep.elapsed_ms << " ms\n";
    return os.str();
}

inline std::string explain_check(const std::string& name) {
    const pipeline::CheckInfo* info = pipeline::find_check(name);
    if (!info) throw std::invalid_argument("unknown check: " + name);
    std::ostringstream os;
    os << info->name << "\n";
    os << "  anchor:  " << info->anchor << "\n";
    os << "  formula: " << info->formula << "\n";
    return os.str();
}

} // namespace chowkernel
