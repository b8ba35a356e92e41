#include "chowkernel/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace chowkernel;

int exit_status(int n_fail) { return n_fail == 0 ? 0 : 1; }

std::vector<GridLine> load_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open grid file: " + path);
    return parse_grid(in);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chowkernel: exact verification of the hyperplane-action "
                 "decomposition identities"};
    app.require_subcommand(1);

    // --- check ---
    auto* check = app.add_subcommand("check", "run checks for one parameter tuple");
    int n = 0, r = 0;
    std::vector<int> degrees;
    std::optional<int> d_opt, w_opt;
    std::vector<std::string> check_names;
    bool all = false, fail_fast = false;
    std::string format = "text";
    check->add_option("--n", n, "ambient dimension parameter n")->required();
    check->add_option("--r", r, "codimension r")->required();
    check->add_option("--degrees", degrees, "complete-intersection degrees d_1,...,d_r")
        ->required()
        ->delimiter(',');
    check->add_option("--d", d_opt, "section degree d (default max(d_r, 2(n+r)))");
    check->add_option("--w", w_opt, "cycle dimension w (0 <= w <= n-2)");
    check->add_option("--check", check_names, "check name (repeatable)");
    check->add_flag("--all", all, "run every check (default when no --check given)");
    check->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    check->add_flag("--fail-fast", fail_fast, "stop after the first failing check");

    // --- sweep ---
    auto* sweep = app.add_subcommand("sweep", "run all checks over a parameter grid");
    std::string grid_file;
    std::string sweep_format = "text";
    bool sweep_fail_fast = false;
    sweep->add_option("--grid-file", grid_file,
                      "newline-delimited tuples: n r d1,...  [d] [w] "
                      "(default: CHOWKERNEL_GRID or the built-in grid)");
    sweep->add_option("--format", sweep_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    sweep->add_flag("--fail-fast", sweep_fail_fast, "stop after the first failing tuple");

    // --- explain ---
    auto* explain = app.add_subcommand("explain", "print the anchor and formula for a check");
    std::string explain_name;
    explain->add_option("name", explain_name, "check name")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            RunConfig config;
            if (!all) config.checks = check_names;
            config.format = (format == "json") ? ReportFormat::Json : ReportFormat::Text;
            config.fail_fast = fail_fast;
            PaperParams params;
            try {
                params = PaperParams::make(n, r, degrees, d_opt, w_opt);
            } catch (const ParamsError& e) {
                std::cerr << "invalid parameters: " << e.what() << "\n";
                return 2;
            }
            const Report report = run_checks(params, config);
            std::cout << (config.format == ReportFormat::Json ? render_json(report)
                                                              : render_text(report));
            return exit_status(report.n_fail);
        }

        if (sweep->parsed()) {
            RunConfig config;
            config.format =
                (sweep_format == "json") ? ReportFormat::Json : ReportFormat::Text;
            config.fail_fast = sweep_fail_fast;
            std::vector<GridLine> grid;
            if (!grid_file.empty()) {
                grid = load_grid(grid_file);
            } else if (const char* env = std::getenv("CHOWKERNEL_GRID")) {
                grid = load_grid(env);
            } else {
                for (const auto& p : default_grid()) {
                    GridLine g;
                    g.n = p.n;
                    g.r = p.r;
                    g.degrees = p.degrees;
                    g.d = p.d;
                    grid.push_back(std::move(g));
                }
            }
            if (grid.empty()) {
                std::cerr << "invalid parameters: empty grid\n";
                return 2;
            }
            const SweepReport result = run_sweep(grid, config);
            std::cout << (config.format == ReportFormat::Json ? render_json(result)
                                                              : render_text(result));
            return exit_status(result.n_fail);
        }

        if (explain->parsed()) {
            std::cout << explain_check(explain_name);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
