// Command-line experiment runner: run, table, compare, list.

#include <unionde/campaign.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace unionde;

namespace {

std::vector<RunRecord> load_results(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open results file '" + path + "'");
    return read_csv(in);
}

fs::path resolve_output(const std::string& out)
{
    fs::path p(out);
    if (fs::is_directory(p) || (!out.empty() && (out.back() == '/' || out.back() == '\\'))) {
        fs::create_directories(p);
        return p / "results.csv";
    }
    if (p.has_parent_path())
        fs::create_directories(p.parent_path());
    return p;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Differential evolution experiment runner (union, ranking, proximity, DERL and classic mutations)"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "Execute runs x strategies x functions and write a CSV");
    std::string config_path;
    std::vector<std::string> strategies;
    std::vector<std::string> functions;
    std::size_t runs = 0, np = 0, dim = 0, max_evals = 0, jobs = 0;
    std::uint64_t seed = 0;
    std::string out, policy, shift_file;
    double tie_tol = 0.0, target_error = 0.0;
    run_cmd->add_option("--config", config_path, "Key = value configuration file; flags override it");
    run_cmd->add_option("--strategies", strategies, "Strategy identifiers (comma separated)")->delimiter(',');
    run_cmd->add_option("--functions", functions, "Function identifiers (comma separated)")->delimiter(',');
    run_cmd->add_option("--runs", runs, "Independent runs per strategy and function");
    run_cmd->add_option("--np", np, "Population size");
    run_cmd->add_option("--dim", dim, "Problem dimension");
    run_cmd->add_option("--max-evals", max_evals, "Evaluation budget per run (default dim * 10000)");
    run_cmd->add_option("--seed", seed, "Base seed");
    run_cmd->add_option("--jobs", jobs, "Worker threads (default: hardware concurrency)");
    run_cmd->add_option("--out", out, "CSV file or directory (default: standard output)");
    run_cmd->add_option("--tie-tol", tie_tol, "Tie tolerance (recorded for table/compare)");
    run_cmd->add_option("--param-policy", policy, "jde or fixed:F=<v>,CR=<v>");
    run_cmd->add_option("--target-error", target_error, "Stop a run once its error reaches this value");
    run_cmd->add_option("--shift-file", shift_file, "Whitespace-separated shift vector for the shifted_* functions");

    // table
    auto* table_cmd = app.add_subcommand("table", "Mean-error table with win/tie/lose footer");
    std::string table_csv, reference;
    double table_tol = 0.0;
    table_cmd->add_option("results", table_csv, "CSV produced by 'run'")->required();
    table_cmd->add_option("--reference", reference, "Strategy the footer counts wins for (default: ude, else last)");
    table_cmd->add_option("--tie-tol", table_tol, "Absolute tolerance for ties");

    // compare
    auto* cmp_cmd = app.add_subcommand("compare", "Wilcoxon signed-rank test over per-function means");
    std::string cmp_csv, cmp_a, cmp_b;
    double alpha = 0.05;
    cmp_cmd->add_option("results", cmp_csv, "CSV produced by 'run'")->required();
    cmp_cmd->add_option("strategy_a", cmp_a, "First strategy (compared method)")->required();
    cmp_cmd->add_option("strategy_b", cmp_b, "Second strategy; '+' means it is significantly better")->required();
    cmp_cmd->add_option("--alpha", alpha, "Significance level");

    // list
    auto* list_cmd = app.add_subcommand("list", "List strategy and function identifiers");
    std::size_t list_dim = 30;
    list_cmd->add_option("--dim", list_dim, "Dimension used to report bounds");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) {
            CampaignConfig cfg = config_path.empty() ? CampaignConfig{} : load_config_file(config_path);
            if (run_cmd->count("--strategies"))
                cfg.strategies = strategies;
            if (run_cmd->count("--functions"))
                cfg.functions = functions;
            if (run_cmd->count("--runs"))
                cfg.runs = runs;
            if (run_cmd->count("--np"))
                cfg.np = np;
            if (run_cmd->count("--dim"))
                cfg.dim = dim;
            if (run_cmd->count("--max-evals"))
                cfg.max_evals = max_evals;
            if (run_cmd->count("--seed"))
                cfg.base_seed = seed;
            if (run_cmd->count("--jobs"))
                cfg.jobs = jobs;
            if (run_cmd->count("--out"))
                cfg.output = out;
            if (run_cmd->count("--tie-tol"))
                cfg.tie_tol = tie_tol;
            if (run_cmd->count("--param-policy"))
                cfg.param_policy = policy;
            if (run_cmd->count("--target-error"))
                cfg.target_error = target_error;
            if (run_cmd->count("--shift-file"))
                cfg.shift_file = shift_file;

            cfg.validate();
            if (cfg.output.empty()) {
                write_csv(std::cout, run_campaign(cfg, &std::cerr));
            } else {
                const auto path = resolve_output(cfg.output);
                std::ofstream file(path, std::ios::binary);
                if (!file)
                    throw std::runtime_error("cannot write '" + path.string() + "'");
                write_csv(file, run_campaign(cfg, &std::cerr));
                if (!file.flush())
                    throw std::runtime_error("failed writing '" + path.string() + "'");
                std::cerr << "wrote " << path.string() << "\n";
            }
        } else if (*table_cmd) {
            const auto summary = summarize(load_results(table_csv));
            if (summary.strategies.empty())
                throw std::runtime_error("'" + table_csv + "' has no result rows");
            std::string ref = reference;
            if (ref.empty())
                ref = summary.strategy_index("ude") ? std::string("ude") : summary.strategies.back();
            print_table(std::cout, summary, ref, table_tol);
        } else if (*cmp_cmd) {
            print_comparison(std::cout, compare_strategies(load_results(cmp_csv), cmp_a, cmp_b, alpha));
        } else if (*list_cmd) {
            print_listing(std::cout, list_dim);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
