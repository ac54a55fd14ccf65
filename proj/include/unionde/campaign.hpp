#pragma once

#include <unionde/engine.hpp>
#include <unionde/stats.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace unionde {

/// A batch of independent runs: every strategy on every function, `runs`
/// times each.
struct CampaignConfig {
    std::vector<std::string> strategies{"ude"};
    std::vector<std::string> functions{"sphere"};
    std::size_t runs = 50;
    std::size_t np = 50;
    std::size_t dim = 30;
    std::optional<std::size_t> max_evals; ///< dim * 10000 when unset
    std::uint64_t base_seed = 1;
    std::string param_policy = "jde";
    std::string output; ///< CSV path or directory; empty means standard output
    double tie_tol = 0.0;
    std::size_t jobs = 0; ///< 0 selects the hardware concurrency
    std::optional<double> target_error;
    std::optional<std::filesystem::path> shift_file;

    std::size_t budget() const { return max_evals.value_or(dim * 10000); }

    /// Checks identifiers and numeric ranges; throws ConfigurationError.
    void validate() const;
};

/// Applies `key = value` lines to `cfg`. Blank lines and '#' comments are
/// skipped; list keys (strategies/strategy, functions/function) may repeat
/// and accept comma-separated values, and the first occurrence replaces the
/// default list.
void apply_config_text(CampaignConfig& cfg, std::istream& in, std::string_view source = "<config>");
CampaignConfig load_config_file(const std::filesystem::path& path);

/// Seed for one run, derived only from its own coordinates so that adding
/// strategies or functions to a campaign never changes existing rows.
std::uint64_t run_seed(std::uint64_t base_seed, std::string_view strategy, std::string_view function,
    std::size_t run_index);

/// One CSV row.
struct RunRecord {
    std::string function;
    std::string strategy;
    std::size_t run_index = 0;
    std::uint64_t seed = 0;
    double final_error = 0.0;
    std::size_t evals_used = 0;

    bool operator==(const RunRecord&) const = default;
};

inline constexpr std::string_view csv_header = "function,strategy,run_index,seed,final_error,evals_used";

/// Receives each finished run; calls are serialized.
using RunCallback = std::function<void(const RunRecord&, const RunResult&)>;

/// Executes the campaign on `cfg.jobs` threads. The returned rows are in
/// canonical order (function, strategy, run index) whatever the completion
/// order was. Progress lines go to `progress` when it is non-null.
std::vector<RunRecord> run_campaign(const CampaignConfig& cfg, std::ostream* progress = nullptr,
    const RunCallback& on_run = {});

/// Shortest decimal text that parses back to exactly `value`.
std::string format_real(double value);

void write_csv(std::ostream& out, const std::vector<RunRecord>& rows);
/// Throws std::runtime_error with the offending line number on malformed input.
std::vector<RunRecord> read_csv(std::istream& in);

/// Per-function mean error of each strategy. Functions and strategies keep
/// their first-appearance order in `rows`.
struct SummaryTable {
    std::vector<std::string> functions;
    std::vector<std::string> strategies;
    std::vector<std::vector<std::optional<double>>> means; ///< [function][strategy]

    std::optional<std::size_t> strategy_index(std::string_view name) const;
};

SummaryTable summarize(const std::vector<RunRecord>& rows);

/// Aligned text table of mean errors with every row's best value marked '*'
/// (all values within tie_tol of the minimum are marked). The footer gives
/// the reference strategy's Win/lose/tie against each other column.
void print_table(std::ostream& out, const SummaryTable& table, std::string_view reference, double tie_tol);

struct Comparison {
    std::string strategy_a;
    std::string strategy_b;
    std::vector<std::string> functions; ///< common function set
    stats::WilcoxonResult result;
};

/// Wilcoxon test over per-function mean errors of A and B on the functions
/// both were run on. Throws ConfigurationError if either strategy is absent.
Comparison compare_strategies(const std::vector<RunRecord>& rows, std::string_view strategy_a,
    std::string_view strategy_b, double alpha = 0.05);

/// Columns: Algorithm, MR-, MR+, SR-, SR+, P-value, Difference.
void print_comparison(std::ostream& out, const Comparison& cmp);

/// Strategy and function identifiers, with each function's bounds at `dim`.
void print_listing(std::ostream& out, std::size_t dim);

} // namespace unionde
