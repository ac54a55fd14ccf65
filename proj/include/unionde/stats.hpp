#pragma once

#include <unionde/engine.hpp>

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace unionde::stats {

/// Arithmetic mean of the final errors. Empty input is a contract violation.
double mean_error(std::span<const RunResult> results);
double mean_error(std::span<const double> errors);

struct WinTieLose {
    std::size_t win = 0;
    std::size_t tie = 0;
    std::size_t lose = 0;

    bool operator==(const WinTieLose&) const = default;
};

/// Outcome counts from B's point of view: a win is a function where B's
/// mean error is lower than A's by more than tie_tol, a tie is one within
/// tie_tol, everything else is a loss.
WinTieLose win_tie_lose(std::span<const double> a, std::span<const double> b, double tie_tol);

struct PairedSample {
    std::vector<double> a;
    std::vector<double> b;
};

enum class Verdict { Plus, Minus, Equal };
std::string_view to_symbol(Verdict v); ///< "+", "-" or "="

/// Wilcoxon signed-rank result over d = a - b.
///
/// A positive rank belongs to a pair with d > 0, i.e. where B has the lower
/// error; Plus therefore means B is significantly better than A.
struct WilcoxonResult {
    double mr_minus = 0.0;
    double mr_plus = 0.0;
    double sr_minus = 0.0;
    double sr_plus = 0.0;
    double p_value = 1.0;
    Verdict verdict = Verdict::Equal;
    std::size_t n_effective = 0;
    bool underpowered = false; ///< fewer than 5 non-zero differences
    bool exact = true;         ///< exact null distribution vs. normal approximation
};

/// Pairs with at most this many non-zero differences get an exact p-value.
inline constexpr std::size_t exact_cutoff = 25;
inline constexpr std::size_t min_effective_pairs = 5;

/// Average ranks (1-based) of `values`, ties receiving their mid-rank.
std::vector<double> midranks(std::span<const double> values);

/// Exact two-sided p-value: the probability, over all 2^n equally likely
/// sign assignments of `ranks`, that the positive rank sum lies at least as
/// far from its mean as `sr_plus` does. Ranks must be multiples of 0.5.
double exact_p_value(std::span<const double> ranks, double sr_plus);

/// Normal approximation with continuity and tie corrections.
double normal_p_value(std::span<const double> ranks, double sr_plus);

WilcoxonResult wilcoxon_signed_rank(const PairedSample& sample, double alpha = 0.05);

} // namespace unionde::stats
