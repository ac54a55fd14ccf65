#pragma once

#include <unionde/mutation.hpp>
#include <unionde/objective.hpp>
#include <unionde/param_control.hpp>
#include <unionde/random.hpp>
#include <unionde/selection.hpp>
#include <unionde/types.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace unionde {

struct RunConfig {
    std::size_t np = 50;
    std::size_t dim = 30;
    std::size_t max_evals = 300000; ///< dim * 10000 by default
    std::uint64_t seed = 1;
    MutationStrategy strategy{StrategyKind::Ude};
    ParamPolicy param_policy = JdeConfig{};
    std::string objective_name;
    std::optional<double> target_error; ///< stop early once best_error <= target

    /// NP = 50 and a budget of dim * 10000 evaluations.
    static RunConfig with_defaults(std::size_t dim);

    /// Throws ConfigurationError describing the first invalid field.
    void validate() const;
};

struct TrajectoryPoint {
    std::size_t evals;
    double best_fitness;
};

struct RunResult {
    double best_error = 0.0;
    double best_fitness = 0.0;
    RealVector best_position;
    std::size_t evals_used = 0;
    std::size_t generations = 0;
    std::vector<TrajectoryPoint> trajectory; ///< one sample after init and after every generation
    std::uint64_t seed = 0;
};

/// Called after initialisation and after every generation's replacement
/// step. The matrix pointer is null for strategies without a design-space
/// criterion.
using GenerationObserver = std::function<void(const Population&, const DistanceMatrix*)>;

/// Binomial crossover: one index j_rand is drawn first, then one uniform
/// per coordinate; coordinate j takes the donor value when its draw is
/// below cr or j == j_rand.
RealVector binomial_crossover(std::span<const double> parent, std::span<const double> donor, double cr,
    RandomSource& rng);

/// Synchronous DE: every generation builds all NP trials from the frozen
/// population, then evaluates them in member order and replaces a member
/// only when its trial is strictly better. The evaluation budget is never
/// exceeded; the last generation is truncated if needed.
RunResult run(const RunConfig& config, const ObjectiveFunction& objective, const GenerationObserver& observer = {});

} // namespace unionde
