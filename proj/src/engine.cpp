#include <unionde/core.hpp>
#include <unionde/engine.hpp>

#include <algorithm>

namespace unionde {

RunConfig RunConfig::with_defaults(std::size_t dim)
{
    RunConfig c;
    c.dim = dim;
    c.max_evals = dim * 10000;
    return c;
}

void RunConfig::validate() const
{
    const std::size_t need = std::max(min_population_size, min_population_for(strategy.kind));
    if (np < need)
        throw ConfigurationError("population size " + std::to_string(np) + " is too small for strategy " +
                                 std::string(strategy_name(strategy.kind)) + " (minimum " + std::to_string(need) + ")");
    if (dim == 0)
        throw ConfigurationError("dimension must be positive");
    if (max_evals < np)
        throw ConfigurationError("max_evals (" + std::to_string(max_evals) + ") must be at least the population size (" +
                                 std::to_string(np) + ")");
    if (!(strategy.k_weight >= 0.0 && strategy.k_weight <= 1.0))
        throw ConfigurationError("mutation k weight must lie in [0, 1]");
}

RealVector binomial_crossover(std::span<const double> parent, std::span<const double> donor, double cr,
    RandomSource& rng)
{
    if (parent.size() != donor.size() || parent.empty())
        throw ContractViolation("binomial_crossover: parent and donor differ in dimension");
    const std::size_t j_rand = rng.uniform_int(0, parent.size() - 1);
    RealVector trial(parent.begin(), parent.end());
    for (std::size_t j = 0; j < trial.size(); ++j)
        if (rng.uniform() < cr || j == j_rand)
            trial[j] = donor[j];
    return trial;
}

RunResult run(const RunConfig& config, const ObjectiveFunction& objective, const GenerationObserver& observer)
{
    config.validate();
    if (objective.dimension() != config.dim)
        throw ConfigurationError("objective '" + objective.name() + "' has dimension " +
                                 std::to_string(objective.dimension()) + ", configuration asks for " +
                                 std::to_string(config.dim));

    const auto& bounds = objective.bounds();
    const auto kind = config.strategy.kind;
    RandomSource rng(config.seed);

    Population pop = init_population(config.np, bounds, objective, rng, initial_scale_factor(config.param_policy),
        initial_crossover_rate(config.param_policy));
    std::size_t evals = config.np;

    DistanceMatrix dm;
    if (uses_distance_matrix(kind))
        dm = DistanceMatrix(pop);
    const DistanceMatrix* dm_view = uses_distance_matrix(kind) ? &dm : nullptr;

    RunResult result;
    result.seed = config.seed;
    result.trajectory.push_back({evals, pop.best().fitness()});
    if (observer)
        observer(pop, dm_view);

    auto reached_target = [&] {
        return config.target_error && objective.error(pop.best().fitness()) <= *config.target_error;
    };

    RankWeights rank;
    std::vector<RealVector> trials(config.np);
    std::vector<TrialParameters> params(config.np);
    std::vector<std::size_t> replaced;
    replaced.reserve(config.np);

    while (evals < config.max_evals && !reached_target()) {
        if (uses_rank_weights(kind))
            rank = build_rank_weights(pop);

        for (std::size_t i = 0; i < config.np; ++i) {
            params[i] = propose_parameters(pop[i], config.param_policy, rng);
            const auto roles = select_parents(config.strategy, pop, i, rank, dm, rng);
            auto donor = make_donor(config.strategy, pop, roles, params[i].f);
            auto trial = binomial_crossover(pop[i].position(), donor, params[i].cr, rng);
            trials[i] = clamp_or_resample(std::move(trial), bounds, rng);
        }

        const std::size_t budget = std::min(config.np, config.max_evals - evals);
        replaced.clear();
        for (std::size_t i = 0; i < budget; ++i) {
            const double ft = evaluate_checked(objective, trials[i]);
            ++evals;
            if (ft < pop[i].fitness()) {
                pop.replace(i, Individual(std::move(trials[i]), ft, params[i].f, params[i].cr));
                replaced.push_back(i);
            }
        }
        if (dm_view)
            for (std::size_t i : replaced)
                dm.update_after_replacement(pop, i);

        pop.advance_generation();
        result.trajectory.push_back({evals, pop.best().fitness()});
        if (observer)
            observer(pop, dm_view);
    }

    result.best_fitness = pop.best().fitness();
    result.best_error = objective.error(result.best_fitness);
    result.best_position = pop.best().position();
    result.evals_used = evals;
    result.generations = pop.generation();
    return result;
}

} // namespace unionde
