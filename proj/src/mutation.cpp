#include <unionde/mutation.hpp>

#include <algorithm>

namespace unionde {

namespace {

constexpr std::array<std::string_view, 11> kNames = {"rand1", "best1", "rand2", "best2", "current-to-best1",
    "rand-to-best1", "current-to-rand1", "derl2", "proximity2", "ranking2", "ude"};

RoleSlot slot(std::size_t index, Pick source)
{
    return RoleSlot{index, source};
}

ParentRoles one_difference(RoleSlot base, RoleSlot lead, RoleSlot term)
{
    ParentRoles r;
    r.base = base;
    r.leading_slots[0] = lead;
    r.terminal_slots[0] = term;
    r.differences = 1;
    return r;
}

ParentRoles two_differences(RoleSlot base, RoleSlot lead0, RoleSlot term0, RoleSlot lead1, RoleSlot term1)
{
    ParentRoles r;
    r.base = base;
    r.leading_slots = {lead0, lead1};
    r.terminal_slots = {term0, term1};
    r.differences = 2;
    return r;
}

void require_population(StrategyKind kind, std::size_t np)
{
    if (np < min_population_for(kind))
        throw ConfigurationError("strategy " + std::string(strategy_name(kind)) + " needs a population of at least " +
                                 std::to_string(min_population_for(kind)) + ", got " + std::to_string(np));
}

} // namespace

MutationStrategy::MutationStrategy(StrategyKind kind_, double k_weight_) : kind(kind_), k_weight(k_weight_)
{
    if (!(k_weight >= 0.0 && k_weight <= 1.0))
        throw ConfigurationError("mutation k weight must lie in [0, 1]");
}

const std::vector<std::string>& strategy_names()
{
    static const std::vector<std::string> names(kNames.begin(), kNames.end());
    return names;
}

std::string_view strategy_name(StrategyKind kind)
{
    return kNames[static_cast<std::size_t>(kind)];
}

MutationStrategy parse_strategy(std::string_view name)
{
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == name)
            return MutationStrategy(static_cast<StrategyKind>(i));
    std::string valid;
    for (auto n : kNames) {
        if (!valid.empty())
            valid += ", ";
        valid += n;
    }
    throw ConfigurationError("unknown strategy '" + std::string(name) + "'; valid identifiers: " + valid);
}

bool uses_rank_weights(StrategyKind kind)
{
    return kind == StrategyKind::Ranking2 || kind == StrategyKind::Ude;
}

bool uses_distance_matrix(StrategyKind kind)
{
    return kind == StrategyKind::Proximity2 || kind == StrategyKind::Ude;
}

std::size_t min_population_for(StrategyKind kind)
{
    // current member + best (when used) + uniform/intelligent parents
    switch (kind) {
    case StrategyKind::Rand1:
    case StrategyKind::CurrentToRand1:
        return 4;
    case StrategyKind::Best1:
    case StrategyKind::CurrentToBest1:
        return 4;
    case StrategyKind::RandToBest1:
        return 5;
    case StrategyKind::Best2:
    case StrategyKind::Rand2:
    case StrategyKind::Derl2:
    case StrategyKind::Proximity2:
    case StrategyKind::Ranking2:
    case StrategyKind::Ude:
        return 6;
    }
    return 6;
}

ParentRoles tournament_roles(std::span<const std::size_t> candidates, const Population& pop)
{
    if (candidates.size() != 5)
        throw ContractViolation("tournament_roles: expected five candidates");
    std::size_t winner = 0;
    for (std::size_t c = 1; c < candidates.size(); ++c)
        if (pop[candidates[c]].fitness() < pop[candidates[winner]].fitness())
            winner = c;

    std::array<std::size_t, 4> rest{};
    std::size_t k = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c)
        if (c != winner)
            rest[k++] = candidates[c];
    return two_differences(slot(candidates[winner], Pick::Tournament), slot(rest[0], Pick::Uniform),
        slot(rest[1], Pick::Uniform), slot(rest[2], Pick::Uniform), slot(rest[3], Pick::Uniform));
}

ParentRoles select_parents(const MutationStrategy& strategy, const Population& pop, std::size_t current,
    const RankWeights& rank, const DistanceMatrix& dm, RandomSource& rng)
{
    const std::size_t np = pop.size();
    if (current >= np)
        throw ContractViolation("select_parents: current index out of range");
    require_population(strategy.kind, np);
    if (uses_rank_weights(strategy.kind) && rank.size() != np)
        throw ContractViolation("select_parents: rank weights do not match the population");
    if (uses_distance_matrix(strategy.kind) && dm.size() != np)
        throw ContractViolation("select_parents: distance matrix does not match the population");

    const std::size_t best = pop.best_index();
    const auto U = Pick::Uniform;

    switch (strategy.kind) {
    case StrategyKind::Rand1: {
        const std::size_t ex[] = {current};
        auto r = uniform_select(np, 3, ex, rng);
        return one_difference(slot(r[0], U), slot(r[1], U), slot(r[2], U));
    }
    case StrategyKind::Best1: {
        const std::size_t ex[] = {current, best};
        auto r = uniform_select(np, 2, ex, rng);
        return one_difference(slot(best, Pick::Best), slot(r[0], U), slot(r[1], U));
    }
    case StrategyKind::Rand2: {
        const std::size_t ex[] = {current};
        auto r = uniform_select(np, 5, ex, rng);
        return two_differences(slot(r[0], U), slot(r[1], U), slot(r[2], U), slot(r[3], U), slot(r[4], U));
    }
    case StrategyKind::Best2: {
        const std::size_t ex[] = {current, best};
        auto r = uniform_select(np, 4, ex, rng);
        return two_differences(slot(best, Pick::Best), slot(r[0], U), slot(r[1], U), slot(r[2], U), slot(r[3], U));
    }
    case StrategyKind::CurrentToBest1: {
        const std::size_t ex[] = {current, best};
        auto r = uniform_select(np, 2, ex, rng);
        const auto cur = slot(current, Pick::Current);
        return two_differences(cur, slot(best, Pick::Best), cur, slot(r[0], U), slot(r[1], U));
    }
    case StrategyKind::RandToBest1: {
        const std::size_t ex[] = {current, best};
        auto r = uniform_select(np, 3, ex, rng);
        return two_differences(slot(r[0], U), slot(best, Pick::Best), slot(r[0], U), slot(r[1], U), slot(r[2], U));
    }
    case StrategyKind::CurrentToRand1: {
        const std::size_t ex[] = {current};
        auto r = uniform_select(np, 3, ex, rng);
        const auto cur = slot(current, Pick::Current);
        return two_differences(cur, slot(r[0], U), cur, slot(r[1], U), slot(r[2], U));
    }
    case StrategyKind::Derl2: {
        const std::size_t ex[] = {current};
        auto r = uniform_select(np, 5, ex, rng);
        return tournament_roles(r, pop);
    }
    case StrategyKind::Proximity2: {
        const std::size_t ex[] = {current};
        auto r = roulette_select(probability_row(dm, current), 5, true, ex, rng);
        const auto D = Pick::DesignSpace;
        return two_differences(slot(r[0], D), slot(r[1], D), slot(r[2], D), slot(r[3], D), slot(r[4], D));
    }
    case StrategyKind::Ranking2: {
        const std::size_t ex[] = {current};
        auto fs = roulette_select(rank.member_weight, 3, true, ex, rng);
        const std::size_t ex2[] = {current, fs[0], fs[1], fs[2]};
        auto r = uniform_select(np, 2, ex2, rng);
        const auto R = Pick::FitnessRank;
        return two_differences(slot(fs[0], R), slot(fs[1], R), slot(r[0], U), slot(fs[2], R), slot(r[1], U));
    }
    case StrategyKind::Ude: {
        // Fitness-space picks first, then the design-space pick, then the
        // random terminals; each stage excludes everything chosen before it.
        const std::size_t ex[] = {current};
        auto fs = roulette_select(rank.member_weight, 2, true, ex, rng);
        const std::size_t ex_ds[] = {current, fs[0], fs[1]};
        auto ds = roulette_select(probability_row(dm, current), 1, true, ex_ds, rng);
        const std::size_t ex_r[] = {current, fs[0], fs[1], ds[0]};
        auto r = uniform_select(np, 2, ex_r, rng);
        return two_differences(slot(fs[0], Pick::FitnessRank), slot(fs[1], Pick::FitnessRank), slot(r[0], U),
            slot(ds[0], Pick::DesignSpace), slot(r[1], U));
    }
    }
    throw ContractViolation("select_parents: unhandled strategy");
}

RealVector make_donor(const MutationStrategy& strategy, const Population& pop, const ParentRoles& roles, double f)
{
    std::array<double, 2> coef = {f, f};
    if (strategy.kind == StrategyKind::CurrentToRand1)
        coef = {strategy.k_weight, strategy.k_weight * f};

    RealVector donor = pop[roles.base.index].position();
    for (std::size_t d = 0; d < roles.differences; ++d) {
        const auto& lead = pop[roles.leading_slots[d].index].position();
        const auto& term = pop[roles.terminal_slots[d].index].position();
        for (std::size_t j = 0; j < donor.size(); ++j)
            donor[j] += coef[d] * (lead[j] - term[j]);
    }
    return donor;
}

} // namespace unionde
