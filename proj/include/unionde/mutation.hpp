#pragma once

#include <unionde/random.hpp>
#include <unionde/selection.hpp>
#include <unionde/types.hpp>

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unionde {

enum class StrategyKind {
    Rand1,          ///< x_r1 + F (x_r2 - x_r3)
    Best1,          ///< x_best + F (x_r1 - x_r2)
    Rand2,          ///< x_r1 + F (x_r2 - x_r3) + F (x_r4 - x_r5)
    Best2,          ///< x_best + F (x_r1 - x_r2) + F (x_r3 - x_r4)
    CurrentToBest1, ///< x_i + F (x_best - x_i) + F (x_r2 - x_r3)
    RandToBest1,    ///< x_r1 + F (x_best - x_r1) + F (x_r2 - x_r3)
    CurrentToRand1, ///< x_i + k (x_r1 - x_i) + k F (x_r2 - x_r3)
    Derl2,          ///< rand/2 with the tournament winner of five as base
    Proximity2,     ///< rand/2 with all parents drawn by design-space roulette
    Ranking2,       ///< rand/2 with base and leading parents drawn by rank roulette
    Ude,            ///< x_fs1 + F (x_fs2 - x_r1) + F (x_ds - x_r2)
};

struct MutationStrategy {
    StrategyKind kind = StrategyKind::Ude;
    double k_weight = 0.5; ///< only used by CurrentToRand1

    MutationStrategy() = default;
    explicit MutationStrategy(StrategyKind kind, double k_weight = 0.5);
};

/// Stable identifiers (rand1, best1, ..., ude), in enum order.
const std::vector<std::string>& strategy_names();
std::string_view strategy_name(StrategyKind kind);
/// Throws ConfigurationError listing the valid identifiers.
MutationStrategy parse_strategy(std::string_view name);

bool uses_rank_weights(StrategyKind kind);
bool uses_distance_matrix(StrategyKind kind);
/// Smallest population for which select_parents can honour distinctness.
std::size_t min_population_for(StrategyKind kind);

/// How the parent in a role was chosen.
enum class Pick { Uniform, Best, Current, Tournament, FitnessRank, DesignSpace };

struct RoleSlot {
    std::size_t index = 0;
    Pick source = Pick::Uniform;

    bool operator==(const RoleSlot&) const = default;
};

/// Parents arranged by their position in the donor formula: base is the
/// first term, leading/terminal are the minuend/subtrahend of each
/// difference. Donor = base + c0 (leading0 - terminal0) [+ c1 (leading1 - terminal1)].
///
/// For the current-to-* and rand-to-best kinds the base member reappears as
/// the first terminal, which is how those formulas are written.
struct ParentRoles {
    RoleSlot base;
    std::array<RoleSlot, 2> leading_slots{};
    std::array<RoleSlot, 2> terminal_slots{};
    std::size_t differences = 0;

    std::span<const RoleSlot> leading() const { return {leading_slots.data(), differences}; }
    std::span<const RoleSlot> terminal() const { return {terminal_slots.data(), differences}; }
};

/// Chooses the parents for member `current` according to the strategy.
/// `rank` must be built from `pop` for strategies that use rank weights and
/// `dm` must match `pop` for those that use the design-space criterion;
/// other strategies ignore them.
ParentRoles select_parents(const MutationStrategy& strategy, const Population& pop, std::size_t current,
    const RankWeights& rank, const DistanceMatrix& dm, RandomSource& rng);

/// Tournament arrangement for five drawn candidates: the fittest becomes the
/// base (first drawn wins ties), the rest fill leading0, terminal0,
/// leading1, terminal1 in drawn order.
ParentRoles tournament_roles(std::span<const std::size_t> candidates, const Population& pop);

/// Donor vector for the given roles. No bound repair is applied.
RealVector make_donor(const MutationStrategy& strategy, const Population& pop, const ParentRoles& roles, double f);

} // namespace unionde
