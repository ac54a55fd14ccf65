#pragma once

#include <unionde/random.hpp>
#include <unionde/types.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace unionde {

/// Fitness-space selection masses.
///
/// Members are sorted by ascending fitness (ties by index); the member at
/// rank r (1-based, rank 1 is the best) gets mass (NP - r) / NP, so the
/// worst member is never drawn.
struct RankWeights {
    std::vector<std::size_t> sorted_order; ///< member indices, best first
    std::vector<double> weight_of_rank;    ///< weight_of_rank[r - 1] for rank r
    std::vector<double> member_weight;     ///< the same masses indexed by member

    std::size_t size() const { return sorted_order.size(); }
};

RankWeights build_rank_weights(std::span<const double> fitness);
RankWeights build_rank_weights(const Population& pop);

/// Symmetric NP x NP matrix of Euclidean distances between members.
///
/// Built from the upper triangle and mirrored; after a member is replaced
/// only its row and column need recomputing.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(const Population& pop);

    std::size_t size() const { return _n; }
    double operator()(std::size_t i, std::size_t j) const { return _d[i * _n + j]; }
    std::span<const double> row(std::size_t i) const { return {_d.data() + i * _n, _n}; }

    /// Recomputes row and column `index` from the member now stored there.
    void update_after_replacement(const Population& pop, std::size_t index);

private:
    std::size_t _n = 0;
    std::vector<double> _d;
};

double euclidean_distance(std::span<const double> a, std::span<const double> b);

DistanceMatrix build_distance_matrix(const Population& pop);

/// Design-space roulette masses for row i: w[j] = 1 - d(i,j) / sum_k d(i,k)
/// with w[i] masked to 0. A row of zero distances (collapsed population)
/// yields mass 1 for every j != i.
std::vector<double> probability_row(const DistanceMatrix& dm, std::size_t i);
void probability_row(const DistanceMatrix& dm, std::size_t i, std::vector<double>& out);

/// Roulette-wheel sampling of k indices proportional to `weights`.
///
/// Indices in `excluded` are never returned and negative masses count as 0.
/// Without replacement each drawn index leaves the wheel before the next
/// draw. When the remaining positive mass is zero, the draw falls back to a
/// uniform pick among the remaining non-excluded indices. Requesting more
/// indices than there are candidates raises ConfigurationError.
std::vector<std::size_t> roulette_select(std::span<const double> weights, std::size_t k, bool without_replacement,
    std::span<const std::size_t> excluded, RandomSource& rng);

/// k distinct indices uniform over [0, n) minus `excluded`.
std::vector<std::size_t> uniform_select(std::size_t n, std::size_t k, std::span<const std::size_t> excluded,
    RandomSource& rng);

} // namespace unionde
