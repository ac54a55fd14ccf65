#pragma once

#include <unionde/objective.hpp>
#include <unionde/random.hpp>
#include <unionde/types.hpp>

#include <cstddef>

namespace unionde {

/// Smallest population accepted by init_population.
inline constexpr std::size_t min_population_size = 5;

/// Bound repair: coordinates inside [lower[j], upper[j]] are kept, every
/// violated coordinate is replaced by a fresh uniform draw in its interval.
RealVector clamp_or_resample(RealVector position, const Bounds& bounds, RandomSource& rng);

/// Evaluates `objective` at `position`, rejecting non-finite results.
double evaluate_checked(const ObjectiveFunction& objective, std::span<const double> position);

/// Uniform random population of `np` members, each evaluated once and
/// carrying the initial control parameters (f0, cr0).
Population init_population(std::size_t np, const Bounds& bounds, const ObjectiveFunction& objective, RandomSource& rng,
    double f0, double cr0);

} // namespace unionde
