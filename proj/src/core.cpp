#include <unionde/core.hpp>

#include <cmath>
#include <sstream>

namespace unionde {

RealVector clamp_or_resample(RealVector position, const Bounds& bounds, RandomSource& rng)
{
    if (position.size() != bounds.dimension())
        throw ContractViolation("clamp_or_resample: position has " + std::to_string(position.size()) +
                                " coordinates, bounds have " + std::to_string(bounds.dimension()));
    for (std::size_t j = 0; j < position.size(); ++j) {
        const double lo = bounds.lower(j);
        const double hi = bounds.upper(j);
        // NaN fails both comparisons and is therefore resampled as well.
        if (!(position[j] >= lo && position[j] <= hi))
            position[j] = rng.uniform(lo, hi);
    }
    return position;
}

double evaluate_checked(const ObjectiveFunction& objective, std::span<const double> position)
{
    const double value = objective(position);
    if (std::isnan(value)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "objective '" << objective.name() << "' returned NaN at [";
        for (std::size_t j = 0; j < position.size(); ++j)
            msg << (j ? ", " : "") << position[j];
        msg << "]";
        throw EvaluationError(msg.str());
    }
    return value;
}

Population init_population(std::size_t np, const Bounds& bounds, const ObjectiveFunction& objective, RandomSource& rng,
    double f0, double cr0)
{
    if (np < min_population_size)
        throw ConfigurationError("population size " + std::to_string(np) + " is below the minimum of " +
                                 std::to_string(min_population_size));
    if (objective.dimension() != bounds.dimension())
        throw ContractViolation("init_population: objective and bounds differ in dimension");

    std::vector<Individual> members;
    members.reserve(np);
    for (std::size_t i = 0; i < np; ++i) {
        RealVector x(bounds.dimension());
        for (std::size_t j = 0; j < x.size(); ++j)
            x[j] = rng.uniform(bounds.lower(j), bounds.upper(j));
        const double fx = evaluate_checked(objective, x);
        members.emplace_back(std::move(x), fx, f0, cr0);
    }
    return Population(std::move(members));
}

} // namespace unionde
