#include <unionde/types.hpp>

#include <cmath>

namespace unionde {

void require_finite(std::span<const double> x, const char* what)
{
    for (double v : x)
        if (!std::isfinite(v))
            throw ContractViolation(std::string(what) + ": non-finite coordinate");
}

Bounds::Bounds(RealVector lower, RealVector upper) : _lower(std::move(lower)), _upper(std::move(upper))
{
    if (_lower.size() != _upper.size())
        throw ContractViolation("Bounds: lower and upper differ in length");
    if (_lower.empty())
        throw ContractViolation("Bounds: zero dimension");
    require_finite(_lower, "Bounds lower");
    require_finite(_upper, "Bounds upper");
    for (std::size_t j = 0; j < _lower.size(); ++j)
        if (!(_lower[j] < _upper[j]))
            throw ContractViolation("Bounds: lower[" + std::to_string(j) + "] must be below upper");
}

Bounds Bounds::uniform(std::size_t dim, double lo, double hi)
{
    return Bounds(RealVector(dim, lo), RealVector(dim, hi));
}

bool Bounds::contains(std::span<const double> x) const
{
    if (x.size() != dimension())
        return false;
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] < _lower[j] || x[j] > _upper[j])
            return false;
    return true;
}

Individual::Individual(RealVector position, double fitness, double scale_factor, double crossover_rate)
    : _position(std::move(position)), _fitness(fitness)
{
    require_finite(_position, "Individual position");
    set_parameters(scale_factor, crossover_rate);
}

void Individual::set_parameters(double scale_factor, double crossover_rate)
{
    // jDE regeneration reaches F = Fl + Fu = 1.0, so the admissible F range is [0.1, 1].
    if (!(scale_factor >= 0.1 && scale_factor <= 1.0))
        throw ContractViolation("Individual: scale factor outside [0.1, 1]");
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0))
        throw ContractViolation("Individual: crossover rate outside [0, 1]");
    _scale_factor = scale_factor;
    _crossover_rate = crossover_rate;
}

Population::Population(std::vector<Individual> members) : _members(std::move(members))
{
    if (_members.empty())
        throw ContractViolation("Population: no members");
    const std::size_t dim = _members.front().position().size();
    for (const auto& m : _members)
        if (m.position().size() != dim)
            throw ContractViolation("Population: members differ in dimension");
    rescan_best();
}

void Population::replace(std::size_t i, Individual member)
{
    if (i >= _members.size())
        throw ContractViolation("Population::replace: index out of range");
    if (member.position().size() != dimension())
        throw ContractViolation("Population::replace: dimension mismatch");
    _members[i] = std::move(member);
    if (i == _best)
        rescan_best();
    else if (_members[i].fitness() < _members[_best].fitness())
        _best = i;
}

void Population::set_parameters(std::size_t i, double scale_factor, double crossover_rate)
{
    _members.at(i).set_parameters(scale_factor, crossover_rate);
}

void Population::rescan_best()
{
    _best = 0;
    for (std::size_t i = 1; i < _members.size(); ++i)
        if (_members[i].fitness() < _members[_best].fitness())
            _best = i;
}

} // namespace unionde
