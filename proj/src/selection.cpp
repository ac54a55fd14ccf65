#include <unionde/selection.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace unionde {

RankWeights build_rank_weights(std::span<const double> fitness)
{
    const std::size_t np = fitness.size();
    RankWeights rw;
    rw.sorted_order.resize(np);
    std::iota(rw.sorted_order.begin(), rw.sorted_order.end(), std::size_t{0});
    std::stable_sort(rw.sorted_order.begin(), rw.sorted_order.end(),
        [&](std::size_t a, std::size_t b) { return fitness[a] < fitness[b]; });

    rw.weight_of_rank.resize(np);
    rw.member_weight.resize(np);
    const double denom = static_cast<double>(np);
    for (std::size_t r = 0; r < np; ++r) {
        const double w = static_cast<double>(np - (r + 1)) / denom;
        rw.weight_of_rank[r] = w;
        rw.member_weight[rw.sorted_order[r]] = w;
    }
    return rw;
}

RankWeights build_rank_weights(const Population& pop)
{
    std::vector<double> fitness(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i)
        fitness[i] = pop[i].fitness();
    return build_rank_weights(fitness);
}

double euclidean_distance(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double d = a[j] - b[j];
        s += d * d;
    }
    return std::sqrt(s);
}

DistanceMatrix::DistanceMatrix(const Population& pop) : _n(pop.size()), _d(_n * _n, 0.0)
{
    for (std::size_t i = 0; i < _n; ++i)
        for (std::size_t j = i + 1; j < _n; ++j) {
            const double d = euclidean_distance(pop[i].position(), pop[j].position());
            _d[i * _n + j] = d;
            _d[j * _n + i] = d;
        }
}

void DistanceMatrix::update_after_replacement(const Population& pop, std::size_t index)
{
    if (index >= _n || pop.size() != _n)
        throw ContractViolation("DistanceMatrix::update_after_replacement: index or population size out of range");
    const auto& x = pop[index].position();
    for (std::size_t j = 0; j < _n; ++j) {
        if (j == index)
            continue;
        const double d = euclidean_distance(x, pop[j].position());
        _d[index * _n + j] = d;
        _d[j * _n + index] = d;
    }
}

DistanceMatrix build_distance_matrix(const Population& pop)
{
    return DistanceMatrix(pop);
}

void probability_row(const DistanceMatrix& dm, std::size_t i, std::vector<double>& out)
{
    if (i >= dm.size())
        throw ContractViolation("probability_row: row index out of range");
    const auto row = dm.row(i);
    const double total = std::accumulate(row.begin(), row.end(), 0.0);
    out.assign(row.size(), 1.0);
    if (total > 0.0)
        for (std::size_t j = 0; j < row.size(); ++j)
            out[j] = std::max(0.0, 1.0 - row[j] / total);
    out[i] = 0.0;
}

std::vector<double> probability_row(const DistanceMatrix& dm, std::size_t i)
{
    std::vector<double> out;
    probability_row(dm, i, out);
    return out;
}

std::vector<std::size_t> roulette_select(std::span<const double> weights, std::size_t k, bool without_replacement,
    std::span<const std::size_t> excluded, RandomSource& rng)
{
    const std::size_t n = weights.size();
    std::vector<char> open(n, 1);
    for (std::size_t e : excluded)
        if (e < n)
            open[e] = 0;
    std::size_t candidates = static_cast<std::size_t>(std::count(open.begin(), open.end(), 1));
    if (candidates == 0 || (without_replacement && k > candidates))
        throw ConfigurationError("roulette_select: requested " + std::to_string(k) + " indices from " +
                                 std::to_string(candidates) + " candidates");

    std::vector<double> mass(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        if (open[j] && weights[j] > 0.0)
            mass[j] = weights[j];

    std::vector<std::size_t> picked;
    picked.reserve(k);
    while (picked.size() < k) {
        const double total = std::accumulate(mass.begin(), mass.end(), 0.0);
        std::size_t choice = n;
        if (total > 0.0) {
            const double target = rng.uniform() * total;
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (mass[j] <= 0.0)
                    continue;
                acc += mass[j];
                choice = j;
                if (target < acc)
                    break;
            }
        } else {
            // No positive mass left: uniform over whatever is still open.
            std::size_t slot = rng.uniform_int(0, candidates - 1);
            for (std::size_t j = 0; j < n; ++j)
                if (open[j] && slot-- == 0) {
                    choice = j;
                    break;
                }
        }
        picked.push_back(choice);
        if (without_replacement) {
            open[choice] = 0;
            mass[choice] = 0.0;
            --candidates;
        }
    }
    return picked;
}

std::vector<std::size_t> uniform_select(std::size_t n, std::size_t k, std::span<const std::size_t> excluded,
    RandomSource& rng)
{
    std::vector<char> open(n, 1);
    for (std::size_t e : excluded)
        if (e < n)
            open[e] = 0;
    const auto candidates = static_cast<std::size_t>(std::count(open.begin(), open.end(), 1));
    if (k > candidates)
        throw ConfigurationError("uniform_select: requested " + std::to_string(k) + " distinct indices from " +
                                 std::to_string(candidates) + " candidates");

    std::vector<std::size_t> picked;
    picked.reserve(k);
    while (picked.size() < k) {
        const std::size_t j = rng.uniform_int(0, n - 1);
        if (!open[j])
            continue;
        open[j] = 0;
        picked.push_back(j);
    }
    return picked;
}

} // namespace unionde
