#include <unionde/random.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace unionde {

std::size_t RandomSource::uniform_int(std::size_t lo, std::size_t hi)
{
    if (lo > hi)
        throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo);
    if (span == std::numeric_limits<std::uint64_t>::max())
        return lo + static_cast<std::size_t>(_engine());
    const std::uint64_t range = span + 1;
    // Reject the top partial bucket so every value is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % range);
    std::uint64_t draw;
    do {
        draw = _engine();
    } while (draw >= limit);
    return lo + static_cast<std::size_t>(draw % range);
}

std::size_t RandomSource::weighted_index(std::span<const double> weights)
{
    if (weights.empty())
        throw std::invalid_argument("weighted_index: no weights");
    double total = 0.0;
    for (double w : weights)
        total += std::max(w, 0.0);
    if (!(total > 0.0))
        return uniform_int(0, weights.size() - 1);

    const double target = uniform() * total;
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        const double w = std::max(weights[j], 0.0);
        if (w <= 0.0)
            continue;
        acc += w;
        last_positive = j;
        if (target < acc)
            return j;
    }
    // Rounding can leave target a hair above the accumulated mass.
    return last_positive;
}

} // namespace unionde
