#include <unionde/stats.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace unionde::stats {

double mean_error(std::span<const double> errors)
{
    if (errors.empty())
        throw ContractViolation("mean_error: no values");
    return std::accumulate(errors.begin(), errors.end(), 0.0) / static_cast<double>(errors.size());
}

double mean_error(std::span<const RunResult> results)
{
    std::vector<double> errors;
    errors.reserve(results.size());
    for (const auto& r : results)
        errors.push_back(r.best_error);
    return mean_error(errors);
}

WinTieLose win_tie_lose(std::span<const double> a, std::span<const double> b, double tie_tol)
{
    if (a.size() != b.size())
        throw ContractViolation("win_tie_lose: sequences differ in length");
    WinTieLose out;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double diff = a[k] - b[k];
        if (std::abs(diff) <= tie_tol)
            ++out.tie;
        else if (diff > 0.0)
            ++out.win;
        else
            ++out.lose;
    }
    return out;
}

std::string_view to_symbol(Verdict v)
{
    switch (v) {
    case Verdict::Plus:
        return "+";
    case Verdict::Minus:
        return "-";
    case Verdict::Equal:
        break;
    }
    return "=";
}

std::vector<double> midranks(std::span<const double> values)
{
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });

    std::vector<double> ranks(n);
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start + 1;
        while (end < n && values[order[end]] == values[order[start]])
            ++end;
        // positions start+1 .. end share the average rank
        const double rank = 0.5 * static_cast<double>(start + 1 + end);
        for (std::size_t k = start; k < end; ++k)
            ranks[order[k]] = rank;
        start = end;
    }
    return ranks;
}

double exact_p_value(std::span<const double> ranks, double sr_plus)
{
    const std::size_t n = ranks.size();
    if (n == 0)
        return 1.0;

    // Doubled ranks are integers, so the null distribution of 2 * SR+ can be
    // counted exactly with a subset-sum table instead of walking 2^n signs.
    std::vector<std::size_t> twice(n);
    std::size_t total = 0;
    for (std::size_t k = 0; k < n; ++k) {
        twice[k] = static_cast<std::size_t>(std::llround(2.0 * ranks[k]));
        total += twice[k];
    }
    std::vector<double> count(total + 1, 0.0);
    count[0] = 1.0;
    std::size_t reach = 0;
    for (std::size_t r : twice) {
        for (std::size_t s = reach + 1; s-- > 0;)
            if (count[s] != 0.0)
                count[s + r] += count[s];
        reach += r;
    }

    // Compare |2s - total| against |2t - total| in integers.
    const auto t2 = static_cast<long long>(std::llround(2.0 * sr_plus));
    const long long observed = std::llabs(2 * t2 - static_cast<long long>(total));
    double tail = 0.0;
    for (std::size_t s = 0; s <= total; ++s)
        if (std::llabs(2 * static_cast<long long>(s) - static_cast<long long>(total)) >= observed)
            tail += count[s];
    return std::min(1.0, std::ldexp(tail, -static_cast<int>(n)));
}

double normal_p_value(std::span<const double> ranks, double sr_plus)
{
    const double n = static_cast<double>(ranks.size());
    if (ranks.empty())
        return 1.0;
    const double mean = n * (n + 1.0) / 4.0;
    double variance = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0;

    std::vector<double> sorted(ranks.begin(), ranks.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size();) {
        std::size_t e = k + 1;
        while (e < sorted.size() && sorted[e] == sorted[k])
            ++e;
        const double t = static_cast<double>(e - k);
        variance -= (t * t * t - t) / 48.0;
        k = e;
    }
    if (!(variance > 0.0))
        return 1.0;
    const double z = std::max(0.0, std::abs(sr_plus - mean) - 0.5) / std::sqrt(variance);
    return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

WilcoxonResult wilcoxon_signed_rank(const PairedSample& sample, double alpha)
{
    if (sample.a.size() != sample.b.size())
        throw ContractViolation("wilcoxon_signed_rank: samples differ in length");
    require_finite(sample.a, "wilcoxon sample a");
    require_finite(sample.b, "wilcoxon sample b");

    std::vector<double> diffs;
    for (std::size_t k = 0; k < sample.a.size(); ++k) {
        const double d = sample.a[k] - sample.b[k];
        if (d != 0.0)
            diffs.push_back(d);
    }

    WilcoxonResult res;
    res.n_effective = diffs.size();
    res.underpowered = res.n_effective < min_effective_pairs;

    std::vector<double> magnitudes(diffs.size());
    std::transform(diffs.begin(), diffs.end(), magnitudes.begin(), [](double d) { return std::abs(d); });
    const auto ranks = midranks(magnitudes);

    std::size_t n_plus = 0;
    std::size_t n_minus = 0;
    for (std::size_t k = 0; k < diffs.size(); ++k) {
        if (diffs[k] > 0.0) {
            res.sr_plus += ranks[k];
            ++n_plus;
        } else {
            res.sr_minus += ranks[k];
            ++n_minus;
        }
    }
    res.mr_plus = n_plus ? res.sr_plus / static_cast<double>(n_plus) : 0.0;
    res.mr_minus = n_minus ? res.sr_minus / static_cast<double>(n_minus) : 0.0;

    res.exact = res.n_effective <= exact_cutoff;
    res.p_value = res.exact ? exact_p_value(ranks, res.sr_plus) : normal_p_value(ranks, res.sr_plus);

    if (!res.underpowered && res.p_value < alpha) {
        if (res.sr_plus > res.sr_minus)
            res.verdict = Verdict::Plus;
        else if (res.sr_minus > res.sr_plus)
            res.verdict = Verdict::Minus;
    }
    return res;
}

} // namespace unionde::stats
