#include <unionde/param_control.hpp>

#include <charconv>
#include <cmath>

namespace unionde {

namespace {

double parse_number(std::string_view text, std::string_view context)
{
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
        throw ConfigurationError("parameter policy: cannot parse '" + std::string(text) + "' in '" +
                                 std::string(context) + "'");
    return v;
}

} // namespace

ParamPolicy parse_param_policy(std::string_view text)
{
    if (text == "jde")
        return JdeConfig{};
    constexpr std::string_view prefix = "fixed";
    if (text.substr(0, prefix.size()) != prefix)
        throw ConfigurationError("unknown parameter policy '" + std::string(text) + "'; use jde or fixed:F=<v>,CR=<v>");

    FixedParams fixed;
    std::string_view rest = text.substr(prefix.size());
    if (!rest.empty()) {
        if (rest.front() != ':')
            throw ConfigurationError("unknown parameter policy '" + std::string(text) + "'");
        rest.remove_prefix(1);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const auto item = rest.substr(0, comma);
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            const auto eq = item.find('=');
            if (eq == std::string_view::npos)
                throw ConfigurationError("parameter policy: expected key=value, got '" + std::string(item) + "'");
            const auto key = item.substr(0, eq);
            const double value = parse_number(item.substr(eq + 1), text);
            if (key == "F")
                fixed.f = value;
            else if (key == "CR")
                fixed.cr = value;
            else
                throw ConfigurationError("parameter policy: unknown key '" + std::string(key) + "'");
        }
    }
    if (!(fixed.f >= 0.1 && fixed.f <= 1.0))
        throw ConfigurationError("fixed F must lie in [0.1, 1]");
    if (!(fixed.cr >= 0.0 && fixed.cr <= 1.0))
        throw ConfigurationError("fixed CR must lie in [0, 1]");
    return fixed;
}

std::string to_string(const ParamPolicy& policy)
{
    if (std::holds_alternative<JdeConfig>(policy))
        return "jde";
    const auto& f = std::get<FixedParams>(policy);
    auto shortest = [](double v) {
        char buf[32];
        auto res = std::to_chars(buf, buf + sizeof buf, v);
        return std::string(buf, res.ptr);
    };
    return "fixed:F=" + shortest(f.f) + ",CR=" + shortest(f.cr);
}

double initial_scale_factor(const ParamPolicy& policy)
{
    if (const auto* jde = std::get_if<JdeConfig>(&policy))
        return jde->f_init;
    return std::get<FixedParams>(policy).f;
}

double initial_crossover_rate(const ParamPolicy& policy)
{
    if (const auto* jde = std::get_if<JdeConfig>(&policy))
        return jde->cr_init;
    return std::get<FixedParams>(policy).cr;
}

Individual commit_parameters(Individual member, TrialParameters trial, bool trial_won)
{
    if (trial_won)
        member.set_parameters(trial.f, trial.cr);
    return member;
}

} // namespace unionde
