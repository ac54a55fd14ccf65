#pragma once

#include <unionde/types.hpp>

#include <concepts>
#include <string>
#include <string_view>
#include <variant>

namespace unionde {

/// jDE self-adaptation settings.
struct JdeConfig {
    double tau1 = 0.1; ///< probability of regenerating F
    double tau2 = 0.1; ///< probability of regenerating CR
    double f_lower = 0.1;
    double f_span = 0.9; ///< regenerated F = f_lower + rand * f_span, i.e. within [0.1, 1.0]
    double f_init = 0.5;
    double cr_init = 0.9;
};

/// Constant F and CR for every member and generation.
struct FixedParams {
    double f = 0.5;
    double cr = 0.9;
};

using ParamPolicy = std::variant<JdeConfig, FixedParams>;

/// Parses "jde" or "fixed:F=<v>,CR=<v>" (either key optional).
ParamPolicy parse_param_policy(std::string_view text);
std::string to_string(const ParamPolicy& policy);

double initial_scale_factor(const ParamPolicy& policy);
double initial_crossover_rate(const ParamPolicy& policy);

template <typename R>
concept UniformRealSource = requires(R& r) {
    { r.uniform() } -> std::convertible_to<double>;
};

struct TrialParameters {
    double f;
    double cr;
};

/// Proposes the F and CR used to build this member's trial vector.
///
/// Draw order is fixed: the F gate, then the F value only if the gate
/// fired, then the CR gate, then the CR value only if that gate fired.
template <UniformRealSource R>
TrialParameters propose_parameters(const Individual& member, const JdeConfig& cfg, R& rng)
{
    TrialParameters out{member.scale_factor(), member.crossover_rate()};
    if (rng.uniform() < cfg.tau1)
        out.f = cfg.f_lower + rng.uniform() * cfg.f_span;
    if (rng.uniform() < cfg.tau2)
        out.cr = rng.uniform();
    return out;
}

template <UniformRealSource R>
TrialParameters propose_parameters(const Individual& member, const ParamPolicy& policy, R& rng)
{
    if (const auto* jde = std::get_if<JdeConfig>(&policy))
        return propose_parameters(member, *jde, rng);
    return {member.scale_factor(), member.crossover_rate()};
}

/// Trial parameters are adopted only when the trial replaced the member.
Individual commit_parameters(Individual member, TrialParameters trial, bool trial_won);

} // namespace unionde
