#pragma once

#include <unionde/objective.hpp>

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unionde::bench {

// Raw formulas, unshifted, any dimension.
double sphere(std::span<const double> x);
double schwefel_1_2(std::span<const double> x);
double rosenbrock(std::span<const double> x);
double rastrigin(std::span<const double> x);
double ackley(std::span<const double> x);
double griewank(std::span<const double> x);
double schwefel_2_26(std::span<const double> x);

/// Coordinate of the Schwefel 2.26 optimizer and the per-coordinate value
/// that makes the function vanish there.
inline constexpr double schwefel_2_26_optimizer = 420.96874635998202731;
inline constexpr double schwefel_2_26_offset = 418.98288727243370627;

/// Identifiers of the suite in canonical order:
/// unimodal (sphere, schwefel_1_2, rosenbrock), multimodal (rastrigin,
/// ackley, griewank, schwefel_2_26) and shifted (shifted_sphere,
/// shifted_rastrigin, shifted_ackley).
const std::vector<std::string>& function_names();

/// Builds one suite member. For the shifted_* functions `shift` overrides
/// the built-in seed-fixed shift vector; it is ignored for the others.
/// Unknown names raise ConfigurationError listing the valid identifiers.
ObjectiveFunction make_function(std::string_view name, std::size_t dim,
    const std::optional<RealVector>& shift = std::nullopt);

/// Whole suite at dimension `dim`.
std::vector<ObjectiveFunction> suite(std::size_t dim);

/// Built-in shift for a shifted_* function. Coordinates are drawn from a
/// generator seeded by the function name, so the first k coordinates do not
/// depend on `dim`.
RealVector default_shift(std::string_view name, std::size_t dim);

/// Reads the first `dim` whitespace-separated reals from a text file.
/// Throws std::runtime_error naming the path on a missing file, a token that
/// is not a number, or fewer than `dim` values.
RealVector load_shift_file(const std::filesystem::path& path, std::size_t dim);

} // namespace unionde::bench
