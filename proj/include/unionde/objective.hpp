#pragma once

#include <unionde/types.hpp>

#include <functional>
#include <optional>
#include <span>
#include <string>

namespace unionde {

/// A box-constrained black-box objective (lower is better).
///
/// When a shift is attached, the underlying function is evaluated at
/// x - shift and the bias is added, so the optimizer moves to
/// base_optimizer + shift and the optimum value becomes base_optimum + bias.
class ObjectiveFunction {
public:
    using Fn = std::function<double(std::span<const double>)>;

    ObjectiveFunction(std::string name, Bounds bounds, Fn fn, std::optional<double> optimum_value = std::nullopt,
        std::optional<RealVector> optimizer = std::nullopt);

    const std::string& name() const { return _name; }
    std::size_t dimension() const { return _bounds.dimension(); }
    const Bounds& bounds() const { return _bounds; }
    std::optional<double> optimum_value() const { return _optimum; }
    const std::optional<RealVector>& optimizer() const { return _optimizer; }
    const std::optional<RealVector>& shift() const { return _shift; }
    double bias() const { return _bias; }

    double operator()(std::span<const double> x) const;
    double evaluate(std::span<const double> x) const { return (*this)(x); }

    /// Error relative to the known optimum, or the raw value when unknown.
    double error(double fitness) const { return _optimum ? fitness - *_optimum : fitness; }

    /// Copy of this function translated by `shift` with an additive bias.
    /// The shift must have the function's dimension.
    ObjectiveFunction shifted(std::string name, RealVector shift, double bias = 0.0) const;

private:
    std::string _name;
    Bounds _bounds;
    Fn _fn;
    std::optional<double> _optimum;
    std::optional<RealVector> _optimizer;
    std::optional<RealVector> _shift;
    double _bias = 0.0;
};

} // namespace unionde
