#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace unionde {

/// Raised when a caller breaks a precondition (wrong dimension, bad index).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised for invalid user-facing configuration (population too small,
/// unknown identifiers, impossible sampling requests).
class ConfigurationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when the objective produces a non-finite value.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using RealVector = std::vector<double>;

/// Throws ContractViolation unless every coordinate is finite.
void require_finite(std::span<const double> x, const char* what);

/// Per-dimension box constraints with lower[j] < upper[j].
class Bounds {
public:
    Bounds(RealVector lower, RealVector upper);

    /// Same [lo, hi] interval on every coordinate.
    static Bounds uniform(std::size_t dim, double lo, double hi);

    std::size_t dimension() const { return _lower.size(); }
    const RealVector& lower() const { return _lower; }
    const RealVector& upper() const { return _upper; }
    double lower(std::size_t j) const { return _lower[j]; }
    double upper(std::size_t j) const { return _upper[j]; }

    bool contains(std::span<const double> x) const;

private:
    RealVector _lower;
    RealVector _upper;
};

/// A population member: position, its objective value and the per-member
/// control parameters (scale factor F and crossover rate CR).
///
/// Fitness can only be set together with the position it belongs to, so a
/// member never carries a stale objective value.
class Individual {
public:
    Individual(RealVector position, double fitness, double scale_factor, double crossover_rate);

    const RealVector& position() const { return _position; }
    double fitness() const { return _fitness; }
    double scale_factor() const { return _scale_factor; }
    double crossover_rate() const { return _crossover_rate; }

    void set_parameters(double scale_factor, double crossover_rate);

private:
    RealVector _position;
    double _fitness;
    double _scale_factor;
    double _crossover_rate;
};

class Population {
public:
    explicit Population(std::vector<Individual> members);

    std::size_t size() const { return _members.size(); }
    std::size_t dimension() const { return _members.front().position().size(); }

    const Individual& operator[](std::size_t i) const { return _members.at(i); }
    const std::vector<Individual>& members() const { return _members; }

    std::size_t best_index() const { return _best; }
    const Individual& best() const { return _members[_best]; }

    std::size_t generation() const { return _generation; }
    void advance_generation() { ++_generation; }

    /// Swaps in a new member at index i and keeps best_index correct.
    void replace(std::size_t i, Individual member);

    /// Updates F/CR of member i without touching position or fitness.
    void set_parameters(std::size_t i, double scale_factor, double crossover_rate);

private:
    void rescan_best();

    std::vector<Individual> _members;
    std::size_t _generation = 0;
    std::size_t _best = 0;
};

} // namespace unionde
