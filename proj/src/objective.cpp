#include <unionde/objective.hpp>

#include <utility>
#include <vector>

namespace unionde {

ObjectiveFunction::ObjectiveFunction(std::string name, Bounds bounds, Fn fn, std::optional<double> optimum_value,
    std::optional<RealVector> optimizer)
    : _name(std::move(name)), _bounds(std::move(bounds)), _fn(std::move(fn)), _optimum(optimum_value),
      _optimizer(std::move(optimizer))
{
    if (!_fn)
        throw ContractViolation("ObjectiveFunction: empty evaluator");
    if (_optimizer && _optimizer->size() != _bounds.dimension())
        throw ContractViolation("ObjectiveFunction: optimizer dimension mismatch");
}

double ObjectiveFunction::operator()(std::span<const double> x) const
{
    if (x.size() != dimension())
        throw ContractViolation("ObjectiveFunction '" + _name + "': dimension mismatch");
    return _fn(x);
}

ObjectiveFunction ObjectiveFunction::shifted(std::string name, RealVector shift, double bias) const
{
    if (shift.size() != dimension())
        throw ContractViolation("ObjectiveFunction::shifted: shift dimension mismatch");
    require_finite(shift, "shift vector");

    auto base = _fn;
    auto offset = shift;
    Fn fn = [base = std::move(base), offset = std::move(offset), bias](std::span<const double> x) {
        std::vector<double> moved(x.size());
        for (std::size_t j = 0; j < x.size(); ++j)
            moved[j] = x[j] - offset[j];
        return base(moved) + bias;
    };

    std::optional<RealVector> optimizer;
    if (_optimizer) {
        optimizer = *_optimizer;
        for (std::size_t j = 0; j < optimizer->size(); ++j)
            (*optimizer)[j] += shift[j];
    }
    std::optional<double> optimum;
    if (_optimum)
        optimum = *_optimum + bias;

    ObjectiveFunction out(std::move(name), _bounds, std::move(fn), optimum, std::move(optimizer));
    out._shift = std::move(shift);
    out._bias = bias;
    return out;
}

} // namespace unionde
