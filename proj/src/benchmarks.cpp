#include <unionde/benchmarks.hpp>
#include <unionde/random.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace unionde::bench {

double sphere(std::span<const double> x)
{
    double s = 0.0;
    for (double v : x)
        s += v * v;
    return s;
}

double schwefel_1_2(std::span<const double> x)
{
    double s = 0.0;
    double prefix = 0.0;
    for (double v : x) {
        prefix += v;
        s += prefix * prefix;
    }
    return s;
}

double rosenbrock(std::span<const double> x)
{
    double s = 0.0;
    for (std::size_t j = 0; j + 1 < x.size(); ++j) {
        const double a = x[j + 1] - x[j] * x[j];
        const double b = x[j] - 1.0;
        s += 100.0 * a * a + b * b;
    }
    return s;
}

double rastrigin(std::span<const double> x)
{
    double s = 0.0;
    for (double v : x)
        s += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v) + 10.0;
    return s;
}

double ackley(std::span<const double> x)
{
    const double n = static_cast<double>(x.size());
    double sq = 0.0;
    double cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * std::numbers::pi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::numbers::e;
}

double griewank(std::span<const double> x)
{
    double sq = 0.0;
    double prod = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        sq += x[j] * x[j];
        prod *= std::cos(x[j] / std::sqrt(static_cast<double>(j + 1)));
    }
    return sq / 4000.0 - prod + 1.0;
}

double schwefel_2_26(std::span<const double> x)
{
    double s = schwefel_2_26_offset * static_cast<double>(x.size());
    for (double v : x)
        s -= v * std::sin(std::sqrt(std::abs(v)));
    return s;
}

namespace {

struct Entry {
    const char* name;
    double (*fn)(std::span<const double>);
    double lo;
    double hi;
    double optimizer_coord;
    const char* shifted_of; // non-null for shifted variants
};

// clang-format off
constexpr Entry registry[] = {
    {"sphere",            sphere,        -100.0,   100.0,   0.0,                     nullptr},
    {"schwefel_1_2",      schwefel_1_2,  -100.0,   100.0,   0.0,                     nullptr},
    {"rosenbrock",        rosenbrock,     -30.0,    30.0,   1.0,                     nullptr},
    {"rastrigin",         rastrigin,       -5.12,    5.12,  0.0,                     nullptr},
    {"ackley",            ackley,         -32.768,  32.768, 0.0,                     nullptr},
    {"griewank",          griewank,      -600.0,   600.0,   0.0,                     nullptr},
    {"schwefel_2_26",     schwefel_2_26, -500.0,   500.0,   schwefel_2_26_optimizer, nullptr},
    {"shifted_sphere",    sphere,        -100.0,   100.0,   0.0,                     "sphere"},
    {"shifted_rastrigin", rastrigin,       -5.12,    5.12,  0.0,                     "rastrigin"},
    {"shifted_ackley",    ackley,         -32.768,  32.768, 0.0,                     "ackley"},
};
// clang-format on

const Entry* find_entry(std::string_view name)
{
    for (const auto& e : registry)
        if (name == e.name)
            return &e;
    return nullptr;
}

std::uint64_t name_hash(std::string_view s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return mix64(h);
}

std::string valid_names()
{
    std::string out;
    for (const auto& e : registry) {
        if (!out.empty())
            out += ", ";
        out += e.name;
    }
    return out;
}

} // namespace

const std::vector<std::string>& function_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : registry)
            v.emplace_back(e.name);
        return v;
    }();
    return names;
}

RealVector default_shift(std::string_view name, std::size_t dim)
{
    const Entry* e = find_entry(name);
    if (!e || !e->shifted_of)
        throw ConfigurationError("no built-in shift for function '" + std::string(name) + "'");
    // Keep the optimum well inside the box: shifts span the central 80%.
    RandomSource rng(name_hash(name));
    RealVector shift(dim);
    for (auto& s : shift)
        s = rng.uniform(0.8 * e->lo, 0.8 * e->hi);
    return shift;
}

ObjectiveFunction make_function(std::string_view name, std::size_t dim, const std::optional<RealVector>& shift)
{
    const Entry* e = find_entry(name);
    if (!e)
        throw ConfigurationError("unknown function '" + std::string(name) + "'; valid identifiers: " + valid_names());
    if (dim == 0)
        throw ConfigurationError("function dimension must be positive");

    auto bounds = Bounds::uniform(dim, e->lo, e->hi);
    if (!e->shifted_of)
        return ObjectiveFunction(e->name, std::move(bounds), e->fn, 0.0, RealVector(dim, e->optimizer_coord));

    ObjectiveFunction base(e->shifted_of, std::move(bounds), e->fn, 0.0, RealVector(dim, e->optimizer_coord));
    RealVector s = shift ? *shift : default_shift(name, dim);
    if (s.size() != dim)
        throw ConfigurationError("shift vector for '" + std::string(name) + "' has " + std::to_string(s.size()) +
                                 " values, need " + std::to_string(dim));
    for (std::size_t j = 0; j < dim; ++j)
        if (s[j] < e->lo || s[j] > e->hi)
            throw ConfigurationError("shift vector for '" + std::string(name) + "' leaves the search box at coordinate " +
                                     std::to_string(j));
    return base.shifted(e->name, std::move(s));
}

std::vector<ObjectiveFunction> suite(std::size_t dim)
{
    std::vector<ObjectiveFunction> out;
    for (const auto& e : registry)
        out.push_back(make_function(e.name, dim));
    return out;
}

RealVector load_shift_file(const std::filesystem::path& path, std::size_t dim)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("shift file '" + path.string() + "' cannot be opened");

    RealVector values;
    values.reserve(dim);
    std::string token;
    while (values.size() < dim && in >> token) {
        double v = 0.0;
        const char* first = token.data();
        const char* last = token.data() + token.size();
        if (*first == '+')
            ++first;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || !std::isfinite(v))
            throw std::runtime_error("shift file '" + path.string() + "': cannot parse '" + token + "' as a real number");
        values.push_back(v);
    }
    if (values.size() < dim)
        throw std::runtime_error("shift file '" + path.string() + "': expected " + std::to_string(dim) +
                                 " values, found " + std::to_string(values.size()));
    return values;
}

} // namespace unionde::bench
