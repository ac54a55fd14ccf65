#include <unionde/benchmarks.hpp>
#include <unionde/engine.hpp>

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace unionde;

namespace {

RunConfig small_config(StrategyKind kind, std::size_t dim = 5, std::size_t evals = 5000)
{
    RunConfig c;
    c.np = 20;
    c.dim = dim;
    c.max_evals = evals;
    c.seed = 99;
    c.strategy = MutationStrategy(kind);
    return c;
}

const std::vector<StrategyKind> all_kinds = {StrategyKind::Rand1, StrategyKind::Best1, StrategyKind::Rand2,
    StrategyKind::Best2, StrategyKind::CurrentToBest1, StrategyKind::RandToBest1, StrategyKind::CurrentToRand1,
    StrategyKind::Derl2, StrategyKind::Proximity2, StrategyKind::Ranking2, StrategyKind::Ude};

} // namespace

TEST_CASE("binomial crossover")
{
    RandomSource rng(1);
    const RealVector parent(30, 0.0);
    const RealVector donor(30, 1.0);

    SUBCASE("CR = 1 copies the donor")
    {
        CHECK(binomial_crossover(parent, donor, 1.0, rng) == donor);
    }
    SUBCASE("CR = 0 crosses exactly one coordinate")
    {
        for (int k = 0; k < 200; ++k) {
            const auto t = binomial_crossover(parent, donor, 0.0, rng);
            double crossed = 0.0;
            for (double v : t)
                crossed += v;
            REQUIRE(crossed == 1.0);
        }
    }
    SUBCASE("CR = 0.5 averages 0.5 (D - 1) + 1 donor coordinates")
    {
        constexpr int n = 100000;
        double total = 0.0;
        for (int k = 0; k < n; ++k)
            for (double v : binomial_crossover(parent, donor, 0.5, rng))
                total += v;
        CHECK(std::abs(total / n - 15.5) < 0.1);
    }
    SUBCASE("dimension mismatch")
    {
        CHECK_THROWS_AS(binomial_crossover(parent, RealVector(29, 1.0), 0.5, rng), ContractViolation);
    }
}

TEST_CASE("budget equal to NP runs initialisation only")
{
    const auto f = bench::make_function("sphere", 5);
    auto c = small_config(StrategyKind::Ude);
    c.max_evals = c.np;
    const auto r = run(c, f);
    CHECK(r.evals_used == c.np);
    CHECK(r.generations == 0);
    REQUIRE(r.trajectory.size() == 1);
    CHECK(r.trajectory[0].evals == c.np);
    CHECK(r.best_error == r.trajectory[0].best_fitness);

    // Same seed, same initial population: the best initial member is reproduced.
    RandomSource rng(c.seed);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < c.np; ++i) {
        RealVector x(5);
        for (std::size_t j = 0; j < 5; ++j)
            x[j] = rng.uniform(-100.0, 100.0);
        best = std::min(best, f(x));
    }
    CHECK(r.best_error == best);
}

TEST_CASE("runs are reproducible for every strategy")
{
    const auto f = bench::make_function("rastrigin", 5);
    for (auto kind : all_kinds) {
        CAPTURE(strategy_name(kind));
        const auto c = small_config(kind, 5, 3000);
        const auto a = run(c, f);
        const auto b = run(c, f);
        CHECK(a.best_error == b.best_error);
        CHECK(a.best_position == b.best_position);
        REQUIRE(a.trajectory.size() == b.trajectory.size());
        for (std::size_t k = 0; k < a.trajectory.size(); ++k)
            REQUIRE(a.trajectory[k].best_fitness == b.trajectory[k].best_fitness);
    }
}

TEST_CASE("constant objective never replaces a member")
{
    const ObjectiveFunction f("constant", Bounds::uniform(4, -1.0, 1.0), [](std::span<const double>) { return 7.0; });
    auto c = small_config(StrategyKind::Ude, 4, 2000);
    std::vector<RealVector> initial;
    std::size_t generation = 0;
    const auto r = run(c, f, [&](const Population& pop, const DistanceMatrix*) {
        if (generation++ == 0)
            for (const auto& m : pop.members())
                initial.push_back(m.position());
        else
            for (std::size_t i = 0; i < pop.size(); ++i)
                REQUIRE(pop[i].position() == initial[i]);
    });
    CHECK(r.best_fitness == 7.0);
    for (const auto& p : r.trajectory)
        CHECK(p.best_fitness == 7.0);
}

TEST_CASE("NaN from the objective aborts with the offending position")
{
    const ObjectiveFunction f("nan_above_half", Bounds::uniform(2, 0.0, 1.0), [](std::span<const double> x) {
        return x[0] > 0.5 ? std::nan("") : x[0];
    });
    auto c = small_config(StrategyKind::Rand1, 2, 1000);
    try {
        run(c, f);
        FAIL("expected an EvaluationError");
    } catch (const EvaluationError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("nan_above_half") != std::string::npos);
        CHECK(msg.find("[") != std::string::npos);
    }
}

TEST_CASE("engine invariants over full runs")
{
    for (auto kind : all_kinds) {
        CAPTURE(strategy_name(kind));
        const auto f = bench::make_function("ackley", 6);
        auto c = small_config(kind, 6, 4010); // budget not a multiple of NP
        c.seed = 5;
        std::size_t observed = 0;
        const auto r = run(c, f, [&](const Population& pop, const DistanceMatrix* dm) {
            ++observed;
            for (const auto& m : pop.members()) {
                REQUIRE(m.scale_factor() >= 0.1);
                REQUIRE(m.scale_factor() <= 1.0);
                REQUIRE(m.crossover_rate() >= 0.0);
                REQUIRE(m.crossover_rate() <= 1.0);
                REQUIRE(f.bounds().contains(m.position()));
                REQUIRE(m.fitness() == f(m.position()));
            }
            REQUIRE((dm != nullptr) == uses_distance_matrix(kind));
            if (dm) {
                const DistanceMatrix full(pop);
                for (std::size_t i = 0; i < pop.size(); ++i)
                    for (std::size_t j = 0; j < pop.size(); ++j)
                        REQUIRE(std::abs((*dm)(i, j) - full(i, j)) <= 1e-9);
            }
        });
        CHECK(r.evals_used == c.max_evals);
        CHECK(observed == r.trajectory.size());
        for (std::size_t k = 1; k < r.trajectory.size(); ++k) {
            REQUIRE(r.trajectory[k].best_fitness <= r.trajectory[k - 1].best_fitness);
            REQUIRE(r.trajectory[k].evals > r.trajectory[k - 1].evals);
        }
        CHECK(r.trajectory.back().evals == r.evals_used);
        CHECK(r.best_error == r.trajectory.back().best_fitness);
    }
}

TEST_CASE("target error stops early")
{
    const auto f = bench::make_function("sphere", 5);
    auto c = small_config(StrategyKind::Ude, 5, 200000);
    c.target_error = 1e-3;
    const auto r = run(c, f);
    CHECK(r.best_error <= 1e-3);
    CHECK(r.evals_used < c.max_evals);
}

TEST_CASE("union DE solves a small sphere")
{
    const auto f = bench::make_function("sphere", 10);
    RunConfig c = RunConfig::with_defaults(10);
    c.max_evals = 60000;
    c.seed = 3;
    const auto r = run(c, f);
    CHECK(r.best_error < 1e-10);
}

TEST_CASE("configuration validation")
{
    const auto f = bench::make_function("sphere", 5);
    auto c = small_config(StrategyKind::Ude);
    c.np = 5;
    CHECK_THROWS_AS(run(c, f), ConfigurationError);
    c.np = 6;
    CHECK_NOTHROW(run(c, f));
    c.max_evals = 3;
    CHECK_THROWS_AS(run(c, f), ConfigurationError);
    c = small_config(StrategyKind::Ude);
    c.dim = 4;
    CHECK_THROWS_AS(run(c, f), ConfigurationError);
    const auto d = RunConfig::with_defaults(30);
    CHECK(d.np == 50);
    CHECK(d.max_evals == 300000);
}
