#include <doctest.h>

#include <cmath>
#include <omp.h>
#include <sstream>

#include "wyner/error.hpp"
#include "wyner/monte_carlo.hpp"
#include "wyner/oracle.hpp"
#include "wyner/report.hpp"

using namespace wyner;

TEST_CASE("estimate_pudof endpoints")
{
    auto const a = build_assignment(5, Fraction(3, 5));
    auto const zero = estimate_pudof(5, 0.0, a, 100, 1, true);
    CHECK(zero.mean == 0.8);
    CHECK(zero.std_error == 0.0);

    auto const one = estimate_pudof(5, 1.0, a, 100, 1, true);
    CHECK(one.mean == 0.0);
    CHECK(one.std_error == 0.0);

    CHECK_THROWS_AS(estimate_pudof(5, 0.5, a, 0, 1, true), ParameterError);
    CHECK_THROWS_AS(estimate_pudof(6, 0.5, a, 10, 1, true), ParameterError);
}

TEST_CASE("estimate_pudof agrees with exact enumeration")
{
    auto const a = build_assignment(5, Fraction(3, 5));
    for (double p : {0.1, 0.5, 0.9}) {
        auto const est = estimate_pudof(5, p, a, 6000, 7, true);
        double const exact = exact_expected_dof(5, p, a, DofEngine::Scheduler, true) / 5.0;
        CAPTURE(p);
        CHECK(std::abs(est.mean - exact) <= 4 * est.std_error);
    }
}

TEST_CASE("parallel, serial and thread counts give identical estimates")
{
    auto const a = build_assignment(30, Fraction(1, 2));
    auto const ref = estimate_pudof_serial(30, 0.3, a, 3000, 11, true);
    int const saved = omp_get_max_threads();
    for (int threads : {1, 2, 3, 8}) {
        omp_set_num_threads(threads);
        auto const est = estimate_pudof(30, 0.3, a, 3000, 11, true);
        CHECK(est.mean == ref.mean);
        CHECK(est.std_error == ref.std_error);
    }
    omp_set_num_threads(saved);
}

TEST_CASE("common random numbers reuse the same realizations")
{
    std::vector<MessageAssignment> const group{build_assignment(10, Fraction(0, 1)),
                                               build_assignment(10, Fraction(1, 2))};
    auto const shared = estimate_pudof_shared(10, 0.4, group, 2000, 5, true);
    REQUIRE(shared.size() == 2);
    // Same seed, same realizations: each entry equals the single-assignment estimate.
    CHECK(shared[0].mean == estimate_pudof(10, 0.4, group[0], 2000, 5, true).mean);
    CHECK(shared[1].mean == estimate_pudof(10, 0.4, group[1], 2000, 5, true).mean);
}

TEST_CASE("p_grid")
{
    auto const g = p_grid(0.0, 1.0, 0.01);
    REQUIRE(g.size() == 101);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 1.0);
    CHECK(format_real(g[7]) == "0.07");
    CHECK(p_grid(0.3, 0.3, 0.0) == std::vector<double>{0.3});
    CHECK(p_grid(0.0, 0.1, 0.04).size() == 3);
    CHECK_THROWS_AS(p_grid(0.0, 1.2, 0.1), ParameterError);
    CHECK_THROWS_AS(p_grid(0.5, 0.2, 0.1), ParameterError);
    CHECK_THROWS_AS(p_grid(0.0, 0.5, 0.0), ParameterError);
}

TEST_CASE("sweep")
{
    SweepConfig cfg;
    cfg.p_start = 0.0;
    cfg.p_end = 1.0;
    cfg.p_step = 1.0;
    cfg.trials = 50;
    cfg.assignments = {{5, Fraction(3, 5)}};

    SUBCASE("endpoint rows")
    {
        auto const rows = sweep(cfg);
        REQUIRE(rows.size() == 2);
        CHECK(rows[0].p == 0.0);
        CHECK(rows[0].mean == 0.8);
        CHECK(rows[0].std_error == 0.0);
        CHECK(rows[0].assignment == "K=5,f=3/5");
        CHECK(rows[1].p == 1.0);
        CHECK(rows[1].mean == 0.0);
    }
    SUBCASE("identical CSV bytes on rerun, with and without common random numbers")
    {
        cfg.p_step = 0.25;
        cfg.assignments.push_back({5, Fraction(0, 1)});
        for (bool crn : {false, true}) {
            cfg.common_random_numbers = crn;
            std::ostringstream a;
            std::ostringstream b;
            write_sweep_csv(a, sweep(cfg));
            write_sweep_csv(b, sweep(cfg));
            CHECK(a.str() == b.str());
        }
    }
    SUBCASE("progress reaches the total")
    {
        std::size_t last = 0;
        std::size_t total = 0;
        sweep(cfg, [&](std::size_t d, std::size_t t) {
            last = d;
            total = t;
        });
        CHECK(total == 2);
        CHECK(last == 2);
    }
    SUBCASE("errors")
    {
        cfg.assignments.clear();
        CHECK_THROWS_AS(sweep(cfg), ParameterError);
    }
}
