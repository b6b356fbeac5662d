#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "wyner/error.hpp"
#include "wyner/oracle.hpp"
#include "wyner/schedule.hpp"
#include "wyner/verification.hpp"

using namespace wyner;

TEST_CASE("feasible: examples")
{
    auto const r2 = NetworkRealization::all_present(2);
    CarrierConfig both{{true, true}, {TransmitSet{1}, TransmitSet{2}}};
    CHECK_FALSE(feasible(both, r2));

    CarrierConfig none{{false, false}, {TransmitSet{}, TransmitSet{}}};
    CHECK(feasible(none, r2));

    auto const r5 = NetworkRealization::all_present(5);
    CarrierConfig trace{{true, true, false, true, true},
                        {TransmitSet{1, 2}, TransmitSet{2}, TransmitSet{}, TransmitSet{3},
                         TransmitSet{3, 4}}};
    CHECK(feasible(trace, r5));
}

TEST_CASE("feasible: predicate details")
{
    auto const r = NetworkRealization::all_present(4);
    std::vector<bool> d{false, true, true, false};
    // W_2 delivered from transmitter 2 hits active receiver 3 with a single carrier.
    CHECK_FALSE(message_feasible(2, TransmitSet{2}, d, r));
    // Two carriers {2,3} can cancel at receiver 3.
    CHECK(message_feasible(2, TransmitSet{2, 3}, d, r));
    // Carriers {1,2} reach receiver 3 only through transmitter 2.
    CHECK_FALSE(message_feasible(2, TransmitSet{1, 2}, d, r));
    // No carrier connected to the destination.
    CHECK_FALSE(message_feasible(3, TransmitSet{4}, {false, false, true, false}, r));
    // Two zero constraints would be needed: W_2 from {2,3} with receivers 3 and 4 active.
    CHECK_FALSE(message_feasible(2, TransmitSet{2, 3}, {false, true, true, true}, r));

    CarrierConfig bad{{false, false}, {TransmitSet{1}, TransmitSet{}}};
    CHECK_THROWS_AS(feasible(bad, NetworkRealization::all_present(2)), ParameterError);
}

TEST_CASE("optimal_zero_forcing_dof: examples")
{
    CHECK(optimal_zero_forcing_dof(NetworkRealization::all_present(5),
                                   build_assignment(5, Fraction(3, 5))) == 4);
    CHECK(optimal_zero_forcing_dof(NetworkRealization::all_absent(6),
                                   build_assignment(6, Fraction(0, 1))) == 0);
    CHECK(optimal_zero_forcing_dof(NetworkRealization::all_present(2),
                                   MessageAssignment({TransmitSet{1}, TransmitSet{2}})) == 1);
    CHECK_THROWS_AS(optimal_zero_forcing_dof(NetworkRealization::all_present(11),
                                             build_assignment(11, Fraction(0, 1))),
                    ParameterError);
}

TEST_CASE("factored search equals literal product enumeration")
{
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        int const k = 1 + static_cast<int>(seed % 6);
        auto const r = sample_realization(k, 0.25, seed);
        auto const a = random_assignment(k, seed * 31 + 7);
        CAPTURE(format_realization(r));
        CAPTURE(format_assignment(a));
        auto const best = best_zero_forcing_config(r, a);
        CHECK(best.dof == testing::brute_force_zf_dof(r, a));
        CHECK(feasible(best.witness, r));
        CHECK(best.witness.size() == best.dof);
    }
}

TEST_CASE("oracle bounds the greedy scheduler from above")
{
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
        int const k = 1 + static_cast<int>(seed % 8);
        auto const r = sample_realization(k, 0.3, seed);
        auto const a = random_assignment(k, seed + 99);
        CHECK(dof(schedule_network(r, a)) <= optimal_zero_forcing_dof(r, a));
    }
}

TEST_CASE("oracle is monotone in assignment enrichment")
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        int const k = 2 + static_cast<int>(seed % 5);
        auto const r = sample_realization(k, 0.2, seed);
        auto const a = random_assignment(k, seed ^ 0x5555);
        int const base = optimal_zero_forcing_dof(r, a);
        for (int i = 1; i <= k; ++i) {
            if (a.transmit_set(i).size() == 2) {
                continue;
            }
            for (int t = 1; t <= k; ++t) {
                std::vector<TransmitSet> sets(a.sets().begin(), a.sets().end());
                sets[i - 1].insert(t);
                CHECK(optimal_zero_forcing_dof(r, MessageAssignment(sets)) >= base);
            }
        }
    }
}

TEST_CASE("double delivery from one transmitter beats the greedy pass")
{
    // T_2 = {2,3}, T_3 = {1,2}: transmitter 2 sends W_2 and W_3, transmitter 3
    // cancels W_2 at receiver 3, transmitter 1 cancels W_3 at receiver 2.
    auto const r = attach_generic_coefficients(NetworkRealization::all_present(3), 8);
    MessageAssignment const a({TransmitSet{}, TransmitSet{2, 3}, TransmitSet{1, 2}});
    CHECK(dof(schedule_network(r, a)) == 1);
    CHECK(optimal_zero_forcing_dof(r, a) == 2);

    std::vector<std::map<int, Complex>> w(3);
    w[1][2] = 1.0;
    w[1][3] = 1.0;
    w[2][2] = -r.coefficient(3, 2) / r.coefficient(3, 3);
    w[0][3] = -r.coefficient(2, 2) / r.coefficient(2, 1);
    auto const at2 = testing::net_gains(r, w, 2);
    auto const at3 = testing::net_gains(r, w, 3);
    CHECK(std::abs(at2.at(2)) > 1e-3);
    CHECK(std::abs(at2.at(3)) <= 1e-12 * std::abs(at2.at(2)));
    CHECK(std::abs(at3.at(3)) > 1e-3);
    CHECK(std::abs(at3.at(2)) <= 1e-12 * std::abs(at3.at(3)));
}

TEST_CASE("exact_expected_dof")
{
    SUBCASE("single user")
    {
        MessageAssignment a({TransmitSet{1}});
        for (double p : {0.0, 0.2, 0.7, 1.0}) {
            CHECK(exact_expected_dof(1, p, a, DofEngine::Scheduler) == doctest::Approx(1 - p));
            CHECK(exact_expected_dof(1, p, a, DofEngine::Oracle) == doctest::Approx(1 - p));
        }
    }
    SUBCASE("p = 0 is the all-present DoF, p = 1 is zero")
    {
        auto a = build_assignment(6, Fraction(1, 2));
        CHECK(exact_expected_dof(6, 0.0, a, DofEngine::Scheduler) ==
              dof(schedule_network(NetworkRealization::all_present(6), a)));
        CHECK(exact_expected_dof(6, 1.0, a, DofEngine::Scheduler) == 0.0);
    }
    SUBCASE("K=5, f=3/5, p=0.5 regression")
    {
        // Frozen from the direct per-pattern sum in support/oracles.hpp: 1282 / 2^9.
        auto a = build_assignment(5, Fraction(3, 5));
        CHECK(exact_expected_dof(5, 0.5, a, DofEngine::Scheduler) == 2.50390625);
        CHECK(exact_expected_dof(5, 0.5, a, DofEngine::Oracle) == 2.50390625);
    }
    SUBCASE("histogram route matches the direct per-pattern sum")
    {
        auto a = build_assignment(5, Fraction(3, 5));
        for (double p : {0.1, 0.33, 0.9}) {
            double const direct = testing::direct_expected_dof(5, p, [&](auto const& r) {
                return dof(schedule_network(r, a));
            });
            CHECK(exact_expected_dof(5, p, a, DofEngine::Scheduler) ==
                  doctest::Approx(direct).epsilon(1e-12));
        }
    }
    SUBCASE("limits")
    {
        CHECK_THROWS_AS(exact_expected_dof(13, 0.5, build_assignment(13, Fraction(0, 1)),
                                           DofEngine::Scheduler),
                        ParameterError);
        CHECK_THROWS_AS(exact_expected_dof(8, 0.5, build_assignment(8, Fraction(0, 1)),
                                           DofEngine::Oracle),
                        ParameterError);
        CHECK_THROWS_AS(exact_expected_dof(5, 1.2, build_assignment(5, Fraction(0, 1)),
                                           DofEngine::Scheduler),
                        ParameterError);
    }
}

TEST_CASE("both engines agree on the paper family with deactivation")
{
    for (int k = 3; k <= 6; ++k) {
        for (Fraction f : {Fraction(0, 1), Fraction(3, 5), Fraction(1, 2), Fraction(1, 1)}) {
            auto const a = build_assignment(k, f);
            CAPTURE(assignment_label(k, f));
            CHECK(dof_histogram(k, a, DofEngine::Scheduler, true) ==
                  dof_histogram(k, a, DofEngine::Oracle, true));
        }
    }
}

TEST_CASE("parallel histogram equals the serial reference")
{
    auto const a = build_assignment(8, Fraction(3, 5));
    CHECK(dof_histogram(8, a, DofEngine::Scheduler, true) ==
          dof_histogram_serial(8, a, DofEngine::Scheduler, true));
    auto const b = random_assignment(5, 3);
    CHECK(dof_histogram(5, b, DofEngine::Oracle, false) ==
          dof_histogram_serial(5, b, DofEngine::Oracle, false));
}

TEST_CASE("expected DoF is a polynomial of degree <= 2k-1")
{
    // Finite differences of order 2k on an even grid vanish for such a polynomial.
    int const k = 4;
    auto const a = build_assignment(k, Fraction(1, 2));
    auto const hist = dof_histogram(k, a, DofEngine::Scheduler, false);
    int const order = 2 * k;
    double const h = 1.0 / order;
    double diff = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= order; ++j) {
        double const sign = ((order - j) % 2 == 0) ? 1.0 : -1.0;
        diff += sign * binom * expected_from_histogram(hist, j * h);
        binom = binom * (order - j) / (j + 1);
    }
    CHECK(std::abs(diff) < 1e-9);
}

TEST_CASE("deactivate_last")
{
    auto const a = deactivate_last(build_assignment(5, Fraction(1, 1)));
    for (int i = 1; i <= 5; ++i) {
        CHECK_FALSE(a.transmit_set(i).contains(5));
    }
    auto const r = deactivate_last(NetworkRealization::all_present(5));
    CHECK_FALSE(r.direct(5));
    CHECK(r.direct(4));
}

TEST_CASE("verification driver")
{
    SUBCASE("paper families have no mismatches")
    {
        for (int k = 3; k <= 5; ++k) {
            auto rep = verify_exhaustive(k, verification_family(k, 0, 1));
            CHECK(rep.instances == 2 * (std::int64_t{1} << (2 * k - 1)));
            CHECK(rep.mismatches == 0);
        }
    }
    SUBCASE("counterexample is reported with both values")
    {
        std::vector<NamedAssignment> fam{
            {"double", MessageAssignment({TransmitSet{}, TransmitSet{2, 3}, TransmitSet{1, 2}})}};
        auto rep = verify_exhaustive(3, fam, 5);
        CHECK(rep.mismatches > 0);
        REQUIRE_FALSE(rep.examples.empty());
        CHECK(rep.examples.size() <= 5);
        CHECK(rep.examples[0].oracle_dof > rep.examples[0].scheduler_dof);
        CHECK(format_mismatch(rep.examples[0]).find("double") != std::string::npos);
    }
    SUBCASE("report is independent of scheduling order")
    {
        auto fam = verification_family(4, 10, 5);
        auto a = verify_exhaustive(4, fam, 3);
        auto b = verify_exhaustive(4, fam, 3);
        CHECK(a.mismatches == b.mismatches);
        REQUIRE(a.examples.size() == b.examples.size());
        for (std::size_t i = 0; i < a.examples.size(); ++i) {
            CHECK(a.examples[i].realization == b.examples[i].realization);
        }
    }
    SUBCASE("limits")
    {
        CHECK_THROWS_AS(verify_exhaustive(11, {}), ParameterError);
        CHECK_THROWS_AS(verify_random(3, 20, 10, 0), ParameterError);
    }
}
