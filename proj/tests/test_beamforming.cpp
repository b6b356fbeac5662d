#include <doctest.h>

#include <cmath>

#include "wyner/beamforming.hpp"
#include "wyner/error.hpp"

using namespace wyner;

namespace {

bool near(Complex a, Complex b)
{
    return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(b));
}

} // namespace

TEST_CASE("weights for the K=5, f=3/5 schedule")
{
    auto const r = attach_generic_coefficients(NetworkRealization::all_present(5), 2024);
    auto const s = schedule_network(r, build_assignment(5, Fraction(3, 5)));
    auto const plan = build_transmit_signals(s, r);

    CHECK(plan.carried(3).size() == 2);
    CHECK(near(plan.weight(3, 4), 1.0));
    CHECK(near(plan.weight(3, 5), -r.coefficient(4, 4) / r.coefficient(4, 3)));

    CHECK(plan.carried(2).size() == 2);
    CHECK(near(plan.weight(2, 2), 1.0));
    CHECK(near(plan.weight(2, 1), -r.coefficient(2, 1) / r.coefficient(2, 2)));

    CHECK(near(plan.weight(1, 1), 1.0));
    CHECK(plan.carried(1).size() == 1);
    CHECK(near(plan.weight(4, 5), 1.0));
    CHECK(plan.carried(5).empty());

    auto const report = verify_zero_forcing(plan, s, r);
    CHECK(report.pass);
    CHECK(report.active.size() == 4);
}

TEST_CASE("empty schedule leaves every transmitter silent")
{
    auto const r = attach_generic_coefficients(NetworkRealization::all_present(4), 1);
    auto const plan = build_transmit_signals(Schedule(4), r);
    for (int t = 1; t <= 4; ++t) {
        CHECK(plan.carried(t).empty());
    }
    auto const report = verify_zero_forcing(plan, Schedule(4), r);
    CHECK(report.pass);
    CHECK(report.active.empty());
}

TEST_CASE("single delivery")
{
    auto const r = attach_generic_coefficients(NetworkRealization::all_present(3), 9);
    Schedule s(3);
    s.set(1, 1);
    auto const plan = build_transmit_signals(s, r);
    REQUIRE(plan.carried(1).size() == 1);
    CHECK(plan.carried(1)[0].first == 1);
    CHECK(near(plan.carried(1)[0].second, 1.0));
}

TEST_CASE("all-erased realization passes vacuously")
{
    auto const r = attach_generic_coefficients(NetworkRealization::all_absent(6), 3);
    auto const a = build_assignment(6, Fraction(0, 1));
    auto const s = schedule_network(r, a);
    auto const report = verify_zero_forcing(build_transmit_signals(s, r), s, r);
    CHECK(report.pass);
    CHECK(report.active.empty());
}

TEST_CASE("zeroed delivery weight is caught at the right receiver")
{
    auto const r = attach_generic_coefficients(NetworkRealization::all_present(5), 17);
    auto const s = schedule_network(r, build_assignment(5, Fraction(3, 5)));
    auto plan = build_transmit_signals(s, r);
    plan.set(3, 4, 0.0);  // W_4 no longer delivered by transmitter 3
    auto const report = verify_zero_forcing(plan, s, r);
    CHECK_FALSE(report.pass);
    REQUIRE_FALSE(report.failures.empty());
    CHECK(report.failures.front().receiver == 4);
    CHECK(report.failures.front().message == 4);
}

TEST_CASE("missing cancellation leaks interference")
{
    auto const r = attach_generic_coefficients(NetworkRealization::all_present(5), 5);
    auto const s = schedule_network(r, build_assignment(5, Fraction(3, 5)));
    auto plan = build_transmit_signals(s, r);
    plan.set(2, 1, 0.0);  // stop cancelling W_1 at receiver 2
    auto const report = verify_zero_forcing(plan, s, r);
    CHECK_FALSE(report.pass);
    bool receiver2 = false;
    for (auto const& f : report.failures) {
        receiver2 = receiver2 || (f.receiver == 2 && f.message == 1);
    }
    CHECK(receiver2);
}

TEST_CASE("plan carrying a message without a decision fails")
{
    auto const r = attach_generic_coefficients(NetworkRealization::all_present(3), 5);
    Schedule s(3);
    s.set(1, 1);
    auto plan = build_transmit_signals(s, r);
    plan.add(3, 2, 1.0);
    CHECK_FALSE(verify_zero_forcing(plan, s, r).pass);
}

TEST_CASE("build_transmit_signals errors")
{
    Schedule s(3);
    s.set(1, 1);
    s.set(1, 2);
    s.set(2, 2);
    CHECK_THROWS_AS(build_transmit_signals(s, NetworkRealization::all_present(3)), ParameterError);
    // Cancellation at receiver 2 needs H(2,2); erase it.
    auto const r = attach_generic_coefficients(parse_realization("3;101;11"), 1);
    CHECK_THROWS_AS(build_transmit_signals(s, r), InvariantError);
}

TEST_CASE("generic coefficients: schedules zero-force for random instances")
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        int const k = 3 + static_cast<int>(seed % 40);
        auto const r = attach_generic_coefficients(sample_realization(k, 0.3, seed), seed);
        auto const a = build_assignment(k, Fraction(static_cast<std::int64_t>(seed % 11), 10));
        auto const s = schedule_network(r, a);
        auto const report = verify_zero_forcing(build_transmit_signals(s, r), s, r);
        CAPTURE(format_realization(r));
        CHECK(report.pass);
        CHECK(static_cast<int>(report.active.size()) == dof(s));
    }
}
