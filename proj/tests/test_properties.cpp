#include <doctest.h>

#include "support/properties.hpp"

using namespace wyner;
using namespace wyner::testing;

TEST_CASE("scheduler properties on random cases")
{
    for (std::uint64_t n = 0; n < 2000; ++n) {
        Case const c = random_case(n);
        CAPTURE(describe(c));
        REQUIRE(check_invariants(c) == "");
        REQUIRE(check_additivity(c) == "");
        REQUIRE(check_prefix_stability(c) == "");
        REQUIRE(check_deactivation(c) == "");
    }
}
