#include "doctest.h"
#include "support.hpp"

using testsupport::run_corpus_battery;
using testsupport::run_randomized_battery;

// Randomized cross-checks of the library against itself: flatness of initial
// ideals under several orders, gin stability and idempotence, tangent
// semicontinuity, presentation independence, saturation shortcuts, and the
// Borel order against a reachability oracle. Seeds are fixed, so failures
// reproduce.

TEST_CASE("randomized invariance battery") {
    auto r = run_randomized_battery(60, 0x5ca1ab1e2026ULL);
    CHECK(r.ideals == 60);
    for (const auto& f : r.failures) FAIL_CHECK(f);
    CHECK(r.ok());
}

TEST_CASE("the same battery over every dataset ideal") {
    auto r = run_corpus_battery(0x5ca1ab1e2026ULL);
    CHECK(r.ideals == 47);
    for (const auto& f : r.failures) FAIL_CHECK(f);
    CHECK(r.ok());
}
