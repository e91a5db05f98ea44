// Acceptance suite: runs every verification suite and prints one line per
// criterion. The whole binary fails if any criterion fails.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "fc/harness.hpp"

using namespace fc;

namespace {

bool run_criterion(int number, const std::string &suite) {
    SuiteReport rep = run_suite(suite);
    std::printf("CRITERION %2d (%s): %s  [checked %d, failures %d] %s\n", number,
                suite.c_str(), rep.pass ? "PASS" : "FAIL", rep.checked, rep.failures,
                rep.detail.c_str());
    std::fflush(stdout);
    return rep.pass;
}

}  // namespace

TEST_CASE("criterion 1: oracle cross-check") { CHECK(run_criterion(1, "oracle-cross")); }
TEST_CASE("criterion 2: decision preservation") { CHECK(run_criterion(2, "decision")); }
TEST_CASE("criterion 3: per-rule safeness") { CHECK(run_criterion(3, "rule-safeness")); }
TEST_CASE("criterion 4: classification equivalence") {
    CHECK(run_criterion(4, "classification"));
}
TEST_CASE("criterion 5: rigidization") { CHECK(run_criterion(5, "rigidization")); }
TEST_CASE("criterion 6: size bound") { CHECK(run_criterion(6, "size-bound")); }
TEST_CASE("criterion 7: structural propositions") {
    CHECK(run_criterion(7, "structural"));
}
TEST_CASE("criterion 8: counting early exits") { CHECK(run_criterion(8, "counting")); }
TEST_CASE("criterion 9: gadget validation") { CHECK(run_criterion(9, "gadget")); }
TEST_CASE("criterion 10: throughput") { CHECK(run_criterion(10, "throughput")); }
