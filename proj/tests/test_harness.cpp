#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bnsync/harness.hpp"

using namespace bnsync;

namespace {

void check_pass(const SuiteReport& rep) {
    INFO(rep.name << " " << rep.params << " failures=" << rep.failures << " "
                  << (rep.failure_examples.empty() ? "" : rep.failure_examples.front()));
    CHECK(rep.passed());
    CHECK(rep.checked > 0);
}

}  // namespace

TEST_CASE("dichotomy suite at n=2") {
    check_pass(run_dichotomy_suite(2));
}

TEST_CASE("dichotomy suite at n=3") {
    check_pass(run_dichotomy_suite(3));
}

TEST_CASE("budget suite at n=2") {
    check_pass(run_budget_suite(2, 4, 1));
}

TEST_CASE("budget suite at n=3") {
    check_pass(run_budget_suite(3, 4, 1));
}

TEST_CASE("attractor suite at n=3") {
    check_pass(run_attractor_suite(3, 5, 1));
}

TEST_CASE("fixed-point suites at small n") {
    check_pass(run_fixed_point_general_suite(2));
    check_pass(run_fixed_point_and_or_suite(2));
    check_pass(run_fixed_point_and_or_suite(3));
}

TEST_CASE("complete-word suite at n=2 and n=3") {
    check_pass(run_complete_word_suite(2));
    check_pass(run_complete_word_suite(3));
}

TEST_CASE("majority suite at n=3") {
    check_pass(run_majority_suite(3));
}

TEST_CASE("random strong graphs have the advertised shape") {
    for (const SignedDigraph& g : strong_negative_sample(4, 5, 9)) {
        CHECK(g.size() == 4);
        CHECK(is_strong(g));
        CHECK(g.is_simple());
        CHECK_FALSE(is_cycle_graph(g));
        CHECK_FALSE(cycle_sign_profile(g).has_positive());
    }
}

TEST_CASE("suite registry runs by name") {
    auto names = suite_names();
    CHECK(names.size() >= 8);
    SuiteReport rep = run_suite_by_name("dichotomy", 2, 0, 1);
    check_pass(rep);
    CHECK(rep.seconds >= 0.0);
    std::string js = report_to_json(rep);
    CHECK(js.find("\"suite\"") != std::string::npos);
    CHECK_THROWS(run_suite_by_name("nope", 2, 0, 1));
}
