// End-to-end acceptance gate: one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "bnsync/bnet.hpp"
#include "bnsync/harness.hpp"

using namespace bnsync;

namespace {

int g_failures = 0;

void report(int number, const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("criterion %d %s: %s%s%s\n", number, what.c_str(), ok ? "PASS" : "FAIL",
                detail.empty() ? "" : " ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

SignedDigraph example_graph() {
    SignedDigraph g(3);
    g.add_arc(0, 0, -1);
    g.add_arc(2, 0, +1);
    g.add_arc(0, 1, +1);
    g.add_arc(1, 2, -1);
    return g;
}

std::set<Config> image(const BooleanNetwork& f, const Word& w, const StateSet& from) {
    auto v = apply_word_set(f, w, from).to_vector();
    return {v.begin(), v.end()};
}

bool suite_ok(const SuiteReport& rep, std::string& detail) {
    detail += rep.params + " checked=" + std::to_string(rep.checked);
    if (!rep.passed()) {
        detail += " failures=" + std::to_string(rep.failures);
        if (!rep.failure_examples.empty()) detail += " [" + rep.failure_examples.front() + "]";
    }
    detail += "; ";
    return rep.passed();
}

void criterion_1() {
    AndOrNet f = and_net(example_graph());
    Word w = word_from_string("2 3 1 1 2 3");
    std::vector<std::set<Config>> expected = {
        {0b000, 0b100, 0b011, 0b111},  // {000,001,110,111} with bit i = x_{i+1}
        {0b100, 0b011},
        {0b101, 0b010},
        {0b100, 0b010},
        {0b100, 0b000},
        {0b100},
    };
    auto t0 = std::chrono::steady_clock::now();
    StateSet cur = StateSet::full(3);
    bool ok = true;
    for (std::size_t k = 0; k < w.size(); ++k) {
        auto v = apply_word_set(f, {w[k]}, cur).to_vector();
        cur = StateSet(3);
        for (Config x : v) cur.insert(x);
        if (std::set<Config>(v.begin(), v.end()) != expected[k]) ok = false;
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && cur.count() == 1 && cur.contains(config_from_string("001"));
    report(1, "and-net golden chain", ok && ms < 1.0,
           "time=" + std::to_string(ms) + "ms, final=001, bit-exact intermediate images");
}

void criterion_2() {
    SignedDigraph g = example_graph();
    Word w = word_from_string("2 3 1 1 2 3");
    AndOrNet h = or_net(g);
    bool ok = image(h, w, StateSet::full(3)) == std::set<Config>{config_from_string("110")};

    // Switch transport: on the {2,3}-switched graph, every and-or-net is the
    // switch of one on g and the same word synchronizes it.
    std::vector<int> I{1, 2};
    SignedDigraph hg = switch_graph(g, I);
    for (const AndOrNet& f : enumerate_and_or_nets(hg))
        if (image(f, w, StateSet::full(3)).size() != 1) ok = false;
    Config m = (Config{1} << 1) | (Config{1} << 2);
    AndOrNet fs = bn_switch(and_net(g), I);
    for (Config x = 0; x < 8; ++x)
        if (fs.apply_word(w, x ^ m) != (and_net(g).apply_word(w, x) ^ m)) ok = false;
    report(2, "or-net image and switch transport", ok);
}

void criterion_3() {
    std::string detail;
    bool ok = true;
    for (int n = 1; n <= 4; ++n) ok &= suite_ok(run_dichotomy_suite(n), detail);
    report(3, "synchronization dichotomy (exhaustive, n<=4)", ok, detail);
}

void criterion_4() {
    std::string detail;
    bool ok = true;
    for (int n = 2; n <= 4; ++n) ok &= suite_ok(run_budget_suite(n, 6, 2024), detail);
    ok &= suite_ok(run_budget_suite(5, 4, 2025), detail);
    report(4, "word-length budgets (n<=4 exhaustive, n=5 sampled)", ok, detail);
}

void criterion_5() {
    std::string detail;
    bool ok = true;
    for (int n = 2; n <= 4; ++n) ok &= suite_ok(run_attractor_suite(n, 5, 7), detail);
    report(5, "unique large terminal component", ok, detail);
}

void criterion_6() {
    std::string detail;
    bool ok = true;
    for (int n = 1; n <= 3; ++n) ok &= suite_ok(run_fixed_point_general_suite(n), detail);
    for (int n = 1; n <= 4; ++n) ok &= suite_ok(run_fixed_point_and_or_suite(n), detail);
    report(6, "fixed-point counts vs cycle signs", ok, detail);
}

void criterion_7() {
    std::string detail;
    bool ok = suite_ok(run_reduction_suite(2, 41), detail);
    report(7, "SAT reduction equivalences", ok, detail);
}

void criterion_8() {
    std::string detail;
    bool ok = true;
    for (int n = 1; n <= 4; ++n) ok &= suite_ok(run_complete_word_suite(n), detail);
    report(8, "permutation-complete words", ok, detail);
}

void criterion_9() {
    std::string detail;
    bool ok = true;
    for (int n = 1; n <= 5; ++n) ok &= suite_ok(run_majority_suite(n), detail);
    report(9, "majority nets realize their graph", ok, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::printf("%s (%d failing criteria)\n", g_failures == 0 ? "ALL PASS" : "FAILURES", g_failures);
    return g_failures == 0 ? 0 : 1;
}
