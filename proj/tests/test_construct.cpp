#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bnsync/construct.hpp"
#include "bnsync/harness.hpp"
#include "bnsync/syncdet.hpp"

using namespace bnsync;

namespace {

SignedDigraph example_graph() {
    SignedDigraph g(3);
    g.add_arc(0, 0, -1);
    g.add_arc(2, 0, +1);
    g.add_arc(0, 1, +1);
    g.add_arc(1, 2, -1);
    return g;
}

bool bit(Config x, int i) { return (x >> i) & 1; }

// All strong, no-positive-cycle, non-cycle simple signed digraphs on [n],
// taken from the seeded sampler for n > 3 and a fixed list otherwise.
std::vector<SignedDigraph> test_graphs() {
    std::vector<SignedDigraph> out;
    out.push_back(example_graph());
    {
        SignedDigraph g(3);
        g.add_arc(0, 1, +1);
        g.add_arc(1, 2, +1);
        g.add_arc(2, 0, -1);
        g.add_arc(1, 0, -1);
        out.push_back(g);
    }
    {
        SignedDigraph g(4);
        g.add_arc(0, 1, +1);
        g.add_arc(1, 2, +1);
        g.add_arc(2, 3, +1);
        g.add_arc(3, 0, -1);
        g.add_arc(2, 0, -1);
        out.push_back(g);
    }
    for (const SignedDigraph& g : strong_negative_sample(4, 3, 7)) out.push_back(g);
    return out;
}

}  // namespace

TEST_CASE("fibonacci sequence and budgets") {
    CHECK(fib(1) == 1);
    CHECK(fib(2) == 1);
    CHECK(fib(3) == 2);
    CHECK(fib(10) == 55);
    CHECK(flip_budget(3) == fib(5) - 1);
    CHECK(pair_sync_budget(3) == 3 * fib(7) - 3);
    CHECK(global_sync_budget(3) == (3 * fib(7) - 3) * 7);
}

TEST_CASE("maximal canalizing word is canalizing and non-extendable") {
    AndOrNet f = and_net(example_graph());
    for (int i = 0; i < 3; ++i)
        for (bool a : {false, true}) {
            Canalization c = maximal_canalizing_word(f, i, a);
            // Canalizing: applying the word from any x with x_i = a pins the
            // letters at the recorded values.
            for (Config x = 0; x < 8; ++x) {
                if (bit(x, i) != a) continue;
                Config y = f.apply_word(c.word, x);
                for (int j : c.canalized) CHECK(bit(y, j) == bit(c.values, j));
            }
            // Non-extendable: no further letter is constant on the image.
            for (int j = 0; j < 3; ++j) {
                if (j == i) continue;
                bool used = false;
                for (int l : c.word)
                    if (l == j) used = true;
                if (used) continue;
                bool constant = true;
                bool first = true, val = false;
                for (Config x = 0; x < 8; ++x) {
                    if (bit(x, i) != a) continue;
                    bool v = f.component(j, f.apply_word(c.word, x));
                    if (first) {
                        val = v;
                        first = false;
                    } else if (v != val) {
                        constant = false;
                    }
                }
                CHECK_FALSE(constant);
            }
            // A longest canalizing word is at least as long.
            Canalization l = longest_canalizing_word(f, i, a);
            CHECK(l.word.size() >= c.word.size());
        }
}

TEST_CASE("canalized values diffuse along signed paths") {
    AndOrNet f = and_net(example_graph());
    Canalization c = maximal_canalizing_word(f, 0, false);
    if (!c.word.empty()) CHECK(diffusion_check(f, 0, false, c));
}

TEST_CASE("flip changes the target component within budget") {
    for (const SignedDigraph& g : test_graphs()) {
        int n = g.size();
        for (const AndOrNet& f : enumerate_and_or_nets(g))
            for (Config x = 0; x < (Config{1} << n); ++x)
                for (int i = 0; i < n; ++i) {
                    Word w = flip_vertex(f, x, i);  // throws on violation
                    CHECK(bit(f.apply_word(w, x), i) != bit(x, i));
                    CHECK(w.size() < fib(n + 2));
                }
    }
}

TEST_CASE("unstable word produces an unstable configuration") {
    AndOrNet f = and_net(example_graph());
    for (Config x = 0; x < 8; ++x) {
        Word v = unstable_word(f, x, 0);
        Config y = f.apply_word(v, x);
        CHECK(bit(y, 0) == bit(x, 0));
        // Positive in-neighbor 3 must disagree with x_1; negative in-neighbor
        // 1 must agree.
        CHECK(bit(y, 2) != bit(y, 0));
    }
}

TEST_CASE("pair merge construction within the claimed budget") {
    for (const SignedDigraph& g : test_graphs()) {
        int n = g.size();
        for (const AndOrNet& f : enumerate_and_or_nets(g))
            for (Config x = 0; x < (Config{1} << n); ++x)
                for (Config y = x + 1; y < (Config{1} << n); ++y) {
                    Word w = pair_sync(f, x, y);
                    CHECK(f.apply_word(w, x) == f.apply_word(w, y));
                    CHECK(w.size() <= pair_sync_budget(n));
                }
    }
}

TEST_CASE("global construction synchronizes every net") {
    for (const SignedDigraph& g : test_graphs())
        for (const AndOrNet& f : enumerate_and_or_nets(g)) {
            Word w = global_sync_word(f);
            CHECK(apply_word_set(f, w, StateSet::full(g.size())).count() == 1);
            CHECK(w.size() <= global_sync_budget(g.size()));
        }
}

TEST_CASE("fast synchronization meets its linear-style budget") {
    for (const SignedDigraph& g : test_graphs()) {
        FastSync fs = fast_sync(g);
        CHECK(apply_word_set(fs.net, fs.word, StateSet::full(g.size())).count() == 1);
        bool has_loop = false;
        for (int v = 0; v < g.size(); ++v)
            if (g.has_arc(v, v)) has_loop = true;
        CHECK(fs.word.size() <= fast_sync_budget(g.size(), has_loop));
        CHECK(interaction_digraph(fs.net) == g);
    }
}

TEST_CASE("feedback-one word synchronizes every and-or-net") {
    for (const SignedDigraph& g : test_graphs()) {
        if (min_feedback_vertex_set(g).size() > 1) continue;
        Word w = tau1_word(g);
        CHECK(w.size() <= static_cast<std::size_t>(3 * g.size() - 1));
        for (const AndOrNet& f : enumerate_and_or_nets(g))
            CHECK(apply_word_set(f, w, StateSet::full(g.size())).count() == 1);
    }
}

TEST_CASE("acyclic word synchronizes acyclic networks") {
    SignedDigraph dag(3);
    dag.add_arc(0, 1, +1);
    dag.add_arc(0, 2, -1);
    dag.add_arc(1, 2, +1);
    Word w = acyclic_word(dag);
    CHECK(w.size() == 3);
    for (const AndOrNet& f : enumerate_and_or_nets(dag))
        CHECK(apply_word_set(f, w, StateSet::full(3)).count() == 1);
}

TEST_CASE("unique fixed point yields a synchronizing permutation") {
    // Acyclic interaction digraph: unique fixed point, all cycles vacuously
    // one sign.
    SignedDigraph dag(3);
    dag.add_arc(0, 1, +1);
    dag.add_arc(1, 2, -1);
    for (const AndOrNet& f : enumerate_and_or_nets(dag)) {
        SameSignReport rep = same_sign_sync_check(f);
        CHECK(rep.fixed_point_count == 1);
        CHECK(rep.synchronizing);
        REQUIRE(rep.word.has_value());
        CHECK(rep.word->size() == 3);
        CHECK(apply_word_set(f, *rep.word, StateSet::full(3)).count() == 1);
    }
}

TEST_CASE("two fixed points block synchronization under positive cycles") {
    SignedDigraph pos(2);
    pos.add_arc(0, 1, +1);
    pos.add_arc(1, 0, +1);
    SameSignReport rep = same_sign_sync_check(and_net(pos));
    CHECK(rep.cycles_all_positive);
    CHECK(rep.fixed_point_count == 2);
    CHECK_FALSE(rep.synchronizing);
}

TEST_CASE("permutation-complete words") {
    CHECK(is_n_complete(n_complete_word(3), 3));
    CHECK_FALSE(is_n_complete(Word{0, 1, 2}, 3));  // misses e.g. 2,1,0
    Word pi{2, 1, 0};
    TableNet f = missing_permutation_counterexample(pi, 3);
    CHECK(is_synchronizing(f));
    CHECK(apply_word_set(f, pi, StateSet::full(3)).count() == 1);
    // 0,1,2 repeated twice misses exactly the permutation 2,1,0.
    Word missing{0, 1, 2, 0, 1, 2};
    CHECK_FALSE(is_n_complete(missing, 3));
    CHECK(apply_word_set(f, missing, StateSet::full(3)).count() > 1);
}

TEST_CASE("majority network realizes its graph and keeps opposite pairs") {
    SignedDigraph g(3);
    // All in-degrees 1 or 3.
    g.add_arc(0, 0, +1);
    g.add_arc(1, 0, -1);
    g.add_arc(2, 0, +1);
    g.add_arc(0, 1, +1);
    g.add_arc(1, 2, -1);
    TableNet f = majority_counterexample(g);
    CHECK(interaction_digraph(f) == g);
    CHECK_FALSE(is_synchronizing(f));
    for (Config x = 0; x < 8; ++x)
        for (int i = 0; i < 3; ++i)
            CHECK(f.component(i, x) != f.component(i, x ^ 7));
}
