#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bnsync/bnet.hpp"
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

SignedDigraph positive_two_cycle() {
    SignedDigraph g(2);
    g.add_arc(0, 1, +1);
    g.add_arc(1, 0, +1);
    return g;
}

}  // namespace

TEST_CASE("pair merging finds shortest merging words") {
    AndOrNet f = and_net(example_graph());
    for (Config x = 0; x < 8; ++x)
        for (Config y = 0; y < 8; ++y) {
            auto w = merge_pair(f, x, y);
            REQUIRE(w.has_value());
            CHECK(f.apply_word(*w, x) == f.apply_word(*w, y));
            if (x == y) CHECK(w->empty());
            // Minimality: no strictly shorter word merges the pair. Brute
            // force over all words up to |w|-1 for short words.
            if (w->size() >= 1 && w->size() <= 3) {
                bool shorter = false;
                int n = f.size();
                for (std::size_t len = 0; len < w->size() && !shorter; ++len) {
                    std::uint64_t total = 1;
                    for (std::size_t k = 0; k < len; ++k) total *= n;
                    for (std::uint64_t code = 0; code < total && !shorter; ++code) {
                        Word cand;
                        std::uint64_t c = code;
                        for (std::size_t k = 0; k < len; ++k) {
                            cand.push_back(static_cast<int>(c % n));
                            c /= n;
                        }
                        if (f.apply_word(cand, x) == f.apply_word(cand, y)) shorter = true;
                    }
                }
                CHECK_FALSE(shorter);
            }
        }
}

TEST_CASE("pair merging reports failure on un-mergeable pairs") {
    AndOrNet p = and_net(positive_two_cycle());
    CHECK_FALSE(merge_pair(p, 0, 3).has_value());  // two fixed points
    CHECK(merge_pair(p, 0, 1).has_value());
}

TEST_CASE("synchronizability agrees with subset search") {
    AndOrNet f = and_net(example_graph());
    CHECK(is_synchronizing(f));
    auto w = shortest_sync_word(f);
    REQUIRE(w.has_value());
    CHECK(apply_word_set(f, *w, StateSet::full(3)).count() == 1);
    CHECK(w->size() <= 6);  // the known word 231123 has length 6

    AndOrNet p = and_net(positive_two_cycle());
    CHECK_FALSE(is_synchronizing(p));
    CHECK_FALSE(shortest_sync_word(p).has_value());
}

TEST_CASE("synchronizability matches the pairwise criterion on all nets") {
    for (const AndOrNet& f : enumerate_and_or_nets(example_graph())) {
        bool sync = is_synchronizing(f);
        bool pairwise = true;
        for (Config x = 0; x < 8 && pairwise; ++x)
            for (Config y = x + 1; y < 8 && pairwise; ++y)
                if (!merge_pair(f, x, y)) pairwise = false;
        CHECK(sync == pairwise);
    }
}

TEST_CASE("greedy set synchronization") {
    AndOrNet f = and_net(example_graph());
    Word w = synchronize_set(f, StateSet::full(3), 1000);
    CHECK(apply_word_set(f, w, StateSet::full(3)).count() == 1);

    AndOrNet p = and_net(positive_two_cycle());
    CHECK_THROWS(synchronize_set(p, StateSet::full(2), 1000));
}
