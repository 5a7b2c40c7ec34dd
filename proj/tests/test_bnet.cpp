#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "bnsync/bnet.hpp"

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

std::set<Config> image(const BooleanNetwork& f, const Word& w) {
    StateSet s = apply_word_set(f, w, StateSet::full(f.size()));
    auto v = s.to_vector();
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("and-net golden chain") {
    AndOrNet f = and_net(example_graph());
    // f1 = !x1 & x3, f2 = x1, f3 = !x2.
    CHECK(f.component(0, config_from_string("001")) == true);
    CHECK(f.component(0, config_from_string("101")) == false);
    CHECK(f.component(1, config_from_string("100")) == true);
    CHECK(f.component(2, config_from_string("010")) == false);

    Word w = word_from_string("2 3 1 1 2 3");
    std::vector<std::set<Config>> expected = {
        {config_from_string("000"), config_from_string("001"), config_from_string("110"),
         config_from_string("111")},
        {config_from_string("001"), config_from_string("110")},
        {config_from_string("101"), config_from_string("010")},
        {config_from_string("001"), config_from_string("010")},
        {config_from_string("001"), config_from_string("000")},
        {config_from_string("001")},
    };
    StateSet cur = StateSet::full(3);
    for (std::size_t k = 0; k < w.size(); ++k) {
        cur = apply_word_set(f, {w[k]}, cur);
        auto v = cur.to_vector();
        CHECK(std::set<Config>(v.begin(), v.end()) == expected[k]);
    }
}

TEST_CASE("or-net golden image") {
    AndOrNet h = or_net(example_graph());
    Word w = word_from_string("2 3 1 1 2 3");
    CHECK(image(h, w) == std::set<Config>{config_from_string("110")});
}

TEST_CASE("switch transport of a synchronizing word") {
    SignedDigraph g = example_graph();
    std::vector<int> I{1, 2};  // vertices 2 and 3
    SignedDigraph hg = switch_graph(g, I);
    Word w = word_from_string("2 3 1 1 2 3");
    // Every and-or-net on the switched graph is the switch of one on g, and
    // the same word synchronizes it.
    for (const AndOrNet& f : enumerate_and_or_nets(hg)) {
        CHECK(image(f, w).size() == 1);
    }
    // Direct transport identity: h^w(x + e_I) = f^w(x) + e_I.
    AndOrNet f = and_net(g);
    AndOrNet h = bn_switch(f, I);
    Config m = (Config{1} << 1) | (Config{1} << 2);
    for (Config x = 0; x < 8; ++x)
        CHECK(h.apply_word(w, x ^ m) == (f.apply_word(w, x) ^ m));
}

TEST_CASE("table net and switch agree with the structural switch") {
    AndOrNet f = and_net(example_graph());
    std::vector<int> I{0, 2};
    AndOrNet hs = bn_switch(f, I);
    TableNet ht = bn_switch(static_cast<const BooleanNetwork&>(f), I);
    for (Config x = 0; x < 8; ++x)
        for (int i = 0; i < 3; ++i) CHECK(hs.component(i, x) == ht.component(i, x));
}

TEST_CASE("interaction digraph recovers the and-or graph") {
    SignedDigraph g = example_graph();
    for (const AndOrNet& f : enumerate_and_or_nets(g)) CHECK(interaction_digraph(f) == g);
}

TEST_CASE("letters outside the range act as identity") {
    AndOrNet f = and_net(example_graph());
    for (Config x = 0; x < 8; ++x) {
        CHECK(f.async_step(5, x) == x);
        CHECK(f.async_step(-1, x) == x);
    }
}

TEST_CASE("fixed points") {
    AndOrNet f = and_net(example_graph());
    // No positive cycles, strong: no fixed points.
    CHECK(fixed_points(f).empty());

    SignedDigraph pos(2);
    pos.add_arc(0, 1, +1);
    pos.add_arc(1, 0, +1);
    AndOrNet p = and_net(pos);
    auto fps = fixed_points(p);
    CHECK(fps == std::vector<Config>{0, 3});
}

TEST_CASE("clamp freezes vertices and the override input") {
    AndOrNet f = and_net(example_graph());
    // Freeze vertex 2 (index 1) at value 1.
    RestrictedNet r = clamp(f, {1}, Config{1} << 1);
    CHECK(r.net.size() == 2);
    CHECK(r.vertices == std::vector<int>{0, 2});
    // In the restricted net, component for old vertex 3 reads !x2 = 0.
    for (Config s = 0; s < 4; ++s) CHECK(r.net.component(1, s) == false);
    // Override: every component reads vertex 0 as 1 regardless of its state.
    RestrictedNet o = clamp(f, {}, 0, 0, true);
    CHECK(o.net.size() == 3);
    for (Config x = 0; x < 8; ++x) {
        CHECK(o.net.component(1, x) == true);   // f2 = x1 -> 1
        CHECK(o.net.component(0, x) == false);  // f1 = !1 & x3 = 0
    }
}

TEST_CASE("clamp override reads the forced value") {
    AndOrNet f = and_net(example_graph());
    RestrictedNet o = clamp(f, {}, 0, 0, false);  // vertex 1 read as 0
    for (Config x = 0; x < 8; ++x) {
        CHECK(o.net.component(1, x) == false);  // f2 = x1 -> 0
        CHECK(o.net.component(0, x) == (((x >> 2) & 1) != 0));  // f1 = !0 & x3 = x3
    }
}

TEST_CASE("asynchronous terminal components") {
    AndOrNet f = and_net(example_graph());
    auto terms = asynchronous_terminal_components(f);
    REQUIRE(terms.size() == 1);
    CHECK(terms.front().size() >= 4);  // at least n+1 configurations

    SignedDigraph pos(2);
    pos.add_arc(0, 1, +1);
    pos.add_arc(1, 0, +1);
    auto pterms = asynchronous_terminal_components(and_net(pos));
    CHECK(pterms.size() == 2);  // the two fixed points
}

TEST_CASE("and-or net serialization round trip") {
    AndOrNet f = or_net(example_graph());
    AndOrNet g = parse_aon(to_aon(f));
    CHECK(g.graph() == f.graph());
    CHECK(g.gates() == f.gates());
}

TEST_CASE("config and word string helpers") {
    CHECK(config_to_string(config_from_string("011"), 3) == "011");
    CHECK(word_to_string(word_from_string("2 3 1")) == "2 3 1");
    CHECK(config_from_string("100") == 1);  // x1 is bit 0
}
