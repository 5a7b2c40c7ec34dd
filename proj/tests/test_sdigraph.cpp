#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "bnsync/sdigraph.hpp"

using namespace bnsync;

namespace {

// The running example: 1 -| 1, 3 -> 1, 1 -> 2, 2 -| 3.
SignedDigraph example_graph() {
    SignedDigraph g(3);
    g.add_arc(0, 0, -1);
    g.add_arc(2, 0, +1);
    g.add_arc(0, 1, +1);
    g.add_arc(1, 2, -1);
    return g;
}

}  // namespace

TEST_CASE("parse and serialize round trip") {
    SignedDigraph g = example_graph();
    SignedDigraph h = parse_sdg(to_sdg(g));
    CHECK(g == h);
    CHECK(parse_sdg("n 3\n# comment\n1 1 -\n3 1 +\n1 2 +\n2 3 -\n") == g);
    CHECK_THROWS_AS(parse_sdg("n 2\n3 1 +\n"), std::invalid_argument);
}

TEST_CASE("degrees and simplicity") {
    SignedDigraph g = example_graph();
    CHECK(g.is_simple());
    CHECK(g.in_degree(0) == 2);
    CHECK(g.out_degree(0) == 2);
    g.add_arc(2, 0, -1);  // parallel opposite arc
    CHECK_FALSE(g.is_simple());
}

TEST_CASE("strong components and strongness") {
    SignedDigraph g = example_graph();
    CHECK(is_strong(g));
    auto comps = strong_components(g);
    CHECK(comps.size() == 1);
    CHECK(comps.front().initial);
    CHECK(comps.front().terminal);

    SignedDigraph dag(3);
    dag.add_arc(0, 1, +1);
    dag.add_arc(1, 2, +1);
    auto dc = strong_components(dag);
    CHECK(dc.size() == 3);
    CHECK_FALSE(is_strong(dag));
}

TEST_CASE("simple cycle enumeration and signs") {
    SignedDigraph g = example_graph();
    auto cycles = simple_cycles(g);
    // Loop at 1 (negative) and the triangle 1,2,3 with signs +,-,+ -> negative.
    CHECK(cycles.size() == 2);
    CycleSignProfile p = cycle_sign_profile(g);
    CHECK(p.positive == 0);
    CHECK(p.negative == 2);
    CHECK_FALSE(p.has_positive());
    CHECK(p.has_negative());
}

TEST_CASE("cycle graph recognition") {
    SignedDigraph c(3);
    c.add_arc(0, 1, +1);
    c.add_arc(1, 2, +1);
    c.add_arc(2, 0, -1);
    CHECK(is_cycle_graph(c));
    CHECK_FALSE(is_cycle_graph(example_graph()));
}

TEST_CASE("switch is an involution and preserves cycle signs") {
    SignedDigraph g = example_graph();
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<int> I;
        for (int v = 0; v < 3; ++v)
            if ((mask >> v) & 1) I.push_back(v);
        SignedDigraph h = switch_graph(g, I);
        CHECK(switch_graph(h, I) == g);
        CycleSignProfile pg = cycle_sign_profile(g), ph = cycle_sign_profile(h);
        CHECK(pg.positive == ph.positive);
        CHECK(pg.negative == ph.negative);
    }
}

TEST_CASE("full-positive switch equivalence matches brute force") {
    // Check the criterion against explicit enumeration of all switches.
    std::vector<SignedDigraph> graphs;
    graphs.push_back(example_graph());
    {
        SignedDigraph g(3);
        g.add_arc(0, 1, -1);
        g.add_arc(1, 2, -1);
        g.add_arc(2, 0, -1);
        graphs.push_back(g);  // negative cycle: not switchable to full-positive
    }
    {
        SignedDigraph g(3);
        g.add_arc(0, 1, -1);
        g.add_arc(1, 2, +1);
        g.add_arc(2, 0, -1);
        graphs.push_back(g);  // positive cycle: switchable
    }
    {
        SignedDigraph g(4);
        g.add_arc(0, 1, -1);
        g.add_arc(1, 2, +1);
        g.add_arc(0, 2, +1);
        g.add_arc(3, 0, -1);
        graphs.push_back(g);
    }
    for (const SignedDigraph& g : graphs) {
        bool brute = false;
        for (int mask = 0; mask < (1 << g.size()) && !brute; ++mask) {
            std::vector<int> I;
            for (int v = 0; v < g.size(); ++v)
                if ((mask >> v) & 1) I.push_back(v);
            SignedDigraph h = switch_graph(g, I);
            bool all_pos = true;
            for (const Arc& a : h.arcs())
                if (a.sign < 0) all_pos = false;
            if (all_pos) brute = true;
        }
        auto I = harary_full_positive_switch(g);
        CHECK(I.has_value() == brute);
        if (I) {
            SignedDigraph h = switch_graph(g, *I);
            for (const Arc& a : h.arcs()) CHECK(a.sign == 1);
        }
    }
}

TEST_CASE("forward path signs and homogeneity") {
    // Two components: {0} initial, {1,2} cycle; arcs crossing with both signs.
    SignedDigraph g(3);
    g.add_arc(1, 2, +1);
    g.add_arc(2, 1, -1);
    g.add_arc(0, 1, +1);
    g.add_arc(0, 2, +1);
    PathSigns ps = forward_path_signs(g, 0, 1);
    CHECK(ps.has_positive);
    // 0 -> 2 -> 1 ends inside the component, so its last arc does not cross;
    // only the direct arc counts.
    CHECK_FALSE(ps.has_negative);
    CHECK(is_homogeneous(g));
}

TEST_CASE("initial cycles and sources") {
    SignedDigraph g(4);
    g.add_arc(0, 1, +1);
    g.add_arc(1, 0, -1);
    g.add_arc(1, 2, +1);
    g.add_arc(2, 3, +1);
    g.add_arc(3, 2, -1);
    auto ic = initial_cycles(g);
    REQUIRE(ic.size() == 1);
    CHECK(ic.front().vertices == std::vector<int>{0, 1});
    CHECK(sources(g).empty());

    SignedDigraph h(2);
    h.add_arc(0, 1, +1);
    CHECK(sources(h) == std::vector<int>{0});
}

TEST_CASE("minimum feedback vertex set") {
    SignedDigraph g = example_graph();
    auto fvs = min_feedback_vertex_set(g);
    CHECK(fvs == std::vector<int>{0});  // vertex 1 meets the loop and the triangle

    SignedDigraph two(4);
    two.add_arc(0, 1, +1);
    two.add_arc(1, 0, +1);
    two.add_arc(2, 3, +1);
    two.add_arc(3, 2, +1);
    CHECK(min_feedback_vertex_set(two).size() == 2);
}

TEST_CASE("spanning out-tree and topological sort") {
    SignedDigraph g = example_graph();
    auto tree = spanning_out_tree(g, 0);
    CHECK(tree.size() == 2);
    std::vector<int> order = topological_sort(g, {0});
    CHECK(order.size() == 2);
    // 2 before 3 (2's only remaining in-neighbor is the forbidden vertex 1).
    CHECK(order == std::vector<int>{1, 2});
    CHECK_THROWS_AS(topological_sort(g, {}), std::invalid_argument);
}

TEST_CASE("acyclic bipartition") {
    SignedDigraph g = example_graph();
    CHECK_THROWS_AS(acyclic_bipartition(g), std::invalid_argument);  // loop present

    SignedDigraph h(4);
    h.add_arc(0, 1, +1);
    h.add_arc(1, 2, +1);
    h.add_arc(2, 3, +1);
    h.add_arc(3, 0, -1);
    h.add_arc(1, 3, -1);
    Bipartition b = acyclic_bipartition(h);
    CHECK(b.I.size() <= 2);  // no positive cycles: at most floor(n/2)
    CHECK(b.I.size() + b.J.size() == 4);
    // Both sides must induce acyclic subgraphs.
    for (const auto& side : {b.I, b.J}) {
        std::set<int> s(side.begin(), side.end());
        for (const Arc& a : h.arcs())
            if (s.count(a.src) && s.count(a.dst)) CHECK(a.src != a.dst);
    }
}
