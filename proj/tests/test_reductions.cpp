#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bnsync/reductions.hpp"
#include "bnsync/syncdet.hpp"

using namespace bnsync;

namespace {

Cnf3 sample_formula() {
    // (x1 | !x2 | !x3) & (!x1 | x2 | !x3)
    return parse_dimacs_string("p cnf 3 2\n1 -2 -3 0\n-1 2 -3 0\n");
}

}  // namespace

TEST_CASE("DIMACS parsing and validation") {
    Cnf3 psi = sample_formula();
    CHECK(psi.n() == 3);
    CHECK(psi.m() == 2);
    CHECK(psi.clauses[0] == std::array<int, 3>{1, -2, -3});
    CHECK_THROWS_AS(parse_dimacs_string("p cnf 3 1\n1 2 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dimacs_string("p cnf 3 1\n1 1 2 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dimacs_string("p cnf 3 1\n1 -1 2 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dimacs_string("p cnf 2 1\n1 2 3 0\n"), std::invalid_argument);
}

TEST_CASE("satisfiability search") {
    auto model = sat_solve(sample_formula());
    REQUIRE(model.has_value());
    CHECK(sample_formula().satisfied_by(*model));
}

TEST_CASE("gadget graph shapes") {
    Cnf3 psi = sample_formula();
    ReductionLayout lay = reduction_layout(psi);
    SignedDigraph core = clause_gadget_graph(psi);
    CHECK(core.size() == 3 * 3 + 3 * 2 + 1);
    CHECK(core.is_simple());

    SignedDigraph g = strong_reduction_graph(psi);
    CHECK(g.size() == 3 * 3 + 3 * 2 + 3);
    CHECK(g.is_simple());
    CHECK(is_strong(g));
    for (int v = 0; v < g.size(); ++v) CHECK(g.in_degree(v) <= 2);
    // chain(0) meets every cycle.
    for (const Cycle& c : simple_cycles(g)) {
        bool meets = false;
        for (int v : c.vertices)
            if (v == lay.chain(0)) meets = true;
        CHECK(meets);
    }

    SignedDigraph f = negative_reduction_graph(psi);
    CHECK(f.size() == 3 * 3 + 5 * 2 + 2);
    CHECK(f.is_simple());
    CycleSignProfile p = cycle_sign_profile(f);
    CHECK(p.positive == 0);
    CHECK(p.negative > 0);
    for (int v = 0; v < f.size(); ++v) CHECK(f.in_degree(v) <= 2);
}

TEST_CASE("universal word length") {
    Cnf3 psi = sample_formula();
    CHECK(strong_universal_word(psi).size() == 12 * 3 + 12 * 2 + 11);
}

TEST_CASE("witness networks certify satisfiable formulas") {
    Cnf3 psi = sample_formula();
    auto model = sat_solve(psi);
    REQUIRE(model.has_value());

    AndOrNet wf = strong_witness_net(psi, *model);
    auto [x, y] = strong_witness_fixed_points(psi, *model);
    CHECK(x != y);
    for (int i = 0; i < wf.size(); ++i) {
        CHECK(wf.component(i, x) == (((x >> i) & 1) != 0));
        CHECK(wf.component(i, y) == (((y >> i) & 1) != 0));
    }
    CHECK(negative_witness_invariant_check(psi, *model));
}

TEST_CASE("equivalence check on a satisfiable formula") {
    EquivalenceReport rep = equivalence_check(sample_formula(), 1, 11);
    CHECK(rep.satisfiable);
    CHECK(rep.strong_witness_valid);
    CHECK(rep.negative_witness_valid);
    CHECK(rep.strong_all_nets_agree);
    CHECK(rep.consistent);
    CHECK(rep.strong_nets_checked > 0);
}

TEST_CASE("single-clause formula") {
    Cnf3 psi = parse_dimacs_string("p cnf 3 1\n1 2 3 0\n");
    EquivalenceReport rep = equivalence_check(psi, 1, 3);
    CHECK(rep.satisfiable);
    CHECK(rep.consistent);
}
