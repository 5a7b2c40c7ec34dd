#pragma once

// Reductions between 3-CNF satisfiability and synchronization questions on
// signed digraphs. A formula psi maps to three simple signed digraphs:
//
//   - clause_gadget_graph (the common core),
//   - strong_reduction_graph (strongly connected, max in-degree two), where
//     psi is unsatisfiable iff every Boolean network on the graph is
//     synchronizing, with an explicit universal word of length 4|V| - 1,
//   - negative_reduction_graph (all cycles negative, max in-degree two),
//     where psi is unsatisfiable iff every Boolean network on the graph is
//     synchronizing.
//
// Satisfiable formulas come with explicit witness networks: one with two
// fixed points on the strong graph, and one with a letter-invariant set of
// opposite configuration pairs on the negative graph.

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bnsync/bnet.hpp"
#include "bnsync/sdigraph.hpp"

namespace bnsync {

struct Cnf3 {
    int n_vars = 0;
    // Each clause holds three literals +v / -v over 1-indexed variables,
    // pairwise distinct and never a variable together with its negation.
    std::vector<std::array<int, 3>> clauses;

    int n() const { return n_vars; }
    int m() const { return static_cast<int>(clauses.size()); }
    bool satisfied_by(const std::vector<bool>& assignment) const;
};

// DIMACS cnf format; every clause must have exactly three literals.
Cnf3 parse_dimacs(std::istream& in);
Cnf3 parse_dimacs_string(const std::string& text);

std::optional<std::vector<bool>> sat_solve(const Cnf3& psi);

// Vertex numbering shared by the three graphs. Variables r and clauses s are
// 1-indexed, chain vertices k run from 0 to n.
struct ReductionLayout {
    int n = 0, m = 0;

    int lit_pos(int r) const { return 2 * (r - 1); }
    int lit_neg(int r) const { return 2 * (r - 1) + 1; }
    // Vertex of a literal +r / -r.
    int lit(int literal) const { return literal > 0 ? lit_pos(literal) : lit_neg(-literal); }
    int chain(int k) const { return 2 * n + k; }
    int clause_aux(int s) const { return 3 * n + 1 + (s - 1); }   // mu'_s
    int clause_main(int s) const { return 3 * n + 1 + m + (s - 1); }  // mu_s
    int collector(int s) const { return 3 * n + 1 + 2 * m + (s - 1); }  // c_s
    int core_size() const { return 3 * n + 3 * m + 1; }

    // Extra vertices of the strong graph.
    int strong_q() const { return core_size(); }
    int strong_t() const { return core_size() + 1; }
    int strong_size() const { return core_size() + 2; }

    // Extra vertices of the negative graph.
    int negative_t() const { return core_size(); }
    int negative_q(int s) const { return core_size() + 1 + (s - 1); }
    int negative_qp(int s) const { return core_size() + 1 + m + (s - 1); }
    int negative_size() const { return core_size() + 1 + 2 * m; }
};

ReductionLayout reduction_layout(const Cnf3& psi);

SignedDigraph clause_gadget_graph(const Cnf3& psi);
SignedDigraph strong_reduction_graph(const Cnf3& psi);
SignedDigraph negative_reduction_graph(const Cnf3& psi);

// Word of length 4|V| - 1 = 12n + 12m + 11 synchronizing every Boolean
// network on the strong graph when psi is unsatisfiable.
Word strong_universal_word(const Cnf3& psi);

// Witness networks for a satisfying assignment.
AndOrNet strong_witness_net(const Cnf3& psi, const std::vector<bool>& assignment);
AndOrNet negative_witness_net(const Cnf3& psi, const std::vector<bool>& assignment);

// The two fixed points of the strong witness net.
std::pair<Config, Config> strong_witness_fixed_points(const Cnf3& psi,
                                                      const std::vector<bool>& assignment);

// Certificate that the negative witness net is not synchronizing: the set
// {x : x_I = 1} is closed under every letter and opposite pairs on its
// complement stay opposite.
bool negative_witness_invariant_check(const Cnf3& psi, const std::vector<bool>& assignment);

struct EquivalenceReport {
    bool satisfiable = false;
    std::vector<bool> assignment;

    // Satisfiable side: explicit non-synchronizing witnesses.
    bool strong_witness_valid = false;    // two distinct fixed points
    bool negative_witness_valid = false;  // invariant opposite pairs

    // Unsatisfiable side: every network on the strong graph has at most one
    // fixed point and is synchronized by the universal word.
    bool strong_all_nets_agree = false;
    std::size_t strong_nets_checked = 0;

    bool consistent = false;
};

// Checks both reduction directions on psi. For satisfiable formulas the
// witnesses are validated; for unsatisfiable ones every and-or-net on the
// strong graph is checked (fixed point count and universal word, with full
// state-space verification on `full_check_sample` networks).
EquivalenceReport equivalence_check(const Cnf3& psi, int full_check_sample = 0,
                                    unsigned seed = 0);

}  // namespace bnsync
