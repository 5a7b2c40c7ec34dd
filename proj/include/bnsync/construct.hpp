#pragma once

#include <cstdint>
#include <optional>

#include "bnsync/bnet.hpp"
#include "bnsync/sdigraph.hpp"

namespace bnsync {

// Fibonacci with F(1) = F(2) = 1.
std::uint64_t fib(int k);

// Word budgets asserted by the constructions below.
std::uint64_t flip_budget(int n);         // F(n+2) - 1
std::uint64_t fix_zero_budget(int n);     // 2 F(n+2)
std::uint64_t pair_sync_budget(int n);    // 3 F(n+4) - 3
std::uint64_t global_sync_budget(int n);  // (3 F(n+4) - 3)(2^n - 1)
std::uint64_t fast_sync_budget(int n, bool has_loop);  // 7n with a loop, else n + 5n(2^(n/2) - 1)

// A canalizing word from (i, a): a repeat-free word w over V \ {i} such that
// f^w maps the whole slice {x : x_i = a} to fixed values on {w}.
struct Canalization {
    Word word;
    std::vector<int> canalized;  // sorted vertex set of the word
    Config values;               // bits of the canalized vertices
};

// Greedy non-extendable canalizing word, least-index extension first.
Canalization maximal_canalizing_word(const BooleanNetwork& f, int i, bool a);

// Longest canalizing word by exhaustive search over repeat-free words; n <= 4.
Canalization longest_canalizing_word(const BooleanNetwork& f, int i, bool a);

// Check the diffusion property of a canalizing word from (i, a) on a graph
// without sources: every canalized vertex j is reached from i by a path with
// internal vertices canalized earlier, of sign positive iff a equals the
// canalized value of j.
bool diffusion_check(const BooleanNetwork& f, int i, bool a, const Canalization& c);

// Word w with f^w(x)_i != x_i, |w| <= F(n+2) - 1. Requires the interaction
// digraph to be i-homogeneous with no positive cycles and no sources.
Word flip_vertex(const BooleanNetwork& f, Config x, int i);

// Word w over V \ {i} making f^w(x) i-unstable (every positive in-neighbor of
// i differs from the state of i, every negative one agrees).
Word unstable_word(const BooleanNetwork& f, Config x, int i);

// Word w with f^w(x)_i = f^w(y)_i = 0, |w| <= 2 F(n+2). Requires an and-net
// whose graph is i-homogeneous with no positive cycles and no sources, and,
// when i has in-degree one, a full-positive path into i from a vertex of
// in-degree at least two.
Word fix_vertex_zero(const AndOrNet& f, Config x, Config y, int i);

// Word w with f^w(x) = f^w(y), |w| <= 3 F(n+4) - 3. Requires an and-or-net
// whose graph is homogeneous with no positive cycles, no sources and no
// initial cycles.
Word pair_sync(const AndOrNet& f, Config x, Config y);

// Synchronizing word for an and-or-net on a homogeneous graph with no
// positive cycles, no sources and no initial cycles;
// |w| <= (3 F(n+4) - 3)(2^n - 1).
Word global_sync_word(const AndOrNet& f);

// An and-or-net on g together with a synchronizing word of length at most
// 7n when g has a loop and n + 5n(2^(n/2) - 1) otherwise. Requires g simple,
// strong, not a cycle, with no positive cycles.
struct FastSync {
    AndOrNet net;
    Word word;
};

FastSync fast_sync(const SignedDigraph& g);

// Word of length <= 3n - 1 synchronizing every and-or-net on g. Requires g
// strong with no positive cycles and a vertex meeting every cycle (tau <= 1);
// acyclic graphs fall back to a topological word of length n.
Word tau1_word(const SignedDigraph& g);

// Topological word: synchronizes every pair of configurations agreeing on I
// for every Boolean network on g, provided g minus I is acyclic.
Word acyclic_word(const SignedDigraph& g, const std::vector<int>& I = {});

// Permutation of the vertices synchronizing f toward its unique fixed point;
// any superword works as well. Requires all cycles of the interaction
// digraph to have the same sign and a unique fixed point.
Word unique_fp_permutation(const BooleanNetwork& f);

// Words containing every permutation of the n vertices as a subsequence
// synchronize every network with an acyclic interaction digraph.
bool is_n_complete(const Word& w, int n);
Word n_complete_word(int n);  // (1 2 ... n)^n, length n^2

// A network with acyclic interaction digraph not synchronized by any word
// missing the given permutation as a subsequence (a full-positive path net
// along the permutation).
TableNet missing_permutation_counterexample(const Word& permutation, int n);

// Classification of a network whose interaction cycles all have one sign.
struct SameSignReport {
    bool cycles_all_positive = false;
    bool cycles_all_negative = false;
    std::size_t fixed_point_count = 0;
    bool synchronizing = false;
    std::optional<Word> word;  // a permutation word when synchronizing
};

SameSignReport same_sign_sync_check(const BooleanNetwork& f);

// The majority-rule network witnessing non-synchronization: for simple g
// with no vertices of in-degree 0 or 2, its interaction digraph is exactly g
// and it preserves each pair of opposite configurations under every letter.
TableNet majority_counterexample(const SignedDigraph& g);

}  // namespace bnsync
