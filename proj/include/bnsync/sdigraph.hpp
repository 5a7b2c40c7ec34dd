#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bnsync {

// Signed digraph on vertices 0..n-1 (1-indexed in external formats).
// An arc is (src, dst, sign) with sign in {+1,-1}; loops allowed.
// Simple means no pair of parallel arcs with opposite signs.
struct Arc {
    int src = 0;
    int dst = 0;
    int sign = +1;

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

class SignedDigraph {
public:
    SignedDigraph() = default;
    explicit SignedDigraph(int n) : n_(n) {}
    SignedDigraph(int n, std::vector<Arc> arcs);

    int size() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    bool has_arc(int src, int dst, int sign) const;
    bool has_arc(int src, int dst) const;
    void add_arc(int src, int dst, int sign);

    std::vector<Arc> in_arcs(int v) const;
    std::vector<Arc> out_arcs(int v) const;
    int in_degree(int v) const;
    int out_degree(int v) const;
    bool is_simple() const;

    friend bool operator==(const SignedDigraph&, const SignedDigraph&) = default;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;  // kept sorted, no exact duplicates
};

// Strongly connected components in a fixed canonical order (by smallest
// vertex). initial: no arc enters from outside; terminal: no arc leaves.
struct StrongComponent {
    std::vector<int> vertices;  // sorted
    bool initial = false;
    bool terminal = false;
    bool trivial = false;  // single vertex without a loop
};

std::vector<StrongComponent> strong_components(const SignedDigraph& g);
bool is_strong(const SignedDigraph& g);

// All simple cycles (as vertex sequences, minimal rotation first) with their
// signs. Johnson-style DFS; intended for small n.
struct Cycle {
    std::vector<int> vertices;  // rotation starting at minimal vertex
    int sign = +1;
};

std::vector<Cycle> simple_cycles(const SignedDigraph& g);

struct CycleSignProfile {
    std::size_t positive = 0;
    std::size_t negative = 0;
    bool has_positive() const { return positive > 0; }
    bool has_negative() const { return negative > 0; }
    bool acyclic() const { return positive + negative == 0; }
};

CycleSignProfile cycle_sign_profile(const SignedDigraph& g);

// Whether g is exactly one cycle covering all vertices.
bool is_cycle_graph(const SignedDigraph& g);

// Switch at vertex set I: arc (j,i,s) becomes (j,i, sigma(j)*s*sigma(i))
// where sigma(v) = -1 iff v in I.
SignedDigraph switch_graph(const SignedDigraph& g, const std::vector<int>& I);

// A set I such that the I-switch of g is full positive, if one exists.
// Exists iff the symmetric closure of g has no negative cycle.
std::optional<std::vector<int>> harary_full_positive_switch(const SignedDigraph& g);

// Forward path: a path whose last arc joins two distinct strong components.
// Summary of the signs of forward paths from src to dst.
struct PathSigns {
    bool has_positive = false;
    bool has_negative = false;
    bool mixed() const { return has_positive && has_negative; }
    bool none() const { return !has_positive && !has_negative; }
};

PathSigns forward_path_signs(const SignedDigraph& g, int src, int dst);

// g is i-homogeneous if every strong component has a vertex j whose forward
// paths to i all carry the same sign. Homogeneous: i-homogeneous for all i.
bool is_i_homogeneous(const SignedDigraph& g, int i);
bool is_homogeneous(const SignedDigraph& g);

// Initial strong components that induce a cycle.
std::vector<StrongComponent> initial_cycles(const SignedDigraph& g);

// Vertices of in-degree zero.
std::vector<int> sources(const SignedDigraph& g);

// Minimum set of vertices meeting every cycle; subsets tried in size order,
// lexicographic tie-break. tau(g) is its size.
std::vector<int> min_feedback_vertex_set(const SignedDigraph& g);

// BFS spanning out-tree rooted at r (least-index neighbor order); arcs carry
// the sign of the chosen graph arc (positive preferred when parallel).
// Throws if some vertex is unreachable from r.
std::vector<Arc> spanning_out_tree(const SignedDigraph& g, int r);

// Topological order of g with `forbidden` removed, least index first among
// ready vertices. Throws if the remaining graph has a cycle.
std::vector<int> topological_sort(const SignedDigraph& g, const std::vector<int>& forbidden = {});

// Partition (I, J) with both induced subgraphs acyclic, |I| minimal,
// lexicographic tie-break. Requires no loops; with no positive cycles a
// partition with |I| <= n/2 exists.
struct Bipartition {
    std::vector<int> I;
    std::vector<int> J;
};

Bipartition acyclic_bipartition(const SignedDigraph& g);

// ".sdg" format: first line "n <count>", then "j i +" / "j i -" lines for an
// arc from j to i, 1-indexed; '#' starts a comment.
SignedDigraph parse_sdg(const std::string& text);
std::string to_sdg(const SignedDigraph& g);

}  // namespace bnsync
