#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bnsync/sdigraph.hpp"

namespace bnsync {

// A configuration is a bit vector packed into a word: bit i is the state of
// vertex i. Networks here are capped at 30 vertices; operations that walk the
// whole state space carry tighter guards.
using Config = std::uint32_t;

// A word over the vertex alphabet; letters are vertex indices. Letters
// outside the network act as the identity.
using Word = std::vector<int>;

inline constexpr int kMaxVertices = 30;

class BooleanNetwork {
public:
    virtual ~BooleanNetwork() = default;
    virtual int size() const = 0;
    virtual bool component(int i, Config x) const = 0;

    Config eval(Config x) const;               // synchronous image f(x)
    Config async_step(int letter, Config x) const;  // f^i(x); out-of-range letters are identity
    Config apply_word(const Word& w, Config x) const;
};

enum class GateKind { Conjunction, Disjunction, Const0, Const1 };

// And-or-net: each component is a conjunction or disjunction of signed
// literals over the in-neighbors of its vertex, or a constant when the
// in-degree is zero.
class AndOrNet : public BooleanNetwork {
public:
    AndOrNet() = default;
    AndOrNet(SignedDigraph graph, std::vector<GateKind> gates);

    int size() const override { return graph_.size(); }
    bool component(int i, Config x) const override;

    const SignedDigraph& graph() const { return graph_; }
    const std::vector<GateKind>& gates() const { return gates_; }
    Config positive_inputs(int i) const { return pos_[i]; }
    Config negative_inputs(int i) const { return neg_[i]; }

private:
    SignedDigraph graph_;
    std::vector<GateKind> gates_;
    std::vector<Config> pos_, neg_;  // in-neighbor masks by sign
};

// All-conjunction / all-disjunction nets on a graph; vertices of in-degree
// zero get the absorbing constant (1 for and, 0 for or).
AndOrNet and_net(const SignedDigraph& g);
AndOrNet or_net(const SignedDigraph& g);

// Truth-table network: the universal representation.
class TableNet : public BooleanNetwork {
public:
    TableNet() = default;
    explicit TableNet(int n);
    TableNet(const BooleanNetwork& f);  // tabulate

    int size() const override { return n_; }
    bool component(int i, Config x) const override;
    void set_component(int i, Config x, bool value);

private:
    int n_ = 0;
    std::vector<std::vector<std::uint64_t>> tables_;
};

// Set of configurations as a bitset over the state space (n <= 20).
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(int n);
    static StateSet full(int n);

    int dimension() const { return n_; }
    bool contains(Config x) const;
    void insert(Config x);
    std::size_t count() const;
    std::vector<Config> to_vector() const;

    friend bool operator==(const StateSet&, const StateSet&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

StateSet apply_word_set(const BooleanNetwork& f, const Word& w, const StateSet& xs);

// Interaction digraph: arc (j,i,s) iff some configuration witnesses a
// monotone (s=+1) or antitone (s=-1) dependence of f_i on x_j. Exhaustive
// scan; n <= 20.
SignedDigraph interaction_digraph(const BooleanNetwork& f);

// I-switch of a network: h(x) = f(x + e_I) + e_I.
TableNet bn_switch(const BooleanNetwork& f, const std::vector<int>& I);
AndOrNet bn_switch(const AndOrNet& f, const std::vector<int>& I);

std::vector<Config> fixed_points(const BooleanNetwork& f);

// Restriction of f to the complement of `frozen` vertices, which are held at
// the bits `values` takes in the full configuration. If `override_vertex` is
// nonnegative, every component additionally reads that vertex as
// `override_value` regardless of its actual state.
struct RestrictedNet {
    TableNet net;               // on the remaining vertices, reindexed
    std::vector<int> vertices;  // vertices[new] = old, increasing

    Config restrict_config(Config full) const;
    Config extend_config(Config sub, Config fill) const;
    Word lift_word(const Word& w) const;  // reindex letters back to the full network
};

RestrictedNet clamp(const BooleanNetwork& f, const std::vector<int>& frozen, Config values,
                    int override_vertex = -1, bool override_value = false);

// Strongly connected components of the asynchronous transition digraph
// (arcs x -> f^i(x) for every letter). n <= 20.
std::vector<std::vector<Config>> asynchronous_terminal_components(const BooleanNetwork& f);

// Every and-or-net whose interaction digraph is exactly g (one net per gate
// assignment over vertices of in-degree >= 2; in-degree-0 vertices contribute
// both constants). Throws if g is not simple.
std::vector<AndOrNet> enumerate_and_or_nets(const SignedDigraph& g);

// ".aon" format: the .sdg payload followed by "gate <i> AND|OR|CONST0|CONST1"
// lines, 1-indexed.
AndOrNet parse_aon(const std::string& text);
std::string to_aon(const AndOrNet& f);

std::string config_to_string(Config x, int n);  // "x1 x2 ... xn" as e.g. "011"
Config config_from_string(const std::string& s);
std::string word_to_string(const Word& w);  // 1-indexed, space separated
Word word_from_string(const std::string& s);

}  // namespace bnsync
