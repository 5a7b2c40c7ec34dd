#include "bnsync/reductions.hpp"

#include <algorithm>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace bnsync {

bool Cnf3::satisfied_by(const std::vector<bool>& assignment) const {
    if (static_cast<int>(assignment.size()) != n_vars)
        throw std::invalid_argument("assignment size mismatch");
    for (const auto& cl : clauses) {
        bool sat = false;
        for (int lit : cl)
            if (assignment[std::abs(lit) - 1] == (lit > 0)) sat = true;
        if (!sat) return false;
    }
    return true;
}

Cnf3 parse_dimacs(std::istream& in) {
    Cnf3 psi;
    int declared_clauses = -1;
    std::string line;
    std::vector<int> pending;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            ls >> p >> fmt >> psi.n_vars >> declared_clauses;
            if (fmt != "cnf") throw std::invalid_argument("expected a DIMACS cnf header");
            if (psi.n_vars < 1) throw std::invalid_argument("formula needs at least one variable");
            continue;
        }
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (pending.size() != 3)
                    throw std::invalid_argument("every clause must have exactly three literals");
                std::array<int, 3> cl{pending[0], pending[1], pending[2]};
                for (int a = 0; a < 3; ++a)
                    for (int b = a + 1; b < 3; ++b) {
                        if (cl[a] == cl[b])
                            throw std::invalid_argument("duplicate literal in a clause");
                        if (cl[a] == -cl[b])
                            throw std::invalid_argument("clause contains a variable and its negation");
                    }
                psi.clauses.push_back(cl);
                pending.clear();
            } else {
                if (std::abs(lit) > psi.n_vars)
                    throw std::invalid_argument("literal out of range");
                pending.push_back(lit);
            }
        }
    }
    if (!pending.empty()) throw std::invalid_argument("unterminated clause");
    if (psi.clauses.empty()) throw std::invalid_argument("formula needs at least one clause");
    if (declared_clauses >= 0 && declared_clauses != psi.m())
        throw std::invalid_argument("clause count differs from the header");
    return psi;
}

Cnf3 parse_dimacs_string(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

std::optional<std::vector<bool>> sat_solve(const Cnf3& psi) {
    if (psi.n_vars > 24) throw std::invalid_argument("exhaustive SAT search limited to 24 variables");
    for (std::uint32_t bits = 0; bits < (1u << psi.n_vars); ++bits) {
        std::vector<bool> a(psi.n_vars);
        for (int r = 0; r < psi.n_vars; ++r) a[r] = (bits >> r) & 1;
        if (psi.satisfied_by(a)) return a;
    }
    return std::nullopt;
}

ReductionLayout reduction_layout(const Cnf3& psi) {
    ReductionLayout lay;
    lay.n = psi.n();
    lay.m = psi.m();
    return lay;
}

SignedDigraph clause_gadget_graph(const Cnf3& psi) {
    ReductionLayout lay = reduction_layout(psi);
    SignedDigraph g(lay.core_size());
    for (int r = 1; r <= lay.n; ++r) {
        g.add_arc(lay.chain(r - 1), lay.lit_pos(r), +1);
        g.add_arc(lay.chain(r - 1), lay.lit_neg(r), +1);
        g.add_arc(lay.lit_pos(r), lay.chain(r), +1);
        g.add_arc(lay.lit_neg(r), lay.chain(r), +1);
    }
    g.add_arc(lay.collector(1), lay.chain(0), +1);
    for (int s = 1; s <= lay.m; ++s) {
        const auto& cl = psi.clauses[s - 1];
        g.add_arc(lay.lit(cl[0]), lay.clause_aux(s), +1);
        g.add_arc(lay.lit(cl[1]), lay.clause_aux(s), +1);
        g.add_arc(lay.lit(cl[2]), lay.clause_main(s), +1);
        g.add_arc(lay.clause_aux(s), lay.clause_main(s), +1);
        g.add_arc(lay.clause_main(s), lay.collector(s), -1);
        int next = (s == lay.m) ? lay.chain(lay.n) : lay.collector(s + 1);
        g.add_arc(next, lay.collector(s), +1);
    }
    return g;
}

SignedDigraph strong_reduction_graph(const Cnf3& psi) {
    ReductionLayout lay = reduction_layout(psi);
    SignedDigraph core = clause_gadget_graph(psi);
    SignedDigraph g(lay.strong_size());
    for (const Arc& a : core.arcs()) g.add_arc(a.src, a.dst, a.sign);
    g.add_arc(lay.chain(0), lay.strong_q(), -1);
    g.add_arc(lay.chain(0), lay.strong_t(), +1);
    g.add_arc(lay.strong_q(), lay.strong_t(), +1);
    for (int r = 1; r <= lay.n; ++r) {
        g.add_arc(lay.strong_t(), lay.lit_pos(r), +1);
        g.add_arc(lay.strong_t(), lay.lit_neg(r), +1);
    }
    return g;
}

SignedDigraph negative_reduction_graph(const Cnf3& psi) {
    ReductionLayout lay = reduction_layout(psi);
    SignedDigraph core = clause_gadget_graph(psi);
    SignedDigraph g(lay.negative_size());
    for (const Arc& a : core.arcs()) {
        if (a.src == lay.collector(1) && a.dst == lay.chain(0)) continue;
        bool clause_to_collector = false;
        for (int s = 1; s <= lay.m; ++s)
            if (a.src == lay.clause_main(s) && a.dst == lay.collector(s)) clause_to_collector = true;
        if (clause_to_collector) continue;
        g.add_arc(a.src, a.dst, a.sign);
    }
    g.add_arc(lay.collector(1), lay.chain(0), -1);
    for (int r = 1; r <= lay.n; ++r) {
        g.add_arc(lay.negative_t(), lay.lit_pos(r), +1);
        g.add_arc(lay.negative_t(), lay.lit_neg(r), +1);
    }
    for (int s = 1; s <= lay.m; ++s) {
        g.add_arc(lay.clause_main(s), lay.negative_qp(s), +1);
        g.add_arc(lay.clause_main(s), lay.negative_q(s), +1);
        g.add_arc(lay.negative_qp(s), lay.negative_q(s), +1);
        g.add_arc(lay.negative_q(s), lay.collector(s), +1);
    }
    return g;
}

namespace {

// Topological sort of the strong graph minus {chain(0), q, t}, opening with
// both literals of the first variable.
Word strong_inner_word(const ReductionLayout& lay) {
    Word u;
    for (int r = 1; r <= lay.n; ++r) {
        u.push_back(lay.lit_pos(r));
        u.push_back(lay.lit_neg(r));
        u.push_back(lay.chain(r));
    }
    for (int s = 1; s <= lay.m; ++s) u.push_back(lay.clause_aux(s));
    for (int s = 1; s <= lay.m; ++s) u.push_back(lay.clause_main(s));
    for (int s = lay.m; s >= 1; --s) u.push_back(lay.collector(s));
    return u;
}

}  // namespace

Word strong_universal_word(const Cnf3& psi) {
    ReductionLayout lay = reduction_layout(psi);
    Word u = strong_inner_word(lay);
    Word v{lay.strong_q(), lay.strong_t()};
    v.insert(v.end(), u.begin(), u.end());
    Word w{lay.chain(0)};
    w.insert(w.end(), u.begin(), u.end());
    w.push_back(lay.strong_t());
    w.push_back(lay.chain(0));
    w.push_back(lay.lit_pos(1));
    w.push_back(lay.lit_neg(1));
    w.push_back(lay.strong_t());
    w.insert(w.end(), u.begin() + 2, u.end());
    w.push_back(lay.chain(0));
    w.push_back(lay.strong_q());

    Word big = v;
    big.push_back(lay.chain(0));
    big.insert(big.end(), v.begin(), v.end());
    big.insert(big.end(), w.begin(), w.end());
    if (big.size() != static_cast<std::size_t>(4 * lay.strong_size() - 1))
        throw std::logic_error("universal word has the wrong length");
    return big;
}

namespace {

struct PartitionMasks {
    Config sat_literals = 0;    // literals satisfied by the assignment
    Config unsat_literals = 0;  // literals falsified by the assignment
    Config aux_sat = 0;         // clause_aux vertices with a satisfied in-literal
};

PartitionMasks partition_masks(const Cnf3& psi, const std::vector<bool>& assignment,
                               const ReductionLayout& lay) {
    PartitionMasks pm;
    for (int r = 1; r <= lay.n; ++r) {
        if (assignment[r - 1]) {
            pm.sat_literals |= Config{1} << lay.lit_pos(r);
            pm.unsat_literals |= Config{1} << lay.lit_neg(r);
        } else {
            pm.sat_literals |= Config{1} << lay.lit_neg(r);
            pm.unsat_literals |= Config{1} << lay.lit_pos(r);
        }
    }
    for (int s = 1; s <= lay.m; ++s) {
        const auto& cl = psi.clauses[s - 1];
        for (int k = 0; k < 2; ++k)
            if ((pm.sat_literals >> lay.lit(cl[k])) & 1)
                pm.aux_sat |= Config{1} << lay.clause_aux(s);
    }
    return pm;
}

}  // namespace

AndOrNet strong_witness_net(const Cnf3& psi, const std::vector<bool>& assignment) {
    if (!psi.satisfied_by(assignment))
        throw std::invalid_argument("witness requires a satisfying assignment");
    ReductionLayout lay = reduction_layout(psi);
    SignedDigraph g = strong_reduction_graph(psi);
    PartitionMasks pm = partition_masks(psi, assignment, lay);
    std::vector<GateKind> gates(lay.strong_size(), GateKind::Conjunction);
    auto set_disj = [&](int v) { gates[v] = GateKind::Disjunction; };
    for (int v = 0; v < lay.strong_size(); ++v)
        if ((pm.sat_literals >> v) & 1) set_disj(v);
    for (int s = 1; s <= lay.m; ++s) {
        set_disj(lay.clause_aux(s));
        set_disj(lay.clause_main(s));
        set_disj(lay.collector(s));
    }
    set_disj(lay.strong_t());
    return AndOrNet(g, gates);
}

std::pair<Config, Config> strong_witness_fixed_points(const Cnf3& psi,
                                                      const std::vector<bool>& assignment) {
    ReductionLayout lay = reduction_layout(psi);
    PartitionMasks pm = partition_masks(psi, assignment, lay);
    Config ones = pm.sat_literals | pm.aux_sat;
    for (int s = 1; s <= lay.m; ++s) ones |= Config{1} << lay.clause_main(s);
    Config x = ones | (Config{1} << lay.strong_q()) | (Config{1} << lay.strong_t());
    Config y = ((Config{1} << lay.strong_size()) - 1) & ~(Config{1} << lay.strong_q());
    return {x, y};
}

AndOrNet negative_witness_net(const Cnf3& psi, const std::vector<bool>& assignment) {
    if (!psi.satisfied_by(assignment))
        throw std::invalid_argument("witness requires a satisfying assignment");
    ReductionLayout lay = reduction_layout(psi);
    SignedDigraph g = negative_reduction_graph(psi);
    PartitionMasks pm = partition_masks(psi, assignment, lay);
    std::vector<GateKind> gates(lay.negative_size(), GateKind::Conjunction);
    for (int v = 0; v < lay.negative_size(); ++v)
        if ((pm.sat_literals >> v) & 1) gates[v] = GateKind::Disjunction;
    for (int s = 1; s <= lay.m; ++s) {
        gates[lay.clause_aux(s)] = GateKind::Disjunction;
        gates[lay.clause_main(s)] = GateKind::Disjunction;
    }
    gates[lay.negative_t()] = GateKind::Const1;
    return AndOrNet(g, gates);
}

bool negative_witness_invariant_check(const Cnf3& psi, const std::vector<bool>& assignment) {
    ReductionLayout lay = reduction_layout(psi);
    if (lay.negative_size() > 28) throw std::invalid_argument("formula too large for the check");
    AndOrNet f = negative_witness_net(psi, assignment);
    PartitionMasks pm = partition_masks(psi, assignment, lay);

    Config I = (Config{1} << lay.negative_t()) | pm.sat_literals | pm.aux_sat;
    for (int s = 1; s <= lay.m; ++s) {
        I |= Config{1} << lay.clause_main(s);
        I |= Config{1} << lay.negative_q(s);
        I |= Config{1} << lay.negative_qp(s);
    }
    // J is the unique cycle of the graph: the chain, the falsified literals and
    // the collectors.  An aux vertex whose clause is satisfied only through the
    // literal feeding the main vertex directly lies in neither I nor J; it is a
    // free coordinate on which the two trajectories may agree or disagree.
    Config J = pm.unsat_literals;
    for (int k = 0; k <= lay.n; ++k) J |= Config{1} << lay.chain(k);
    for (int s = 1; s <= lay.m; ++s) J |= Config{1} << lay.collector(s);

    // Enumerate all pairs (x, y) with x_I = y_I = 1 and x, y opposite on J;
    // the bits outside I and J vary independently on both sides.
    std::vector<int> jbits, freebits;
    Config all = (Config{1} << lay.negative_size()) - 1;
    for (int v = 0; v < lay.negative_size(); ++v) {
        if ((J >> v) & 1) jbits.push_back(v);
        else if (!((I >> v) & 1)) freebits.push_back(v);
    }
    for (std::uint32_t sub = 0; sub < (1u << jbits.size()); ++sub) {
        Config xj = 0;
        for (std::size_t k = 0; k < jbits.size(); ++k)
            if ((sub >> k) & 1) xj |= Config{1} << jbits[k];
        for (std::uint32_t fx = 0; fx < (1u << freebits.size()); ++fx)
            for (std::uint32_t fy = 0; fy < (1u << freebits.size()); ++fy) {
                Config x = I | xj, y = I | (J & ~xj);
                for (std::size_t k = 0; k < freebits.size(); ++k) {
                    if ((fx >> k) & 1) x |= Config{1} << freebits[k];
                    if ((fy >> k) & 1) y |= Config{1} << freebits[k];
                }
                for (int i = 0; i < lay.negative_size(); ++i) {
                    Config xi = f.async_step(i, x) & all, yi = f.async_step(i, y) & all;
                    if ((xi & I) != I || (yi & I) != I) return false;
                    if (((xi ^ yi) & J) != J) return false;
                }
            }
    }
    return true;
}

namespace {

// Unique fixed point of the strong-graph network with chain(0) forced to a.
Config forced_fixed_point(const AndOrNet& f, const ReductionLayout& lay, bool a) {
    Config x = a ? (Config{1} << lay.chain(0)) : 0;
    Word order{lay.strong_q(), lay.strong_t()};
    Word inner = strong_inner_word(lay);
    order.insert(order.end(), inner.begin(), inner.end());
    for (int i : order) {
        Config bit = Config{1} << i;
        x = f.component(i, x) ? (x | bit) : (x & ~bit);
    }
    return x;
}

}  // namespace

EquivalenceReport equivalence_check(const Cnf3& psi, int full_check_sample, unsigned seed) {
    EquivalenceReport rep;
    auto model = sat_solve(psi);
    rep.satisfiable = model.has_value();
    if (model) {
        rep.assignment = *model;
        AndOrNet wf = strong_witness_net(psi, *model);
        auto [x, y] = strong_witness_fixed_points(psi, *model);
        bool fx = true, fy = true;
        for (int i = 0; i < wf.size(); ++i) {
            if (wf.component(i, x) != (((x >> i) & 1) != 0)) fx = false;
            if (wf.component(i, y) != (((y >> i) & 1) != 0)) fy = false;
        }
        rep.strong_witness_valid = fx && fy && x != y;
        rep.negative_witness_valid = negative_witness_invariant_check(psi, *model);
    }

    ReductionLayout lay = reduction_layout(psi);
    SignedDigraph g = strong_reduction_graph(psi);
    std::vector<int> free_vertices;
    for (int v = 0; v < g.size(); ++v)
        if (g.in_degree(v) >= 2) free_vertices.push_back(v);
    if (free_vertices.size() > 20)
        throw std::invalid_argument("formula too large for network enumeration");

    Word u = strong_inner_word(lay);
    Word tail{lay.chain(0), lay.strong_q(), lay.strong_t()};
    tail.insert(tail.end(), u.begin(), u.end());
    {
        // tail = chain(0), v; the universal word merges all configurations
        // exactly when it merges the two forced fixed points, checked below
        // through the suffix chain(0), v, w.
        Word wsuffix{lay.chain(0)};
        wsuffix.insert(wsuffix.end(), u.begin(), u.end());
        wsuffix.push_back(lay.strong_t());
        wsuffix.push_back(lay.chain(0));
        wsuffix.push_back(lay.lit_pos(1));
        wsuffix.push_back(lay.lit_neg(1));
        wsuffix.push_back(lay.strong_t());
        wsuffix.insert(wsuffix.end(), u.begin() + 2, u.end());
        wsuffix.push_back(lay.chain(0));
        wsuffix.push_back(lay.strong_q());
        tail.insert(tail.end(), wsuffix.begin(), wsuffix.end());
    }

    std::mt19937 rng(seed);
    std::uint32_t total_nets = std::uint32_t{1} << free_vertices.size();
    std::uniform_int_distribution<std::uint32_t> pick(0, total_nets - 1);
    std::vector<std::uint32_t> full_checks;
    for (int k = 0; k < full_check_sample; ++k) full_checks.push_back(pick(rng));
    std::sort(full_checks.begin(), full_checks.end());

    bool all_agree = true;
    bool witness_found = false;
    for (std::uint32_t code = 0; code < total_nets; ++code) {
        std::vector<GateKind> gates(g.size(), GateKind::Conjunction);
        for (std::size_t k = 0; k < free_vertices.size(); ++k)
            if ((code >> k) & 1) gates[free_vertices[k]] = GateKind::Disjunction;
        AndOrNet f(g, gates);
        Config x = forced_fixed_point(f, lay, false);
        Config y = forced_fixed_point(f, lay, true);
        bool fx = f.component(lay.chain(0), x) == (((x >> lay.chain(0)) & 1) != 0);
        bool fy = f.component(lay.chain(0), y) == (((y >> lay.chain(0)) & 1) != 0);
        bool two_fixed_points = fx && fy && x != y;
        bool merged = f.apply_word(tail, x) == f.apply_word(tail, y);
        if (two_fixed_points) witness_found = true;
        // A network with at most one fixed point must be synchronized by the
        // universal word; a network with two fixed points never is.
        if (!two_fixed_points && !merged) all_agree = false;
        if (two_fixed_points && merged) all_agree = false;
        if (std::binary_search(full_checks.begin(), full_checks.end(), code) &&
            g.size() <= kMaxVertices) {
            Word big = strong_universal_word(psi);
            StateSet image = apply_word_set(f, big, StateSet::full(g.size()));
            if ((image.count() == 1) != merged) all_agree = false;
        }
        ++rep.strong_nets_checked;
    }
    if (rep.satisfiable != witness_found) all_agree = false;
    rep.strong_all_nets_agree = all_agree;
    rep.consistent = rep.satisfiable
                         ? (rep.strong_witness_valid && rep.negative_witness_valid && all_agree)
                         : all_agree;
    return rep;
}

}  // namespace bnsync
