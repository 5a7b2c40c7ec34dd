#include "bnsync/construct.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "bnsync/syncdet.hpp"

namespace bnsync {

std::uint64_t fib(int k) {
    if (k < 1) throw std::invalid_argument("fib index starts at 1");
    std::uint64_t a = 1, b = 1;
    for (int t = 2; t < k; ++t) {
        std::uint64_t c = a + b;
        a = b;
        b = c;
    }
    return k == 1 ? 1 : b;
}

std::uint64_t flip_budget(int n) { return fib(n + 2) - 1; }
std::uint64_t fix_zero_budget(int n) { return 2 * fib(n + 2); }
std::uint64_t pair_sync_budget(int n) { return 3 * fib(n + 4) - 3; }
std::uint64_t global_sync_budget(int n) {
    return pair_sync_budget(n) * ((std::uint64_t{1} << n) - 1);
}
std::uint64_t fast_sync_budget(int n, bool has_loop) {
    if (has_loop) return 7ull * n;
    return std::uint64_t(n) + 5ull * n * ((std::uint64_t{1} << (n / 2)) - 1);
}

namespace {

bool bit(Config x, int i) { return (x >> i) & 1; }

// Drop letters whose application leaves the configuration unchanged and stop
// right after the first change of component i. Throws if i never changes.
Word settle_flip(const BooleanNetwork& f, Config x, const Word& w, int i) {
    Word out;
    Config cur = x;
    for (int letter : w) {
        Config next = f.async_step(letter, cur);
        if (next == cur) continue;
        out.push_back(letter);
        cur = next;
        if (bit(cur, i) != bit(x, i)) return out;
    }
    throw std::logic_error("flip construction failed to change the target component");
}

int local_index(const RestrictedNet& r, int vertex) {
    auto it = std::lower_bound(r.vertices.begin(), r.vertices.end(), vertex);
    if (it == r.vertices.end() || *it != vertex)
        throw std::logic_error("vertex not present in restricted network");
    return static_cast<int>(it - r.vertices.begin());
}

std::vector<char> reachable_from(const SignedDigraph& g, int start) {
    std::vector<char> seen(g.size(), 0);
    seen[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Arc& a : g.arcs())
            if (a.src == v && !seen[a.dst]) {
                seen[a.dst] = 1;
                stack.push_back(a.dst);
            }
    }
    return seen;
}

}  // namespace

Canalization maximal_canalizing_word(const BooleanNetwork& f, int i, bool a) {
    const int n = f.size();
    if (i < 0 || i >= n) throw std::invalid_argument("vertex out of range");
    // Images of the slice {x : x_i = a} under the word built so far.
    std::vector<Config> images;
    for (Config x = 0; x < (Config{1} << n); ++x)
        if (bit(x, i) == a) images.push_back(x);
    Canalization c;
    c.values = 0;
    Config canalized_mask = 0;
    while (true) {
        int pick = -1;
        bool pick_value = false;
        for (int j = 0; j < n && pick < 0; ++j) {
            if (j == i || bit(canalized_mask, j)) continue;
            bool value = f.component(j, images.front());
            bool constant = true;
            for (Config y : images)
                if (f.component(j, y) != value) {
                    constant = false;
                    break;
                }
            if (constant) {
                pick = j;
                pick_value = value;
            }
        }
        if (pick < 0) break;
        c.word.push_back(pick);
        canalized_mask |= Config{1} << pick;
        if (pick_value) c.values |= Config{1} << pick;
        for (Config& y : images) y = f.async_step(pick, y);
    }
    for (int j = 0; j < n; ++j)
        if (bit(canalized_mask, j)) c.canalized.push_back(j);
    return c;
}

Canalization longest_canalizing_word(const BooleanNetwork& f, int i, bool a) {
    const int n = f.size();
    if (n > 4) throw std::invalid_argument("exhaustive canalizing search limited to n <= 4");
    std::vector<Config> slice;
    for (Config x = 0; x < (Config{1} << n); ++x)
        if (bit(x, i) == a) slice.push_back(x);
    Canalization best;
    // DFS over repeat-free words; a prefix that is not canalizing cannot be
    // extended to a canalizing word with the same letter set, but letters can
    // become constant later, so explore all repeat-free words.
    std::function<void(Word&, std::vector<Config>&, Config, Config)> dfs =
        [&](Word& word, std::vector<Config>& images, Config mask, Config values) {
            // Check whether the current word canalizes every letter.
            bool ok = true;
            Config vals = 0;
            for (int j : word) {
                bool first = bit(images.front(), j);
                for (Config y : images)
                    if (bit(y, j) != first) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
                if (first) vals |= Config{1} << j;
            }
            if (ok && word.size() > best.word.size()) {
                best.word = word;
                best.values = vals;
                best.canalized.clear();
                for (int j = 0; j < n; ++j)
                    if (bit(mask, j)) best.canalized.push_back(j);
            }
            for (int j = 0; j < n; ++j) {
                if (j == i || bit(mask, j)) continue;
                std::vector<Config> next = images;
                for (Config& y : next) y = f.async_step(j, y);
                word.push_back(j);
                dfs(word, next, mask | (Config{1} << j), values);
                word.pop_back();
            }
        };
    Word word;
    dfs(word, slice, 0, 0);
    return best;
}

bool diffusion_check(const BooleanNetwork& f, int i, bool a, const Canalization& c) {
    SignedDigraph g = interaction_digraph(f);
    for (int j : c.canalized)
        if (g.in_degree(j) == 0)
            throw std::invalid_argument("diffusion check requires no sources among canalized vertices");
    Config inner = 0;
    for (int j : c.canalized) inner |= Config{1} << j;
    for (int j : c.canalized) {
        // Walk search from i to j, internal vertices canalized, tracked sign.
        int want = (a == bit(c.values, j)) ? +1 : -1;
        std::vector<std::vector<char>> seen(2, std::vector<char>(g.size(), 0));
        std::vector<std::pair<int, int>> stack{{i, +1}};
        seen[1][i] = 1;
        bool found = false;
        while (!stack.empty() && !found) {
            auto [v, sign] = stack.back();
            stack.pop_back();
            for (const Arc& arc : g.arcs()) {
                if (arc.src != v) continue;
                int s = sign * arc.sign;
                if (arc.dst == j && s == want) {
                    found = true;
                    break;
                }
                if (arc.dst != j && bit(inner, arc.dst) && !seen[(s + 1) / 2][arc.dst]) {
                    seen[(s + 1) / 2][arc.dst] = 1;
                    stack.emplace_back(arc.dst, s);
                }
            }
        }
        if (!found) return false;
    }
    return true;
}

namespace {

Word flip_vertex_raw(const BooleanNetwork& f, Config x, int i);

// Shortest word changing coordinate i starting from x, by breadth-first
// search over the asynchronous automaton.
Word bfs_flip(const BooleanNetwork& f, Config x, int i) {
    const int n = f.size();
    const Config count = Config{1} << n;
    std::vector<int> prev_cfg(count, -1), prev_letter(count, -1);
    std::vector<Config> queue{x};
    prev_cfg[x] = static_cast<int>(x);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Config c = queue[qi];
        for (int letter = 0; letter < n; ++letter) {
            Config d = f.async_step(letter, c);
            if (prev_cfg[d] >= 0 && d != x) continue;
            if (d == x && bit(d, i) == bit(x, i)) continue;
            prev_cfg[d] = static_cast<int>(c);
            prev_letter[d] = letter;
            if (bit(d, i) != bit(x, i)) {
                Word w;
                Config e = d;
                while (true) {
                    w.push_back(prev_letter[e]);
                    Config p = static_cast<Config>(prev_cfg[e]);
                    if (p == x) break;
                    e = p;
                }
                std::reverse(w.begin(), w.end());
                return w;
            }
            queue.push_back(d);
        }
    }
    throw std::logic_error("no word flips the target coordinate");
}

// Out-degree-zero case of the flip recursion.
Word flip_case_sink(const BooleanNetwork& f, const SignedDigraph& g, Config x, int i) {
    const int n = f.size();
    // Initial strong component from which i is reachable.
    std::vector<int> S;
    for (const StrongComponent& c : strong_components(g)) {
        if (!c.initial) continue;
        if (reachable_from(g, c.vertices.front())[i]) {
            S = c.vertices;
            break;
        }
    }
    if (S.empty()) throw std::logic_error("no initial component reaches the target vertex");
    int j = -1;
    bool positive_paths = false;
    for (int v : S) {
        PathSigns ps = forward_path_signs(g, v, i);
        if (!ps.mixed() && !ps.none()) {
            j = v;
            positive_paths = ps.has_positive;
            break;
        }
    }
    // Pinning a vertex can split its strong component, which may leave every
    // vertex of the initial component with forward paths of both signs to the
    // target even though the parent graph had a single-signed choice. No
    // single activator or inhibitor exists then, so fall back to a shortest
    // flip word found by search; the caller still enforces the length budget.
    if (j < 0) return bfs_flip(f, x, i);
    bool a = positive_paths ? !bit(x, i) : bit(x, i);

    Word word;
    if (bit(x, j) != a) {
        std::vector<int> frozen;
        for (int v = 0; v < n; ++v)
            if (std::find(S.begin(), S.end(), v) == S.end()) frozen.push_back(v);
        RestrictedNet r = clamp(f, frozen, x);
        Word u = flip_vertex_raw(r.net, r.restrict_config(x), local_index(r, j));
        word = r.lift_word(settle_flip(r.net, r.restrict_config(x), u, local_index(r, j)));
    }
    Config x1 = f.apply_word(word, x);
    if (bit(x1, j) != a) throw std::logic_error("flip recursion failed on the initial component");

    Canalization can = maximal_canalizing_word(f, j, a);
    Word vw = word;
    vw.insert(vw.end(), can.word.begin(), can.word.end());
    if (std::find(can.canalized.begin(), can.canalized.end(), i) != can.canalized.end()) return vw;

    std::vector<int> frozen = can.canalized;
    frozen.push_back(j);
    std::sort(frozen.begin(), frozen.end());
    Config values = can.values;
    if (a) values |= Config{1} << j;
    RestrictedNet r2 = clamp(f, frozen, values);
    Config x2 = f.apply_word(vw, x);
    Word w = flip_vertex_raw(r2.net, r2.restrict_config(x2), local_index(r2, i));
    Word lifted = r2.lift_word(settle_flip(r2.net, r2.restrict_config(x2), w, local_index(r2, i)));
    vw.insert(vw.end(), lifted.begin(), lifted.end());
    return vw;
}

Word flip_vertex_raw(const BooleanNetwork& f, Config x, int i) {
    SignedDigraph g = interaction_digraph(f);
    if (!sources(g).empty())
        throw std::invalid_argument("flip construction requires a source-free interaction digraph");
    if (g.out_degree(i) == 0) return flip_case_sink(f, g, x, i);

    bool a = bit(x, i);
    Canalization can = maximal_canalizing_word(f, i, a);
    Word trial = can.word;
    trial.push_back(i);
    if (bit(f.apply_word(trial, x), i) != a) return trial;

    RestrictedNet r = clamp(f, can.canalized, can.values, i, a);
    Config z = f.apply_word(can.word, x);
    Word w = flip_vertex_raw(r.net, r.restrict_config(z), local_index(r, i));
    Word lifted = r.lift_word(settle_flip(r.net, r.restrict_config(z), w, local_index(r, i)));
    Word out = can.word;
    out.insert(out.end(), lifted.begin(), lifted.end());
    return out;
}

}  // namespace

Word flip_vertex(const BooleanNetwork& f, Config x, int i) {
    Word w = settle_flip(f, x, flip_vertex_raw(f, x, i), i);
    if (w.size() > flip_budget(f.size()))
        throw std::logic_error("flip word exceeds its Fibonacci budget");
    return w;
}

Word unstable_word(const BooleanNetwork& f, Config x, int i) {
    SignedDigraph g = interaction_digraph(f);
    Config pos = 0, neg = 0;
    for (const Arc& a : g.arcs())
        if (a.dst == i) (a.sign > 0 ? pos : neg) |= Config{1} << a.src;
    if ((pos | neg) == 0) throw std::invalid_argument("unstable word requires in-neighbors");

    TableNet h(f);
    bool conj = !bit(x, i);
    for (Config y = 0; y < (Config{1} << f.size()); ++y) {
        bool value = conj ? ((y & pos) == pos && (y & neg) == 0)
                          : ((y & pos) != 0 || (~y & neg) != 0);
        h.set_component(i, y, value);
    }
    Word v = flip_vertex(h, x, i);
    if (v.empty() || v.back() != i) throw std::logic_error("flip word does not end with the target");
    v.pop_back();
    for (int letter : v)
        if (letter == i) throw std::logic_error("unexpected occurrence of the target vertex");
    Config y = f.apply_word(v, x);
    bool yi = bit(y, i);
    for (int j = 0; j < f.size(); ++j) {
        if (bit(pos, j) && bit(y, j) == yi) throw std::logic_error("configuration is not unstable");
        if (bit(neg, j) && bit(y, j) != yi) throw std::logic_error("configuration is not unstable");
    }
    return v;
}

Word fix_vertex_zero(const AndOrNet& f, Config x, Config y, int i) {
    for (GateKind gk : f.gates())
        if (gk == GateKind::Disjunction || gk == GateKind::Const0)
            throw std::invalid_argument("fix_vertex_zero requires an and-net");
    const SignedDigraph& g = f.graph();

    Word w;
    if (bit(x, i) || bit(y, i)) {
        if (!bit(x, i)) std::swap(x, y);
        int d = g.in_degree(i);
        if (d >= 2) {
            w = unstable_word(f, x, i);
            Config x1 = f.apply_word(w, x), y1 = f.apply_word(w, y);
            if (!f.component(i, y1)) {
                w.push_back(i);
            } else {
                if (f.component(i, x1)) throw std::logic_error("unstable configuration not absorbing");
                Config x2 = f.async_step(i, x1), y2 = f.async_step(i, y1);
                (void)x2;
                if (g.has_arc(i, i)) {
                    w.push_back(i);
                    w.push_back(i);
                } else {
                    Word v = flip_vertex(f, y2, i);
                    std::size_t cut = v.size();
                    for (std::size_t k = 0; k < v.size(); ++k)
                        if (g.has_arc(v[k], i)) {
                            cut = k + 1;
                            break;
                        }
                    if (cut >= v.size())
                        throw std::logic_error("flip word misses the in-neighborhood");
                    w.push_back(i);
                    w.insert(w.end(), v.begin(), v.begin() + cut);
                    w.push_back(i);
                }
            }
        } else if (d == 1) {
            // Walk back along in-degree-one vertices to a branching vertex.
            std::vector<int> path{i};
            int cur = i, sign = +1;
            while (g.in_degree(cur) == 1) {
                Arc a = g.in_arcs(cur).front();
                sign *= a.sign;
                if (std::find(path.begin(), path.end(), a.src) != path.end())
                    throw std::invalid_argument("target vertex lies on an initial cycle");
                path.push_back(a.src);
                cur = a.src;
            }
            if (g.in_degree(cur) == 0)
                throw std::invalid_argument("fix_vertex_zero requires a source-free graph");
            if (sign != +1)
                throw std::invalid_argument("path into the target vertex is not positive");
            std::reverse(path.begin(), path.end());
            w = fix_vertex_zero(f, x, y, path.front());
            w.insert(w.end(), path.begin() + 1, path.end());
        } else {
            throw std::invalid_argument("fix_vertex_zero requires a source-free graph");
        }
    }
    if (bit(f.apply_word(w, x), i) || bit(f.apply_word(w, y), i))
        throw std::logic_error("fix_vertex_zero postcondition failed");
    if (w.size() > fix_zero_budget(f.size()))
        throw std::logic_error("fix word exceeds its Fibonacci budget");
    return w;
}

namespace {

Config vertex_mask(const std::vector<int>& vs) {
    Config m = 0;
    for (int v : vs) m |= Config{1} << v;
    return m;
}

// The switch normalizing in-arcs of in-degree-one vertices outside initial
// cycles to positive.
std::vector<int> claim_normalization_switch(const SignedDigraph& g, Config initial_cycle_mask) {
    const int n = g.size();
    std::vector<char> in_U(n, 0);
    for (int v = 0; v < n; ++v)
        if (!bit(initial_cycle_mask, v) && g.in_degree(v) == 1) in_U[v] = 1;
    std::vector<int> sigma(n, 0);
    // Roots first (in-neighbor outside U), then propagate down the out-trees.
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
        if (!in_U[v]) continue;
        Arc a = g.in_arcs(v).front();
        if (!in_U[a.src]) {
            sigma[v] = a.sign;
            queue.push_back(v);
        }
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (const Arc& a : g.arcs())
            if (a.src == v && in_U[a.dst] && sigma[a.dst] == 0) {
                sigma[a.dst] = sigma[v] * a.sign;
                queue.push_back(a.dst);
            }
    }
    std::vector<int> J;
    for (int v = 0; v < n; ++v)
        if (sigma[v] == -1) J.push_back(v);
    return J;
}

struct ClaimContext {
    AndOrNet f;
    Config x, y;
};

// One cycle that is initial in g-minus-i but not in g: zero its vertices on
// both configurations.
Word flush_cycle(const AndOrNet& f, const std::vector<int>& cycle_order, Config& x, Config& y) {
    Word u(cycle_order.begin(), cycle_order.end());
    Config mask = vertex_mask(cycle_order);
    Config x1 = f.apply_word(u, x), y1 = f.apply_word(u, y);
    if ((x1 & mask) == 0 && (y1 & mask) == 0) {
        x = x1;
        y = y1;
        return u;
    }
    Word uu = u;
    uu.insert(uu.end(), u.begin(), u.end());
    x = f.apply_word(u, x1);
    y = f.apply_word(u, y1);
    if ((x & mask) != 0 || (y & mask) != 0)
        throw std::logic_error("cycle flush failed to zero the cycle");
    return uu;
}

Word claim_word(const AndOrNet& f_in, Config x_in, Config y_in) {
    AndOrNet f = f_in;
    Config x = x_in, y = y_in;
    if (x == y) return {};

    const int n = f.size();
    SignedDigraph g = f.graph();
    auto icomps = initial_cycles(g);
    Config I_mask = 0;
    for (const auto& c : icomps) I_mask |= vertex_mask(c.vertices);
    if ((x & I_mask) != (y & I_mask))
        throw std::invalid_argument("configurations disagree on an initial cycle");

    std::vector<int> J = claim_normalization_switch(g, I_mask);
    if (!J.empty()) {
        Config jm = vertex_mask(J);
        g = switch_graph(g, J);
        f = and_net(g);
        x ^= jm;
        y ^= jm;
    }

    // Terminal strong component that is not an initial cycle.
    std::vector<int> S;
    for (const StrongComponent& c : strong_components(g)) {
        if (!c.terminal) continue;
        bool is_initial_cycle = false;
        for (const auto& ic : icomps)
            if (ic.vertices == c.vertices) is_initial_cycle = true;
        if (!is_initial_cycle) {
            S = c.vertices;
            break;
        }
    }
    if (S.empty()) throw std::logic_error("no terminal component outside the initial cycles");
    int i = -1;
    for (int v : S) {
        // A terminal sink qualifies vacuously.
        bool all_negative = true;
        for (const Arc& a : g.arcs())
            if (a.src == v && a.sign > 0) all_negative = false;
        if (all_negative) {
            i = v;
            break;
        }
    }
    if (i < 0) throw std::logic_error("terminal component has no all-negative vertex");

    // Compact subgraph without i and its new initial cycles.
    std::vector<int> hverts;
    for (int v = 0; v < n; ++v)
        if (v != i) hverts.push_back(v);
    SignedDigraph h(n - 1);
    for (const Arc& a : g.arcs()) {
        if (a.src == i || a.dst == i) continue;
        int s = static_cast<int>(std::lower_bound(hverts.begin(), hverts.end(), a.src) - hverts.begin());
        int d = static_cast<int>(std::lower_bound(hverts.begin(), hverts.end(), a.dst) - hverts.begin());
        h.add_arc(s, d, a.sign);
    }
    Config K_mask = 0, J_mask = 0;
    std::vector<std::vector<int>> new_cycles;  // in full indices, cyclic order from the negative arc
    for (const StrongComponent& c : initial_cycles(h)) {
        std::vector<int> full;
        for (int v : c.vertices) full.push_back(hverts[v]);
        K_mask |= vertex_mask(full);
        bool was_initial = false;
        for (const auto& ic : icomps)
            if (ic.vertices == full) was_initial = true;
        if (was_initial) continue;
        J_mask |= vertex_mask(full);
        // Successor map along the cycle; start at the head of the unique
        // negative arc.
        int start = -1, negatives = 0;
        std::vector<int> succ(n, -1);
        for (const Arc& a : g.arcs()) {
            if (a.src == i || a.dst == i) continue;
            if (!bit(vertex_mask(full), a.src) || !bit(vertex_mask(full), a.dst)) continue;
            succ[a.src] = a.dst;
            if (a.sign < 0) {
                ++negatives;
                start = a.dst;
            }
        }
        if (negatives != 1) throw std::logic_error("new initial cycle lacks a unique negative arc");
        std::vector<int> order{start};
        for (int v = succ[start]; v != start; v = succ[v]) order.push_back(v);
        new_cycles.push_back(std::move(order));
    }
    std::sort(new_cycles.begin(), new_cycles.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
              });

    // Word zeroing i on both sides while the initial cycles of h agree.
    Word w;
    auto advance = [&](const Word& part) {
        x = f.apply_word(part, x);
        y = f.apply_word(part, y);
        w.insert(w.end(), part.begin(), part.end());
    };
    // Only arcs from the freshly created initial cycles matter for the case
    // split: those cycles get flushed to zero on both sides and their arc
    // into i is necessarily positive, so letter i then zeroes both sides.
    // Arcs from pre-existing initial cycles are harmless in the other branch,
    // since the flush only touches the new cycles and so never changes the
    // inputs of component i.
    bool arc_new_to_i = false;
    for (const Arc& a : g.arcs())
        if (a.dst == i && bit(J_mask, a.src)) arc_new_to_i = true;

    // A sink can be fed by a chain of in-degree-one vertices that starts on an
    // initial cycle, where both configurations already agree. Zeroing is then
    // neither possible nor needed: the sink has no out-arcs, so removing it
    // only requires the two sides to agree on it. Applying the chain letters
    // in order copies the agreed cycle value down to the sink.
    std::vector<int> cycle_chain;
    if (g.out_degree(i) == 0) {
        std::vector<int> walk{i};
        int cur = i;
        while (g.in_degree(cur) == 1) {
            int pred = -1;
            for (const Arc& a : g.arcs())
                if (a.dst == cur) pred = a.src;
            auto it = std::find(walk.begin(), walk.end(), pred);
            if (it != walk.end()) {
                for (auto rit = std::make_reverse_iterator(it); rit != walk.rend(); ++rit)
                    cycle_chain.push_back(*rit);
                break;
            }
            walk.push_back(pred);
            cur = pred;
        }
    }

    if (!cycle_chain.empty()) {
        advance(cycle_chain);
        if (bit(x, i) != bit(y, i))
            throw std::logic_error("chain from an initial cycle failed to equalize the sink");
    } else if (arc_new_to_i) {
        if (!bit(x, i)) advance(flip_vertex(f, x, i));
        for (const auto& cyc : new_cycles) {
            Word fw = flush_cycle(f, cyc, x, y);
            w.insert(w.end(), fw.begin(), fw.end());
        }
        advance({i});
    } else {
        // First raise the target to 1 on the x side, then zero it on both
        // sides, truncating the zeroing word at the first moment both sides
        // hold 0. The truncation starts after the raising word, where x
        // holds 1, and only letter i changes the coordinate, so the final
        // letter is i.
        Word u1 = bit(x, i) ? Word{} : flip_vertex(f, x, i);
        Config x1 = f.apply_word(u1, x), y1 = f.apply_word(u1, y);
        Word u2 = fix_vertex_zero(f, x1, y1, i);
        Word beta = u1;
        Config cx = x1, cy = y1;
        bool done = false;
        for (int letter : u2) {
            Config nx = f.async_step(letter, cx), ny = f.async_step(letter, cy);
            if (!bit(nx, i) && !bit(ny, i)) {
                if (letter != i) throw std::logic_error("truncation letter is not the target");
                done = true;
                break;
            }
            beta.push_back(letter);
            cx = nx;
            cy = ny;
        }
        if (!done) throw std::logic_error("fix word never zeroes both sides");
        advance(beta);
        if (!bit(x, i) && !bit(y, i))
            throw std::logic_error("both sides already zero before the final letter");
        for (const auto& cyc : new_cycles) {
            Word fw = flush_cycle(f, cyc, x, y);
            w.insert(w.end(), fw.begin(), fw.end());
        }
        advance({i});
    }
    if (cycle_chain.empty() && (bit(x, i) || bit(y, i)))
        throw std::logic_error("target vertex not zeroed on both sides");
    if (bit(x, i) != bit(y, i)) throw std::logic_error("target vertex disagrees");
    if ((x & K_mask) != (y & K_mask))
        throw std::logic_error("initial cycles of the reduced graph disagree");

    // Recurse on the reduced and-net. The removed vertex keeps an agreed
    // value (zero when it has out-arcs, so its negative out-arcs contribute
    // true literals) and no later letter touches it, so the word transports
    // unchanged.
    AndOrNet hnet = and_net(h);
    auto restrict_cfg = [&](Config full) {
        Config sub = 0;
        for (std::size_t k = 0; k < hverts.size(); ++k)
            if (bit(full, hverts[k])) sub |= Config{1} << k;
        return sub;
    };
    Word sub = claim_word(hnet, restrict_cfg(x), restrict_cfg(y));
    for (int letter : sub) w.push_back(hverts[letter]);
    return w;
}

void check_global_hypotheses(const SignedDigraph& g, bool allow_initial_cycles) {
    if (!sources(g).empty()) throw std::invalid_argument("graph has sources");
    if (cycle_sign_profile(g).has_positive()) throw std::invalid_argument("graph has a positive cycle");
    if (!is_homogeneous(g)) throw std::invalid_argument("graph is not homogeneous");
    if (!allow_initial_cycles && !initial_cycles(g).empty())
        throw std::invalid_argument("graph has an initial cycle");
}

}  // namespace

Word pair_sync(const AndOrNet& f, Config x, Config y) {
    check_global_hypotheses(f.graph(), false);
    std::vector<int> disj;
    for (int v = 0; v < f.size(); ++v)
        if (f.gates()[v] == GateKind::Disjunction) disj.push_back(v);
    AndOrNet fa = bn_switch(f, disj);
    Config m = vertex_mask(disj);
    Word w = claim_word(fa, x ^ m, y ^ m);
    if (f.apply_word(w, x) != f.apply_word(w, y))
        throw std::logic_error("pair synchronization postcondition failed");
    if (w.size() > pair_sync_budget(f.size()))
        throw std::logic_error("pair word exceeds its Fibonacci budget");
    return w;
}

Word global_sync_word(const AndOrNet& f) {
    const int n = f.size();
    if (n > 12) throw std::invalid_argument("global synchronization limited to n <= 12");
    check_global_hypotheses(f.graph(), false);
    Word w = synchronize_set(f, StateSet::full(n), global_sync_budget(n),
                             [&](const BooleanNetwork&, Config a, Config b) {
                                 return pair_sync(f, a, b);
                             });
    if (apply_word_set(f, w, StateSet::full(n)).count() != 1)
        throw std::logic_error("global synchronization postcondition failed");
    return w;
}

namespace {

// Machinery of the tree-based fast merge on the switched and-net.
struct FastContext {
    AndOrNet h;  // and-net on the switched graph
    int r = 0;
    std::vector<Arc> tree;
    Word u;  // topological sort of the tree minus the root
    int j = -1, k = -1;  // in-neighbors of r with no full-positive path j -> k

    const SignedDigraph& g() const { return h.graph(); }

    Word v_of(Config x) const {
        // Topological (tree) order of the 1-vertices except r.
        Word out;
        std::vector<int> order{r};
        for (std::size_t qi = 0; qi < order.size(); ++qi)
            for (const Arc& a : tree)
                if (a.src == order[qi]) order.push_back(a.dst);
        for (int v : order)
            if (v != r && bit(x, v)) out.push_back(v);
        return out;
    }

    bool full_positive_path(int from, int to, Config allowed) const {
        // Path over full-positive arcs with all vertices in `allowed`.
        if (!bit(allowed, from) || !bit(allowed, to)) return false;
        std::vector<char> seen(g().size(), 0);
        std::vector<int> stack{from};
        seen[from] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v == to) return true;
            for (const Arc& a : g().arcs())
                if (a.src == v && a.sign > 0 && bit(allowed, a.dst) && !seen[a.dst] &&
                    !g().has_arc(a.src, a.dst, -1)) {
                    seen[a.dst] = 1;
                    stack.push_back(a.dst);
                }
        }
        return false;
    }

    Word w_of(Config x, int target) const {
        // Greedy zero-path filling toward the in-neighbor `target` of r.
        Word out;
        if (!bit(x, r)) return out;
        Config cur = x;
        for (int guard = 0; guard <= g().size(); ++guard) {
            Config zeros = ~cur;
            if (bit(cur, target)) return out;
            int pick = -1;
            for (int i = 0; i < g().size() && pick < 0; ++i)
                if (!bit(cur, i) && full_positive_path(i, target, zeros) && h.component(i, cur))
                    pick = i;
            if (pick < 0) throw std::logic_error("greedy fill found no activatable vertex");
            out.push_back(pick);
            cur = h.async_step(pick, cur);
        }
        throw std::logic_error("greedy fill did not terminate");
    }

    // Word sending both configurations to the all-zero configuration.
    Word merge(Config x, Config y) const {
        auto cat = [](std::initializer_list<Word> parts) {
            Word out;
            for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
            return out;
        };
        if (!bit(x, r) && !bit(y, r)) return u;
        if (bit(x, r) && bit(y, r)) {
            Word vx = v_of(x);
            Config x1 = h.apply_word(vx, x), y1 = h.apply_word(vx, y);
            Word wj = w_of(x1, j);
            Config x2 = h.apply_word(wj, x1), y2 = h.apply_word(wj, y1);
            if (bit(y2, j)) return cat({vx, wj, {r}, u});
            Word vy = v_of(y2);
            Config x3 = h.apply_word(vy, x2), y3 = h.apply_word(vy, y2);
            (void)x3;
            Word wk = w_of(y3, k);
            return cat({vx, wj, vy, wk, {r}, u});
        }
        if (bit(x, r)) std::swap(x, y);  // now x_r = 0 < y_r = 1
        Config x1 = h.apply_word(u, x), y1 = h.apply_word(u, y);
        (void)x1;
        Word vy = v_of(y1);
        Config y2 = h.apply_word(vy, y1);
        Word wj = w_of(y2, j);
        Config x3 = h.apply_word(wj, h.apply_word(vy, x1));
        Config x4 = h.async_step(r, x3);
        Word wk = w_of(x4, k);
        return cat({u, vy, wj, {r}, wk, {r}, u});
    }
};

FastContext make_fast_context(const SignedDigraph& g) {
    const int n = g.size();
    if (!g.is_simple()) throw std::invalid_argument("fast synchronization requires a simple graph");
    if (!is_strong(g)) throw std::invalid_argument("fast synchronization requires a strong graph");
    if (is_cycle_graph(g)) throw std::invalid_argument("fast synchronization excludes cycle graphs");
    if (cycle_sign_profile(g).has_positive())
        throw std::invalid_argument("fast synchronization requires no positive cycles");

    FastContext ctx;
    ctx.r = -1;
    for (int v = 0; v < n && ctx.r < 0; ++v)
        if (g.has_arc(v, v)) ctx.r = v;
    if (ctx.r < 0)
        for (int v = 0; v < n && ctx.r < 0; ++v)
            if (g.in_degree(v) >= 2) ctx.r = v;
    if (ctx.r < 0) throw std::logic_error("no branching vertex found");

    std::vector<Arc> tree = spanning_out_tree(g, ctx.r);
    // Switch labels making the tree full-positive.
    std::vector<int> sigma(n, 0);
    sigma[ctx.r] = +1;
    std::vector<int> order{ctx.r};
    for (std::size_t qi = 0; qi < order.size(); ++qi)
        for (const Arc& a : tree)
            if (a.src == order[qi]) {
                sigma[a.dst] = sigma[a.src] * a.sign;
                order.push_back(a.dst);
            }
    std::vector<int> I;
    for (int v = 0; v < n; ++v)
        if (sigma[v] == -1) I.push_back(v);
    SignedDigraph g2 = switch_graph(g, I);
    ctx.h = and_net(g2);
    for (const Arc& a : g2.arcs())
        if (a.dst == ctx.r && a.sign > 0)
            throw std::logic_error("root keeps a positive in-neighbor after switching");
    for (const Arc& a : tree) ctx.tree.push_back({a.src, a.dst, +1});

    for (std::size_t qi = 1; qi < order.size(); ++qi) ctx.u.push_back(order[qi]);

    // The root counts as its own in-neighbor when it has a loop; no
    // full-positive path can end at the root since all its in-arcs are
    // negative, so (j, root) is always an admissible pair.
    std::vector<int> in_nbrs;
    for (const Arc& a : g2.arcs())
        if (a.dst == ctx.r) in_nbrs.push_back(a.src);
    std::sort(in_nbrs.begin(), in_nbrs.end());
    in_nbrs.erase(std::unique(in_nbrs.begin(), in_nbrs.end()), in_nbrs.end());
    Config all = (n == 32 ? ~Config{0} : (Config{1} << n) - 1);
    for (int a : in_nbrs) {
        for (int b : in_nbrs) {
            if (a == b) continue;
            FastContext probe = ctx;
            if (!probe.full_positive_path(a, b, all)) {
                ctx.j = a;
                ctx.k = b;
                break;
            }
        }
        if (ctx.j >= 0) break;
    }
    if (ctx.j < 0) throw std::logic_error("no in-neighbor pair without a full-positive path");
    // Record the switch set by re-deriving it when needed.
    return ctx;
}

}  // namespace

FastSync fast_sync(const SignedDigraph& g) {
    const int n = g.size();
    if (n > 16) throw std::invalid_argument("fast synchronization limited to n <= 16");
    FastContext ctx = make_fast_context(g);
    // Recover the switch set from the two graphs.
    std::vector<int> I;
    {
        std::vector<int> sigma(n, 0);
        sigma[ctx.r] = +1;
        std::vector<int> order{ctx.r};
        std::vector<Arc> tree = spanning_out_tree(g, ctx.r);
        for (std::size_t qi = 0; qi < order.size(); ++qi)
            for (const Arc& a : tree)
                if (a.src == order[qi]) {
                    sigma[a.dst] = sigma[a.src] * a.sign;
                    order.push_back(a.dst);
                }
        for (int v = 0; v < n; ++v)
            if (sigma[v] == -1) I.push_back(v);
    }

    bool has_loop = false;
    for (int v = 0; v < n; ++v)
        if (g.has_arc(v, v)) has_loop = true;

    Word word;
    if (has_loop) {
        Config z = ctx.h.apply_word(ctx.u, Config{1} << ctx.r);
        Word wm = ctx.merge(0, z);
        word = ctx.u;
        word.push_back(ctx.r);
        word.insert(word.end(), ctx.u.begin(), ctx.u.end());
        word.insert(word.end(), wm.begin(), wm.end());
    } else {
        Bipartition bip = acyclic_bipartition(g);
        if (2 * bip.I.size() > static_cast<std::size_t>(n))
            throw std::logic_error("acyclic bipartition is larger than half the vertices");
        Word ut = topological_sort(g, bip.I);
        StateSet image = apply_word_set(ctx.h, ut, StateSet::full(n));
        word = ut;
        while (image.count() > 1) {
            auto states = image.to_vector();
            Word wm = ctx.merge(states[0], states[1]);
            word.insert(word.end(), wm.begin(), wm.end());
            image = apply_word_set(ctx.h, wm, image);
        }
    }
    FastSync out{bn_switch(ctx.h, I), word};
    if (apply_word_set(out.net, word, StateSet::full(n)).count() != 1)
        throw std::logic_error("fast synchronization postcondition failed");
    if (word.size() > fast_sync_budget(n, has_loop))
        throw std::logic_error("fast word exceeds its budget");
    return out;
}

Word acyclic_word(const SignedDigraph& g, const std::vector<int>& I) {
    return topological_sort(g, I);
}

Word tau1_word(const SignedDigraph& g) {
    const int n = g.size();
    if (!is_strong(g)) throw std::invalid_argument("tau1 word requires a strong graph");
    if (cycle_sign_profile(g).has_positive())
        throw std::invalid_argument("tau1 word requires no positive cycles");
    auto cycles = simple_cycles(g);
    if (cycles.empty()) return acyclic_word(g);
    if (is_cycle_graph(g)) throw std::invalid_argument("tau1 word excludes cycle graphs");
    std::vector<int> fvs = min_feedback_vertex_set(g);
    if (fvs.size() != 1) throw std::invalid_argument("tau1 word requires tau <= 1");

    // Walk back along in-degree-one vertices to a branching vertex meeting
    // every cycle as well.
    int i = fvs.front();
    while (g.in_degree(i) == 1) {
        i = g.in_arcs(i).front().src;
        if (i == fvs.front()) throw std::logic_error("cycle walk during tau1 root selection");
    }
    if (g.in_degree(i) < 2) throw std::logic_error("no branching vertex meeting every cycle");

    // Switch to the normal form: in-arcs of i negative, everything else
    // positive.
    SignedDigraph gp = g;
    {
        std::vector<Arc> arcs;
        for (const Arc& a : g.arcs())
            arcs.push_back({a.src, a.dst, a.dst == i ? -a.sign : a.sign});
        gp = SignedDigraph(n, std::move(arcs));
    }
    auto I = harary_full_positive_switch(gp);
    if (!I) throw std::logic_error("sign-flipped graph is not switch-equivalent to full-positive");
    SignedDigraph hp = switch_graph(gp, *I);
    std::vector<Arc> harcs;
    for (const Arc& a : hp.arcs()) harcs.push_back({a.src, a.dst, a.dst == i ? -a.sign : a.sign});
    SignedDigraph h(n, std::move(harcs));
    if (h != switch_graph(g, *I)) throw std::logic_error("tau1 switch normalization failed");
    for (const Arc& a : h.arcs())
        if ((a.dst == i && a.sign > 0) || (a.dst != i && a.sign < 0))
            throw std::logic_error("tau1 normal form violated");

    Word u = topological_sort(h, {i});
    Word v;
    if (!h.has_arc(i, i)) {
        for (int letter : u) {
            v.push_back(letter);
            if (h.has_arc(letter, i)) break;
        }
        if (v.empty() || !h.has_arc(v.back(), i))
            throw std::logic_error("no in-neighbor of the root in the topological word");
    }
    Word w = u;
    w.push_back(i);
    w.insert(w.end(), v.begin(), v.end());
    w.push_back(i);
    w.insert(w.end(), u.begin(), u.end());
    if (w.size() > static_cast<std::size_t>(3 * n - 1))
        throw std::logic_error("tau1 word exceeds 3n - 1");
    return w;
}

Word unique_fp_permutation(const BooleanNetwork& f) {
    const int n = f.size();
    SignedDigraph g = interaction_digraph(f);
    CycleSignProfile p = cycle_sign_profile(g);
    if (p.has_positive() && p.has_negative())
        throw std::invalid_argument("interaction cycles carry both signs");
    if (fixed_points(f).size() != 1) throw std::invalid_argument("network needs a unique fixed point");

    if (n == 1) return {0};
    auto srcs = sources(g);
    if (srcs.empty()) throw std::logic_error("no source despite a unique fixed point");
    int i = srcs.front();
    bool a = f.component(i, 0);
    RestrictedNet r = clamp(f, {i}, a ? (Config{1} << i) : 0);
    Word sigma = unique_fp_permutation(r.net);
    Word pi{i};
    for (int letter : sigma) pi.push_back(r.vertices[letter]);
    return pi;
}

bool is_n_complete(const Word& w, int n) {
    if (n > 8) throw std::invalid_argument("permutation containment check limited to n <= 8");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        std::size_t pos = 0;
        for (int letter : w) {
            if (pos < perm.size() && letter == perm[pos]) ++pos;
        }
        if (pos < perm.size()) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

Word n_complete_word(int n) {
    Word w;
    for (int rep = 0; rep < n; ++rep)
        for (int v = 0; v < n; ++v) w.push_back(v);
    return w;
}

TableNet missing_permutation_counterexample(const Word& permutation, int n) {
    if (static_cast<int>(permutation.size()) != n)
        throw std::invalid_argument("expected a permutation of all vertices");
    TableNet f(n);
    for (Config x = 0; x < (Config{1} << n); ++x) {
        // First vertex of the permutation is constant 0; each later one
        // copies its predecessor.
        for (std::size_t k = 1; k < permutation.size(); ++k)
            if (bit(x, permutation[k - 1])) f.set_component(permutation[k], x, true);
    }
    return f;
}

SameSignReport same_sign_sync_check(const BooleanNetwork& f) {
    SameSignReport rep;
    SignedDigraph g = interaction_digraph(f);
    CycleSignProfile p = cycle_sign_profile(g);
    rep.cycles_all_positive = !p.has_negative();
    rep.cycles_all_negative = !p.has_positive();
    if (!rep.cycles_all_positive && !rep.cycles_all_negative)
        throw std::invalid_argument("interaction cycles carry both signs");
    rep.fixed_point_count = fixed_points(f).size();
    if (rep.fixed_point_count == 1) {
        rep.word = unique_fp_permutation(f);
        StateSet image = apply_word_set(f, *rep.word, StateSet::full(f.size()));
        rep.synchronizing = image.count() == 1;
        if (!rep.synchronizing) throw std::logic_error("permutation word failed to synchronize");
    } else {
        rep.synchronizing = false;  // two fixed points, or none with all-negative cycles
        if (rep.cycles_all_positive && rep.fixed_point_count >= 2) {
            // Distinct fixed points can never be merged.
        }
    }
    return rep;
}

TableNet majority_counterexample(const SignedDigraph& g) {
    const int n = g.size();
    if (!g.is_simple()) throw std::invalid_argument("majority net requires a simple graph");
    for (int v = 0; v < n; ++v) {
        int d = g.in_degree(v);
        if (d == 0 || d == 2)
            throw std::invalid_argument("majority net requires in-degrees other than 0 and 2");
    }
    TableNet f(n);
    for (int i = 0; i < n; ++i) {
        auto in = g.in_arcs(i);
        int d = static_cast<int>(in.size());
        int phi = in.front().src;
        int phi_sign = in.front().sign;
        for (Config x = 0; x < (Config{1} << n); ++x) {
            int satisfied = 0;
            for (const Arc& a : in)
                if (bit(x, a.src) == (a.sign > 0)) ++satisfied;
            bool value;
            if (2 * satisfied > d)
                value = true;
            else if (2 * satisfied < d)
                value = false;
            else
                value = bit(x, phi) == (phi_sign > 0);
            if (value) f.set_component(i, x, true);
        }
    }
    return f;
}

}  // namespace bnsync
