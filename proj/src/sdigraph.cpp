#include "bnsync/sdigraph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace bnsync {

namespace {

void check_vertex(int n, int v) {
    if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
}

std::vector<char> in_set(int n, const std::vector<int>& vs) {
    std::vector<char> m(n, 0);
    for (int v : vs) {
        check_vertex(n, v);
        m[v] = 1;
    }
    return m;
}

}  // namespace

SignedDigraph::SignedDigraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    for (const Arc& a : arcs_) {
        check_vertex(n_, a.src);
        check_vertex(n_, a.dst);
        if (a.sign != 1 && a.sign != -1) throw std::invalid_argument("arc sign must be +1 or -1");
    }
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
}

bool SignedDigraph::has_arc(int src, int dst, int sign) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{src, dst, sign});
}

bool SignedDigraph::has_arc(int src, int dst) const {
    return has_arc(src, dst, +1) || has_arc(src, dst, -1);
}

void SignedDigraph::add_arc(int src, int dst, int sign) {
    check_vertex(n_, src);
    check_vertex(n_, dst);
    if (sign != 1 && sign != -1) throw std::invalid_argument("arc sign must be +1 or -1");
    Arc a{src, dst, sign};
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
    if (it == arcs_.end() || *it != a) arcs_.insert(it, a);
}

std::vector<Arc> SignedDigraph::in_arcs(int v) const {
    std::vector<Arc> r;
    for (const Arc& a : arcs_)
        if (a.dst == v) r.push_back(a);
    return r;
}

std::vector<Arc> SignedDigraph::out_arcs(int v) const {
    std::vector<Arc> r;
    for (const Arc& a : arcs_)
        if (a.src == v) r.push_back(a);
    return r;
}

int SignedDigraph::in_degree(int v) const {
    int d = 0;
    for (const Arc& a : arcs_)
        if (a.dst == v) ++d;
    return d;
}

int SignedDigraph::out_degree(int v) const {
    int d = 0;
    for (const Arc& a : arcs_)
        if (a.src == v) ++d;
    return d;
}

bool SignedDigraph::is_simple() const {
    for (const Arc& a : arcs_)
        if (a.sign == -1 && has_arc(a.src, a.dst, +1)) return false;
    return true;
}

std::vector<StrongComponent> strong_components(const SignedDigraph& g) {
    const int n = g.size();
    std::vector<std::vector<int>> adj(n);
    for (const Arc& a : g.arcs())
        if (std::find(adj[a.src].begin(), adj[a.src].end(), a.dst) == adj[a.src].end())
            adj[a.src].push_back(a.dst);

    // Tarjan
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    int next_index = 0, comp_count = 0;
    std::function<void(int)> dfs = [&](int v) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = 1;
        for (int w : adj[v]) {
            if (index[w] < 0) {
                dfs(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            while (true) {
                int w = stack.back();
                stack.pop_back();
                on_stack[w] = 0;
                comp[w] = comp_count;
                if (w == v) break;
            }
            ++comp_count;
        }
    };
    for (int v = 0; v < n; ++v)
        if (index[v] < 0) dfs(v);

    std::vector<StrongComponent> comps(comp_count);
    for (int v = 0; v < n; ++v) comps[comp[v]].vertices.push_back(v);
    for (auto& c : comps) {
        std::sort(c.vertices.begin(), c.vertices.end());
        c.initial = c.terminal = true;
        c.trivial = c.vertices.size() == 1;
    }
    for (const Arc& a : g.arcs()) {
        if (comp[a.src] != comp[a.dst]) {
            comps[comp[a.dst]].initial = false;
            comps[comp[a.src]].terminal = false;
        } else if (a.src == a.dst) {
            comps[comp[a.src]].trivial = false;
        }
    }
    std::sort(comps.begin(), comps.end(), [](const StrongComponent& a, const StrongComponent& b) {
        return a.vertices.front() < b.vertices.front();
    });
    return comps;
}

bool is_strong(const SignedDigraph& g) {
    return g.size() > 0 && strong_components(g).size() == 1;
}

std::vector<Cycle> simple_cycles(const SignedDigraph& g) {
    const int n = g.size();
    std::vector<Cycle> out;
    std::vector<char> blocked(n, 0);
    std::vector<int> path;
    int path_sign = +1;
    int start = 0;
    std::function<void(int)> dfs = [&](int v) {
        for (const Arc& a : g.arcs()) {
            if (a.src != v) continue;
            if (a.dst == start) {
                Cycle c;
                c.vertices = path;
                c.sign = path_sign * a.sign;
                out.push_back(std::move(c));
            } else if (a.dst > start && !blocked[a.dst]) {
                blocked[a.dst] = 1;
                path.push_back(a.dst);
                path_sign *= a.sign;
                dfs(a.dst);
                path_sign *= a.sign;
                path.pop_back();
                blocked[a.dst] = 0;
            }
        }
    };
    for (start = 0; start < n; ++start) {
        blocked.assign(n, 0);
        blocked[start] = 1;
        path = {start};
        path_sign = +1;
        dfs(start);
    }
    return out;
}

CycleSignProfile cycle_sign_profile(const SignedDigraph& g) {
    CycleSignProfile p;
    for (const Cycle& c : simple_cycles(g))
        (c.sign > 0 ? p.positive : p.negative)++;
    return p;
}

bool is_cycle_graph(const SignedDigraph& g) {
    const int n = g.size();
    if (n == 0 || static_cast<int>(g.arcs().size()) != n) return false;
    for (int v = 0; v < n; ++v)
        if (g.in_degree(v) != 1 || g.out_degree(v) != 1) return false;
    return is_strong(g);
}

SignedDigraph switch_graph(const SignedDigraph& g, const std::vector<int>& I) {
    auto in_I = in_set(g.size(), I);
    std::vector<Arc> arcs;
    arcs.reserve(g.arcs().size());
    for (const Arc& a : g.arcs()) {
        int s = a.sign;
        if (in_I[a.src]) s = -s;
        if (in_I[a.dst]) s = -s;
        arcs.push_back({a.src, a.dst, s});
    }
    return SignedDigraph(g.size(), std::move(arcs));
}

std::optional<std::vector<int>> harary_full_positive_switch(const SignedDigraph& g) {
    const int n = g.size();
    // Sign-consistent 2-labelling of the symmetric closure, per weak component.
    std::vector<int> label(n, 0);  // 0 unset, else +1/-1
    for (int s = 0; s < n; ++s) {
        if (label[s] != 0) continue;
        label[s] = +1;
        std::vector<int> queue{s};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (const Arc& a : g.arcs()) {
                if (a.src != v && a.dst != v) continue;
                int w = a.src == v ? a.dst : a.src;
                int want = label[v] * a.sign;
                if (label[w] == 0) {
                    label[w] = want;
                    queue.push_back(w);
                } else if (label[w] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<int> I;
    for (int v = 0; v < n; ++v)
        if (label[v] == -1) I.push_back(v);
    return I;
}

PathSigns forward_path_signs(const SignedDigraph& g, int src, int dst) {
    const int n = g.size();
    check_vertex(n, src);
    check_vertex(n, dst);
    std::vector<int> comp(n);
    auto comps = strong_components(g);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c].vertices) comp[v] = static_cast<int>(c);

    PathSigns out;
    std::vector<char> on_path(n, 0);
    std::function<void(int, int)> dfs = [&](int v, int sign) {
        if (out.has_positive && out.has_negative) return;
        for (const Arc& a : g.arcs()) {
            if (a.src != v || on_path[a.dst]) continue;
            int s = sign * a.sign;
            if (a.dst == dst) {
                if (comp[a.src] != comp[a.dst]) (s > 0 ? out.has_positive : out.has_negative) = true;
                continue;
            }
            on_path[a.dst] = 1;
            dfs(a.dst, s);
            on_path[a.dst] = 0;
        }
    };
    on_path[src] = 1;
    if (src != dst) dfs(src, +1);
    return out;
}

bool is_i_homogeneous(const SignedDigraph& g, int i) {
    check_vertex(g.size(), i);
    for (const StrongComponent& c : strong_components(g)) {
        bool found = false;
        for (int j : c.vertices) {
            if (!forward_path_signs(g, j, i).mixed()) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

bool is_homogeneous(const SignedDigraph& g) {
    for (int i = 0; i < g.size(); ++i)
        if (!is_i_homogeneous(g, i)) return false;
    return true;
}

std::vector<StrongComponent> initial_cycles(const SignedDigraph& g) {
    std::vector<StrongComponent> out;
    for (const StrongComponent& c : strong_components(g)) {
        if (!c.initial) continue;
        std::vector<char> member = in_set(g.size(), c.vertices);
        int internal_arcs = 0;
        bool degrees_ok = true;
        for (int v : c.vertices) {
            int din = 0, dout = 0;
            for (const Arc& a : g.arcs()) {
                if (a.dst == v && member[a.src]) ++din;
                if (a.src == v && member[a.dst]) ++dout;
            }
            if (din != 1 || dout != 1) {
                degrees_ok = false;
                break;
            }
        }
        if (!degrees_ok) continue;
        for (const Arc& a : g.arcs())
            if (member[a.src] && member[a.dst]) ++internal_arcs;
        if (internal_arcs == static_cast<int>(c.vertices.size())) out.push_back(c);
    }
    return out;
}

std::vector<int> sources(const SignedDigraph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.size(); ++v)
        if (g.in_degree(v) == 0) out.push_back(v);
    return out;
}

namespace {

bool acyclic_without(const SignedDigraph& g, const std::vector<char>& removed) {
    const int n = g.size();
    std::vector<int> indeg(n, 0);
    for (const Arc& a : g.arcs())
        if (!removed[a.src] && !removed[a.dst] && !g.has_arc(a.src, a.dst, -a.sign))
            ++indeg[a.dst];
    // Count each (src,dst) once.
    std::vector<std::vector<int>> adj(n);
    indeg.assign(n, 0);
    for (const Arc& a : g.arcs()) {
        if (removed[a.src] || removed[a.dst]) continue;
        if (std::find(adj[a.src].begin(), adj[a.src].end(), a.dst) != adj[a.src].end()) continue;
        adj[a.src].push_back(a.dst);
        ++indeg[a.dst];
    }
    std::vector<int> queue;
    int seen = 0, total = 0;
    for (int v = 0; v < n; ++v) {
        if (removed[v]) continue;
        ++total;
        if (indeg[v] == 0) queue.push_back(v);
    }
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++seen;
        for (int w : adj[v])
            if (--indeg[w] == 0) queue.push_back(w);
    }
    return seen == total;
}

// Subsets of [n] in size order, lexicographic within a size.
template <typename F>
void for_subsets_size_order(int n, F&& f) {
    for (int k = 0; k <= n; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            if (f(idx)) return;
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
}

}  // namespace

std::vector<int> min_feedback_vertex_set(const SignedDigraph& g) {
    const int n = g.size();
    std::vector<int> result;
    bool found = false;
    for_subsets_size_order(n, [&](const std::vector<int>& subset) {
        std::vector<char> removed = in_set(n, subset);
        if (acyclic_without(g, removed)) {
            result = subset;
            found = true;
            return true;
        }
        return false;
    });
    if (!found) throw std::logic_error("feedback vertex set search failed");
    return result;
}

std::vector<Arc> spanning_out_tree(const SignedDigraph& g, int r) {
    const int n = g.size();
    check_vertex(n, r);
    std::vector<char> seen(n, 0);
    seen[r] = 1;
    std::vector<int> queue{r};
    std::vector<Arc> tree;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int w = 0; w < n; ++w) {
            if (seen[w] || !g.has_arc(v, w)) continue;
            int sign = g.has_arc(v, w, +1) ? +1 : -1;
            tree.push_back({v, w, sign});
            seen[w] = 1;
            queue.push_back(w);
        }
    }
    if (static_cast<int>(queue.size()) != n)
        throw std::invalid_argument("graph is not spanned from the given root");
    return tree;
}

std::vector<int> topological_sort(const SignedDigraph& g, const std::vector<int>& forbidden) {
    const int n = g.size();
    std::vector<char> removed = in_set(n, forbidden);
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> adj(n);
    for (const Arc& a : g.arcs()) {
        if (removed[a.src] || removed[a.dst]) continue;
        if (std::find(adj[a.src].begin(), adj[a.src].end(), a.dst) != adj[a.src].end()) continue;
        adj[a.src].push_back(a.dst);
        ++indeg[a.dst];
    }
    std::vector<int> order;
    std::vector<char> placed(n, 0);
    int remaining = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) ++remaining;
    while (static_cast<int>(order.size()) < remaining) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (!removed[v] && !placed[v] && indeg[v] == 0) {
                pick = v;
                break;
            }
        }
        if (pick < 0) throw std::invalid_argument("graph has a cycle outside the forbidden set");
        placed[pick] = 1;
        order.push_back(pick);
        for (int w : adj[pick]) --indeg[w];
    }
    return order;
}

Bipartition acyclic_bipartition(const SignedDigraph& g) {
    const int n = g.size();
    for (int v = 0; v < n; ++v)
        if (g.has_arc(v, v)) throw std::invalid_argument("acyclic_bipartition requires a loopless graph");
    Bipartition result;
    bool found = false;
    for_subsets_size_order(n, [&](const std::vector<int>& subset) {
        std::vector<char> in_I = in_set(n, subset);
        std::vector<char> in_J(n);
        for (int v = 0; v < n; ++v) in_J[v] = !in_I[v];
        if (acyclic_without(g, in_J) && acyclic_without(g, in_I)) {
            result.I = subset;
            for (int v = 0; v < n; ++v)
                if (!in_I[v]) result.J.push_back(v);
            found = true;
            return true;
        }
        return false;
    });
    if (!found) throw std::logic_error("acyclic bipartition search failed");
    return result;
}

SignedDigraph parse_sdg(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<Arc> arcs;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (n < 0) {
            if (first != "n") throw std::invalid_argument("sdg: expected 'n <count>' header");
            if (!(ls >> n) || n < 0) throw std::invalid_argument("sdg: bad vertex count");
            continue;
        }
        int j = 0, i = 0;
        std::string sign;
        std::istringstream as(line);
        if (!(as >> j >> i >> sign) || (sign != "+" && sign != "-"))
            throw std::invalid_argument("sdg: bad arc line: " + line);
        if (j < 1 || j > n || i < 1 || i > n) throw std::invalid_argument("sdg: vertex out of range");
        arcs.push_back({j - 1, i - 1, sign == "+" ? +1 : -1});
    }
    if (n < 0) throw std::invalid_argument("sdg: missing header");
    return SignedDigraph(n, std::move(arcs));
}

std::string to_sdg(const SignedDigraph& g) {
    std::ostringstream out;
    out << "n " << g.size() << "\n";
    for (const Arc& a : g.arcs())
        out << a.src + 1 << " " << a.dst + 1 << " " << (a.sign > 0 ? '+' : '-') << "\n";
    return out.str();
}

}  // namespace bnsync
