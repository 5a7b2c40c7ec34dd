#include "bnsync/bnet.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace bnsync {

namespace {

void check_state_space(int n, int cap = 20) {
    if (n > cap) throw std::invalid_argument("state-space operation limited to n <= " + std::to_string(cap));
}

}  // namespace

Config BooleanNetwork::eval(Config x) const {
    Config y = 0;
    for (int i = 0; i < size(); ++i)
        if (component(i, x)) y |= Config{1} << i;
    return y;
}

Config BooleanNetwork::async_step(int letter, Config x) const {
    if (letter < 0 || letter >= size()) return x;
    Config bit = Config{1} << letter;
    return component(letter, x) ? (x | bit) : (x & ~bit);
}

Config BooleanNetwork::apply_word(const Word& w, Config x) const {
    for (int letter : w) x = async_step(letter, x);
    return x;
}

AndOrNet::AndOrNet(SignedDigraph graph, std::vector<GateKind> gates)
    : graph_(std::move(graph)), gates_(std::move(gates)) {
    const int n = graph_.size();
    if (n > kMaxVertices) throw std::invalid_argument("too many vertices");
    if (static_cast<int>(gates_.size()) != n) throw std::invalid_argument("gate count mismatch");
    if (!graph_.is_simple()) throw std::invalid_argument("and-or-net requires a simple graph");
    pos_.assign(n, 0);
    neg_.assign(n, 0);
    for (const Arc& a : graph_.arcs())
        (a.sign > 0 ? pos_ : neg_)[a.dst] |= Config{1} << a.src;
    for (int i = 0; i < n; ++i) {
        bool has_inputs = (pos_[i] | neg_[i]) != 0;
        bool is_const = gates_[i] == GateKind::Const0 || gates_[i] == GateKind::Const1;
        if (has_inputs && is_const)
            throw std::invalid_argument("constant gate on a vertex with in-neighbors");
        if (!has_inputs && !is_const)
            throw std::invalid_argument("conjunction/disjunction gate on a vertex without in-neighbors");
    }
}

bool AndOrNet::component(int i, Config x) const {
    switch (gates_[i]) {
        case GateKind::Conjunction:
            return (x & pos_[i]) == pos_[i] && (x & neg_[i]) == 0;
        case GateKind::Disjunction:
            return (x & pos_[i]) != 0 || (~x & neg_[i]) != 0;
        case GateKind::Const0:
            return false;
        case GateKind::Const1:
            return true;
    }
    return false;
}

AndOrNet and_net(const SignedDigraph& g) {
    std::vector<GateKind> gates(g.size(), GateKind::Conjunction);
    for (int i = 0; i < g.size(); ++i)
        if (g.in_degree(i) == 0) gates[i] = GateKind::Const1;
    return AndOrNet(g, std::move(gates));
}

AndOrNet or_net(const SignedDigraph& g) {
    std::vector<GateKind> gates(g.size(), GateKind::Disjunction);
    for (int i = 0; i < g.size(); ++i)
        if (g.in_degree(i) == 0) gates[i] = GateKind::Const0;
    return AndOrNet(g, std::move(gates));
}

TableNet::TableNet(int n) : n_(n) {
    check_state_space(n);
    tables_.assign(n, std::vector<std::uint64_t>((std::size_t{1} << n) / 64 + 1, 0));
}

TableNet::TableNet(const BooleanNetwork& f) : TableNet(f.size()) {
    for (Config x = 0; x < (Config{1} << n_); ++x)
        for (int i = 0; i < n_; ++i)
            if (f.component(i, x)) set_component(i, x, true);
}

bool TableNet::component(int i, Config x) const {
    return (tables_[i][x / 64] >> (x % 64)) & 1;
}

void TableNet::set_component(int i, Config x, bool value) {
    if (value)
        tables_[i][x / 64] |= std::uint64_t{1} << (x % 64);
    else
        tables_[i][x / 64] &= ~(std::uint64_t{1} << (x % 64));
}

StateSet::StateSet(int n) : n_(n) {
    check_state_space(n);
    bits_.assign((std::size_t{1} << n) / 64 + 1, 0);
}

StateSet StateSet::full(int n) {
    StateSet s(n);
    for (Config x = 0; x < (Config{1} << n); ++x) s.insert(x);
    return s;
}

bool StateSet::contains(Config x) const { return (bits_[x / 64] >> (x % 64)) & 1; }

void StateSet::insert(Config x) { bits_[x / 64] |= std::uint64_t{1} << (x % 64); }

std::size_t StateSet::count() const {
    std::size_t c = 0;
    for (std::uint64_t b : bits_) c += static_cast<std::size_t>(__builtin_popcountll(b));
    return c;
}

std::vector<Config> StateSet::to_vector() const {
    std::vector<Config> out;
    for (Config x = 0; x < (Config{1} << n_); ++x)
        if (contains(x)) out.push_back(x);
    return out;
}

StateSet apply_word_set(const BooleanNetwork& f, const Word& w, const StateSet& xs) {
    StateSet out(xs.dimension());
    for (Config x : xs.to_vector()) out.insert(f.apply_word(w, x));
    return out;
}

SignedDigraph interaction_digraph(const BooleanNetwork& f) {
    const int n = f.size();
    check_state_space(n);
    SignedDigraph g(n);
    for (int j = 0; j < n; ++j) {
        Config bit = Config{1} << j;
        for (int i = 0; i < n; ++i) {
            bool pos = false, neg = false;
            for (Config x = 0; x < (Config{1} << n); ++x) {
                if (x & bit) continue;
                bool lo = f.component(i, x), hi = f.component(i, x | bit);
                if (lo != hi) (hi ? pos : neg) = true;
                if (pos && neg) break;
            }
            if (pos) g.add_arc(j, i, +1);
            if (neg) g.add_arc(j, i, -1);
        }
    }
    return g;
}

namespace {

Config mask_of(int n, const std::vector<int>& I) {
    Config m = 0;
    for (int v : I) {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
        m |= Config{1} << v;
    }
    return m;
}

}  // namespace

TableNet bn_switch(const BooleanNetwork& f, const std::vector<int>& I) {
    const int n = f.size();
    check_state_space(n);
    Config m = mask_of(n, I);
    TableNet h(n);
    for (Config x = 0; x < (Config{1} << n); ++x) {
        Config y = f.eval(x ^ m) ^ m;
        for (int i = 0; i < n; ++i)
            if ((y >> i) & 1) h.set_component(i, x, true);
    }
    return h;
}

AndOrNet bn_switch(const AndOrNet& f, const std::vector<int>& I) {
    Config m = mask_of(f.size(), I);
    std::vector<GateKind> gates = f.gates();
    for (int i = 0; i < f.size(); ++i) {
        if (!((m >> i) & 1)) continue;
        switch (gates[i]) {
            case GateKind::Conjunction: gates[i] = GateKind::Disjunction; break;
            case GateKind::Disjunction: gates[i] = GateKind::Conjunction; break;
            case GateKind::Const0: gates[i] = GateKind::Const1; break;
            case GateKind::Const1: gates[i] = GateKind::Const0; break;
        }
    }
    return AndOrNet(switch_graph(f.graph(), I), std::move(gates));
}

std::vector<Config> fixed_points(const BooleanNetwork& f) {
    check_state_space(f.size());
    std::vector<Config> out;
    for (Config x = 0; x < (Config{1} << f.size()); ++x)
        if (f.eval(x) == x) out.push_back(x);
    return out;
}

Config RestrictedNet::restrict_config(Config full) const {
    Config sub = 0;
    for (std::size_t k = 0; k < vertices.size(); ++k)
        if ((full >> vertices[k]) & 1) sub |= Config{1} << k;
    return sub;
}

Config RestrictedNet::extend_config(Config sub, Config fill) const {
    Config full = fill;
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        Config bit = Config{1} << vertices[k];
        if ((sub >> k) & 1)
            full |= bit;
        else
            full &= ~bit;
    }
    return full;
}

Word RestrictedNet::lift_word(const Word& w) const {
    Word out;
    out.reserve(w.size());
    for (int letter : w) out.push_back(vertices[letter]);
    return out;
}

RestrictedNet clamp(const BooleanNetwork& f, const std::vector<int>& frozen, Config values,
                    int override_vertex, bool override_value) {
    const int n = f.size();
    check_state_space(n);
    Config frozen_mask = mask_of(n, frozen);
    RestrictedNet r;
    for (int v = 0; v < n; ++v)
        if (!((frozen_mask >> v) & 1)) r.vertices.push_back(v);
    const int k = static_cast<int>(r.vertices.size());
    r.net = TableNet(k);
    Config override_bit = override_vertex >= 0 ? Config{1} << override_vertex : 0;
    for (Config y = 0; y < (Config{1} << k); ++y) {
        Config full = r.extend_config(y, values & frozen_mask);
        if (override_bit) full = override_value ? (full | override_bit) : (full & ~override_bit);
        for (int j = 0; j < k; ++j)
            if (f.component(r.vertices[j], full)) r.net.set_component(j, y, true);
    }
    return r;
}

std::vector<std::vector<Config>> asynchronous_terminal_components(const BooleanNetwork& f) {
    const int n = f.size();
    check_state_space(n);
    const Config N = Config{1} << n;
    // Tarjan over the asynchronous transition digraph.
    std::vector<int> index(N, -1), low(N, 0), comp(N, -1);
    std::vector<char> on_stack(N, 0);
    std::vector<Config> stack;
    int next_index = 0, comp_count = 0;
    std::function<void(Config)> dfs = [&](Config x) {
        index[x] = low[x] = next_index++;
        stack.push_back(x);
        on_stack[x] = 1;
        for (int i = 0; i < n; ++i) {
            Config y = f.async_step(i, x);
            if (index[y] < 0) {
                dfs(y);
                low[x] = std::min(low[x], low[y]);
            } else if (on_stack[y]) {
                low[x] = std::min(low[x], index[y]);
            }
        }
        if (low[x] == index[x]) {
            while (true) {
                Config y = stack.back();
                stack.pop_back();
                on_stack[y] = 0;
                comp[y] = comp_count;
                if (y == x) break;
            }
            ++comp_count;
        }
    };
    for (Config x = 0; x < N; ++x)
        if (index[x] < 0) dfs(x);

    std::vector<char> terminal(comp_count, 1);
    for (Config x = 0; x < N; ++x)
        for (int i = 0; i < n; ++i) {
            Config y = f.async_step(i, x);
            if (comp[x] != comp[y]) terminal[comp[x]] = 0;
        }
    std::vector<std::vector<Config>> out(comp_count);
    for (Config x = 0; x < N; ++x) out[comp[x]].push_back(x);
    std::vector<std::vector<Config>> terminals;
    for (int c = 0; c < comp_count; ++c)
        if (terminal[c]) terminals.push_back(std::move(out[c]));
    std::sort(terminals.begin(), terminals.end());
    return terminals;
}

std::vector<AndOrNet> enumerate_and_or_nets(const SignedDigraph& g) {
    if (!g.is_simple()) throw std::invalid_argument("and-or-nets require a simple graph");
    const int n = g.size();
    std::vector<int> free_gate;  // vertices with a genuine and/or choice
    std::vector<int> constant;   // vertices of in-degree 0
    for (int v = 0; v < n; ++v) {
        int d = g.in_degree(v);
        if (d == 0)
            constant.push_back(v);
        else if (d >= 2)
            free_gate.push_back(v);
    }
    std::vector<AndOrNet> out;
    const std::size_t gate_choices = std::size_t{1} << free_gate.size();
    const std::size_t const_choices = std::size_t{1} << constant.size();
    for (std::size_t cm = 0; cm < const_choices; ++cm) {
        for (std::size_t gm = 0; gm < gate_choices; ++gm) {
            std::vector<GateKind> gates(n, GateKind::Conjunction);
            for (std::size_t k = 0; k < constant.size(); ++k)
                gates[constant[k]] = ((cm >> k) & 1) ? GateKind::Const1 : GateKind::Const0;
            for (std::size_t k = 0; k < free_gate.size(); ++k)
                if ((gm >> k) & 1) gates[free_gate[k]] = GateKind::Disjunction;
            out.emplace_back(g, std::move(gates));
        }
    }
    return out;
}

AndOrNet parse_aon(const std::string& text) {
    std::istringstream in(text);
    std::string line, graph_part;
    std::vector<std::pair<int, GateKind>> gate_lines;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        std::string body = hash == std::string::npos ? line : line.substr(0, hash);
        std::istringstream ls(body);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "gate") {
            int v = 0;
            std::string kind;
            if (!(ls >> v >> kind)) throw std::invalid_argument("aon: bad gate line: " + line);
            GateKind gk;
            if (kind == "AND")
                gk = GateKind::Conjunction;
            else if (kind == "OR")
                gk = GateKind::Disjunction;
            else if (kind == "CONST0")
                gk = GateKind::Const0;
            else if (kind == "CONST1")
                gk = GateKind::Const1;
            else
                throw std::invalid_argument("aon: unknown gate kind: " + kind);
            gate_lines.emplace_back(v, gk);
        } else {
            graph_part += body + "\n";
        }
    }
    SignedDigraph g = parse_sdg(graph_part);
    std::vector<GateKind> gates(g.size(), GateKind::Conjunction);
    std::vector<char> seen(g.size(), 0);
    for (auto [v, gk] : gate_lines) {
        if (v < 1 || v > g.size()) throw std::invalid_argument("aon: gate vertex out of range");
        gates[v - 1] = gk;
        seen[v - 1] = 1;
    }
    for (int v = 0; v < g.size(); ++v)
        if (!seen[v]) throw std::invalid_argument("aon: missing gate for vertex " + std::to_string(v + 1));
    return AndOrNet(std::move(g), std::move(gates));
}

std::string to_aon(const AndOrNet& f) {
    std::ostringstream out;
    out << to_sdg(f.graph());
    for (int v = 0; v < f.size(); ++v) {
        out << "gate " << v + 1 << " ";
        switch (f.gates()[v]) {
            case GateKind::Conjunction: out << "AND"; break;
            case GateKind::Disjunction: out << "OR"; break;
            case GateKind::Const0: out << "CONST0"; break;
            case GateKind::Const1: out << "CONST1"; break;
        }
        out << "\n";
    }
    return out.str();
}

std::string config_to_string(Config x, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if ((x >> i) & 1) s[i] = '1';
    return s;
}

Config config_from_string(const std::string& s) {
    Config x = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            x |= Config{1} << i;
        else if (s[i] != '0')
            throw std::invalid_argument("configuration must be a 0/1 string");
    }
    return x;
}

std::string word_to_string(const Word& w) {
    std::ostringstream out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out << " ";
        out << w[k] + 1;
    }
    return out.str();
}

Word word_from_string(const std::string& s) {
    std::istringstream in(s);
    Word w;
    int letter;
    while (in >> letter) {
        if (letter < 1) throw std::invalid_argument("word letters are 1-indexed vertices");
        w.push_back(letter - 1);
    }
    return w;
}

}  // namespace bnsync
