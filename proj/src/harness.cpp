#include "bnsync/harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "bnsync/bnet.hpp"
#include "bnsync/construct.hpp"
#include "bnsync/reductions.hpp"
#include "bnsync/syncdet.hpp"

#include "json.hpp"

namespace bnsync {

namespace {

constexpr int kMaxFlatN = 5;
constexpr std::size_t kMaxExamples = 5;

struct FlatGraph {
    int n = 0;
    // sign[j][i]: arc from j to i; 0 none, +1, -1.
    std::array<std::array<std::int8_t, kMaxFlatN>, kMaxFlatN> sign{};
    bool strong = false, has_pos = false, has_neg = false;
    bool has_source = false, is_cycle = false, trivial = true;
};

// All cyclic vertex sequences on [n], shortest rotation first, used to read
// off simple cycle signs from the adjacency matrix.
std::vector<std::vector<int>> cycle_templates(int n) {
    std::vector<std::vector<int>> out;
    for (int v = 0; v < n; ++v) out.push_back({v});
    std::vector<int> verts(n);
    for (int v = 0; v < n; ++v) verts[v] = v;
    for (int len = 2; len <= n; ++len) {
        std::vector<int> idx(len);
        std::function<void(int, std::vector<int>&)> rec = [&](int depth, std::vector<int>& cur) {
            if (depth == len) {
                out.push_back(cur);
                return;
            }
            for (int v = cur.front() + 1; v < n; ++v) {
                if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
                cur.push_back(v);
                rec(depth + 1, cur);
                cur.pop_back();
            }
        };
        // Fix the smallest vertex first; remaining order is free.
        for (int first = 0; first < n; ++first) {
            std::vector<int> cur{first};
            rec(1, cur);
        }
    }
    // Distinct cyclic orders are distinct cycles; rotations were avoided by
    // fixing the smallest vertex first, but reflections of length >= 3 are
    // genuinely different directed cycles and stay included.
    return out;
}

void derive_flags(FlatGraph& g, const std::vector<std::vector<int>>& templates) {
    const int n = g.n;
    g.trivial = true;
    for (int j = 0; j < n && g.trivial; ++j)
        for (int i = 0; i < n; ++i)
            if (g.sign[j][i]) {
                g.trivial = false;
                break;
            }
    // Strongness via transitive closure on bitmasks.
    std::array<unsigned, kMaxFlatN> reach{};
    for (int j = 0; j < n; ++j) {
        reach[j] = 1u << j;
        for (int i = 0; i < n; ++i)
            if (g.sign[j][i]) reach[j] |= 1u << i;
    }
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                if (reach[j] & (1u << i)) reach[j] |= reach[i];
    g.strong = true;
    unsigned all = (1u << n) - 1;
    for (int j = 0; j < n; ++j)
        if (reach[j] != all) g.strong = false;
    // Cycle signs.
    g.has_pos = g.has_neg = false;
    for (const auto& cyc : templates) {
        int s = 1;
        bool ok = true;
        for (std::size_t k = 0; k < cyc.size() && ok; ++k) {
            std::int8_t a = g.sign[cyc[k]][cyc[(k + 1) % cyc.size()]];
            if (!a)
                ok = false;
            else
                s *= a;
        }
        if (!ok) continue;
        (s > 0 ? g.has_pos : g.has_neg) = true;
        if (g.has_pos && g.has_neg) break;
    }
    g.has_source = false;
    for (int i = 0; i < n; ++i) {
        bool any = false;
        for (int j = 0; j < n; ++j)
            if (g.sign[j][i]) any = true;
        if (!any) g.has_source = true;
    }
    // A cycle graph: strong, nontrivial, every in- and out-degree one.
    g.is_cycle = g.strong && !g.trivial;
    for (int v = 0; v < n && g.is_cycle; ++v) {
        int din = 0, dout = 0;
        for (int j = 0; j < n; ++j) {
            if (g.sign[j][v]) ++din;
            if (g.sign[v][j]) ++dout;
        }
        if (din != 1 || dout != 1) g.is_cycle = false;
    }
}

SignedDigraph to_digraph(const FlatGraph& g) {
    SignedDigraph out(g.n);
    for (int j = 0; j < g.n; ++j)
        for (int i = 0; i < g.n; ++i)
            if (g.sign[j][i]) out.add_arc(j, i, g.sign[j][i]);
    return out;
}

// Enumerates all simple signed digraphs on [n] (loops allowed) through a
// base-3 odometer over the ordered vertex pairs.
void for_each_flat_graph(int n, const std::function<void(const FlatGraph&)>& fn) {
    if (n > kMaxFlatN) throw std::invalid_argument("flat enumeration limited to n <= 5");
    auto templates = cycle_templates(n);
    const int cells = n * n;
    std::vector<std::int8_t> digits(cells, 0);
    FlatGraph g;
    g.n = n;
    const std::int8_t code_to_sign[3] = {0, 1, -1};
    while (true) {
        for (int c = 0; c < cells; ++c) g.sign[c / n][c % n] = code_to_sign[digits[c]];
        derive_flags(g, templates);
        fn(g);
        int c = 0;
        while (c < cells && digits[c] == 2) digits[c++] = 0;
        if (c == cells) break;
        ++digits[c];
    }
}

void record_failure(SuiteReport& rep, const std::string& what) {
    ++rep.failures;
    if (rep.failure_examples.size() < kMaxExamples) rep.failure_examples.push_back(what);
}

std::string describe(const SignedDigraph& g) {
    std::string s = to_sdg(g);
    std::replace(s.begin(), s.end(), '\n', ';');
    return s;
}

// Gate assignments of the and-or-nets on g: free choice on in-degree >= 2
// (conjunction / disjunction) and in-degree 0 (both constants); conjunction
// on in-degree 1.
void for_each_and_or_net(const SignedDigraph& g,
                         const std::function<void(const AndOrNet&)>& fn) {
    std::vector<int> free_vertices;
    for (int v = 0; v < g.size(); ++v)
        if (g.in_degree(v) != 1) free_vertices.push_back(v);
    std::uint32_t total = std::uint32_t{1} << free_vertices.size();
    for (std::uint32_t code = 0; code < total; ++code) {
        std::vector<GateKind> gates(g.size(), GateKind::Conjunction);
        for (std::size_t k = 0; k < free_vertices.size(); ++k) {
            int v = free_vertices[k];
            bool second = (code >> k) & 1;
            if (g.in_degree(v) == 0)
                gates[v] = second ? GateKind::Const1 : GateKind::Const0;
            else
                gates[v] = second ? GateKind::Disjunction : GateKind::Conjunction;
        }
        fn(AndOrNet(g, gates));
    }
}

// Monotone increasing functions of d inputs essential in every input, as
// truth tables over 2^d input patterns.
const std::vector<std::uint32_t>& monotone_essential_tables(int d) {
    static std::array<std::vector<std::uint32_t>, 5> cache;
    static std::array<bool, 5> ready{};
    if (d < 0 || d > 4) throw std::invalid_argument("in-degree above 4 unsupported");
    if (!ready[d]) {
        int patterns = 1 << d;
        for (std::uint64_t t = 0; t < (std::uint64_t{1} << patterns); ++t) {
            bool monotone = true;
            for (int x = 0; x < patterns && monotone; ++x)
                for (int j = 0; j < d; ++j)
                    if (!((x >> j) & 1)) {
                        bool lo = (t >> x) & 1, hi = (t >> (x | (1 << j))) & 1;
                        if (lo && !hi) monotone = false;
                    }
            if (!monotone) continue;
            bool essential = true;
            for (int j = 0; j < d && essential; ++j) {
                bool depends = false;
                for (int x = 0; x < patterns; ++x)
                    if (!((x >> j) & 1) &&
                        (((t >> x) & 1) != ((t >> (x | (1 << j))) & 1)))
                        depends = true;
                if (!depends) essential = false;
            }
            if (essential) cache[d].push_back(static_cast<std::uint32_t>(t));
        }
        ready[d] = true;
    }
    return cache[d];
}

TableNet sample_general_net(const SignedDigraph& g, std::mt19937& rng) {
    const int n = g.size();
    TableNet f(n);
    for (int i = 0; i < n; ++i) {
        auto in = g.in_arcs(i);
        int d = static_cast<int>(in.size());
        const auto& tables = monotone_essential_tables(d);
        std::uniform_int_distribution<std::size_t> pick(0, tables.size() - 1);
        std::uint32_t t = tables[pick(rng)];
        for (Config x = 0; x < (Config{1} << n); ++x) {
            int pattern = 0;
            for (int k = 0; k < d; ++k) {
                bool b = (x >> in[k].src) & 1;
                if (in[k].sign < 0) b = !b;
                if (b) pattern |= 1 << k;
            }
            if ((t >> pattern) & 1) f.set_component(i, x, true);
        }
    }
    return f;
}

}  // namespace

SuiteReport run_dichotomy_suite(int n) {
    SuiteReport rep;
    rep.name = "dichotomy";
    rep.params = "n=" + std::to_string(n);
    for_each_flat_graph(n, [&](const FlatGraph& fg) {
        if (!fg.strong || fg.trivial || fg.has_pos) return;
        SignedDigraph g = to_digraph(fg);
        if (fg.is_cycle) {
            for_each_and_or_net(g, [&](const AndOrNet& f) {
                ++rep.checked;
                if (is_synchronizing(f))
                    record_failure(rep, "synchronizing net on a cycle graph: " + describe(g));
            });
            return;
        }
        for_each_and_or_net(g, [&](const AndOrNet& f) {
            ++rep.checked;
            if (!is_synchronizing(f)) {
                record_failure(rep, "non-synchronizing and-or-net: " + describe(g));
                return;
            }
            try {
                global_sync_word(f);  // verifies success and budget internally
            } catch (const std::exception& e) {
                record_failure(rep, std::string(e.what()) + " on " + describe(g));
            }
        });
    });
    return rep;
}

SuiteReport run_budget_suite(int n, int samples, unsigned seed) {
    SuiteReport rep;
    rep.name = "budgets";
    rep.params = "n=" + std::to_string(n) + " samples=" + std::to_string(samples);
    std::mt19937 rng(seed);

    auto check_graph = [&](const SignedDigraph& g) {
        std::vector<Config> configs;
        if (n <= 3) {
            for (Config x = 0; x < (Config{1} << n); ++x) configs.push_back(x);
        } else {
            std::uniform_int_distribution<Config> pick(0, (Config{1} << n) - 1);
            for (int k = 0; k < samples; ++k) configs.push_back(pick(rng));
            std::sort(configs.begin(), configs.end());
            configs.erase(std::unique(configs.begin(), configs.end()), configs.end());
        }
        for_each_and_or_net(g, [&](const AndOrNet& f) {
            for (Config x : configs)
                for (int i = 0; i < n; ++i) {
                    ++rep.checked;
                    try {
                        flip_vertex(f, x, i);
                    } catch (const std::exception& e) {
                        record_failure(rep, std::string("flip: ") + e.what() + " on " + describe(g));
                    }
                }
            for (std::size_t a = 0; a < configs.size(); ++a)
                for (std::size_t b = a + 1; b < configs.size(); ++b) {
                    ++rep.checked;
                    try {
                        pair_sync(f, configs[a], configs[b]);
                    } catch (const std::exception& e) {
                        record_failure(rep, std::string("pair: ") + e.what() + " on " + describe(g));
                    }
                }
        });
        // Fix-to-zero needs the and-net with positive in-arcs on in-degree-1
        // vertices (the shape produced by the normalization switch).
        bool normalized = true;
        for (int v = 0; v < n; ++v)
            if (g.in_degree(v) == 1 && g.in_arcs(v).front().sign < 0) normalized = false;
        if (normalized) {
            AndOrNet f = and_net(g);
            for (std::size_t a = 0; a < configs.size(); ++a)
                for (std::size_t b = a + 1; b < configs.size(); ++b)
                    for (int i = 0; i < n; ++i) {
                        ++rep.checked;
                        try {
                            fix_vertex_zero(f, configs[a], configs[b], i);
                        } catch (const std::exception& e) {
                            record_failure(rep,
                                           std::string("fix: ") + e.what() + " on " + describe(g));
                        }
                    }
        }
        ++rep.checked;
        try {
            fast_sync(g);
        } catch (const std::exception& e) {
            record_failure(rep, std::string("fast: ") + e.what() + " on " + describe(g));
        }
        if (min_feedback_vertex_set(g).size() <= 1) {
            ++rep.checked;
            try {
                Word w = tau1_word(g);
                for_each_and_or_net(g, [&](const AndOrNet& f) {
                    if (apply_word_set(f, w, StateSet::full(n)).count() != 1)
                        record_failure(rep, "tau1 word fails on " + describe(g));
                });
            } catch (const std::exception& e) {
                record_failure(rep, std::string("tau1: ") + e.what() + " on " + describe(g));
            }
        }
    };

    if (n <= 4) {
        for_each_flat_graph(n, [&](const FlatGraph& fg) {
            if (!fg.strong || fg.trivial || fg.has_pos || fg.is_cycle) return;
            check_graph(to_digraph(fg));
        });
    } else {
        for (const SignedDigraph& g : strong_negative_sample(n, samples, seed ^ 0x9e3779b9u))
            check_graph(g);
    }
    return rep;
}

SuiteReport run_attractor_suite(int n, int general_samples, unsigned seed) {
    SuiteReport rep;
    rep.name = "attractor-size";
    rep.params = "n=" + std::to_string(n) + " general_samples=" + std::to_string(general_samples);
    std::mt19937 rng(seed);
    for_each_flat_graph(n, [&](const FlatGraph& fg) {
        if (!fg.strong || fg.trivial || fg.has_pos) return;
        SignedDigraph g = to_digraph(fg);
        auto check_net = [&](const BooleanNetwork& f) {
            ++rep.checked;
            auto terminals = asynchronous_terminal_components(f);
            if (terminals.size() != 1)
                record_failure(rep, "multiple terminal components on " + describe(g));
            else if (terminals.front().size() < static_cast<std::size_t>(n) + 1)
                record_failure(rep, "small terminal component on " + describe(g));
        };
        for_each_and_or_net(g, check_net);
        for (int k = 0; k < general_samples; ++k) check_net(sample_general_net(g, rng));
    });
    return rep;
}

namespace {

struct NetFlags {
    bool no_pos, no_neg, no_source;
};

void check_fixed_point_items(SuiteReport& rep, const NetFlags& fl, int fp_count,
                             const std::string& what) {
    ++rep.checked;
    if (fl.no_neg && fp_count < 1) record_failure(rep, "no fixed point without negative cycles " + what);
    if (fl.no_pos && fp_count > 1) record_failure(rep, "two fixed points without positive cycles " + what);
    if (fl.no_neg && fl.no_source && fp_count < 2)
        record_failure(rep, "source-free without negative cycles but < 2 fixed points " + what);
    if (fl.no_pos && fl.no_source && fp_count != 0)
        record_failure(rep, "source-free without positive cycles but a fixed point " + what);
}

}  // namespace

SuiteReport run_fixed_point_general_suite(int n) {
    SuiteReport rep;
    rep.name = "fixed-points-general";
    rep.params = "n=" + std::to_string(n);
    if (n > 3) throw std::invalid_argument("general enumeration limited to n <= 3");
    const int configs = 1 << n;
    const std::uint32_t tables = std::uint32_t{1} << configs;

    // Signed dependence profile of each component table: 2 bits per input.
    std::vector<std::uint32_t> profile(tables, 0);
    for (std::uint32_t t = 0; t < tables; ++t)
        for (int j = 0; j < n; ++j) {
            bool pos = false, neg = false;
            for (int x = 0; x < configs; ++x)
                if (!((x >> j) & 1)) {
                    bool lo = (t >> x) & 1, hi = (t >> (x | (1 << j))) & 1;
                    if (!lo && hi) pos = true;
                    if (lo && !hi) neg = true;
                }
            if (pos) profile[t] |= 1u << (2 * j);
            if (neg) profile[t] |= 2u << (2 * j);
        }

    auto templates = cycle_templates(n);
    // Cycle flags per full arc-state key (2 bits per ordered pair).
    std::vector<std::int8_t> cycle_flags(std::size_t{1} << (2 * n * n), -1);
    auto flags_of = [&](std::uint32_t key) {
        std::int8_t& slot = cycle_flags[key];
        if (slot < 0) {
            bool hp = false, hn = false;
            for (const auto& cyc : templates) {
                bool ok = true, pos_arc = false, neg_arc = false, mixed = false;
                int s = 1;
                for (std::size_t k = 0; k < cyc.size() && ok; ++k) {
                    int cell = cyc[k] * n + cyc[(k + 1) % cyc.size()];
                    std::uint32_t st = (key >> (2 * cell)) & 3;
                    if (st == 0)
                        ok = false;
                    else if (st == 3)
                        mixed = true;
                    else if (st == 2)
                        s = -s;
                }
                (void)pos_arc;
                (void)neg_arc;
                if (!ok) continue;
                if (mixed)
                    hp = hn = true;
                else
                    (s > 0 ? hp : hn) = true;
                if (hp && hn) break;
            }
            slot = static_cast<std::int8_t>((hp ? 1 : 0) | (hn ? 2 : 0));
        }
        return slot;
    };

    // Precompute the per-config coordinate masks for fixed-point counting.
    std::vector<std::uint32_t> xbit(n, 0);
    for (int i = 0; i < n; ++i)
        for (int x = 0; x < configs; ++x)
            if ((x >> i) & 1) xbit[i] |= 1u << x;
    std::uint32_t full_mask = (configs == 32) ? ~0u : ((1u << configs) - 1);

    std::vector<std::uint32_t> t(n, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            std::uint32_t key = 0;
            bool source_free = true;
            for (int v = 0; v < n; ++v) {
                std::uint32_t p = profile[t[v]];
                if (p == 0) source_free = false;
                for (int j = 0; j < n; ++j)
                    key |= ((p >> (2 * j)) & 3) << (2 * (j * n + v));
            }
            std::int8_t cf = flags_of(key);
            std::uint32_t fp = full_mask;
            for (int v = 0; v < n; ++v) fp &= ~(t[v] ^ xbit[v]);
            NetFlags fl{!(cf & 1), !(cf & 2), source_free};
            check_fixed_point_items(rep, fl, std::popcount(fp), "(general)");
            return;
        }
        for (std::uint32_t tb = 0; tb < tables; ++tb) {
            t[i] = tb;
            rec(i + 1);
        }
    };
    rec(0);
    return rep;
}

SuiteReport run_fixed_point_and_or_suite(int n) {
    SuiteReport rep;
    rep.name = "fixed-points-and-or";
    rep.params = "n=" + std::to_string(n);
    if (n > 4) throw std::invalid_argument("and-or enumeration limited to n <= 4");
    const int configs = 1 << n;
    std::uint32_t full_mask = (configs == 32) ? ~0u : ((1u << configs) - 1);
    std::vector<std::uint32_t> xbit(n, 0);
    for (int i = 0; i < n; ++i)
        for (int x = 0; x < configs; ++x)
            if ((x >> i) & 1) xbit[i] |= 1u << x;

    // conj/disj truth tables indexed by (pos mask, neg mask).
    const int masks = 1 << n;
    std::vector<std::uint32_t> conj(masks * masks), disj(masks * masks);
    for (int pos = 0; pos < masks; ++pos)
        for (int neg = 0; neg < masks; ++neg) {
            std::uint32_t c = 0, d = 0;
            for (int x = 0; x < configs; ++x) {
                if ((x & pos) == pos && (x & neg) == 0) c |= 1u << x;
                if ((x & pos) != 0 || (~x & neg & (masks - 1)) != 0) d |= 1u << x;
            }
            conj[pos * masks + neg] = c;
            disj[pos * masks + neg] = d;
        }

    for_each_flat_graph(n, [&](const FlatGraph& fg) {
        std::array<std::uint32_t, kMaxFlatN> tc{}, td{};
        std::vector<int> free_vertices;
        for (int i = 0; i < n; ++i) {
            int pos = 0, neg = 0, deg = 0;
            for (int j = 0; j < n; ++j) {
                if (fg.sign[j][i] > 0) pos |= 1 << j, ++deg;
                if (fg.sign[j][i] < 0) neg |= 1 << j, ++deg;
            }
            if (deg == 0) {
                tc[i] = 0;          // constant 0
                td[i] = full_mask;  // constant 1
                free_vertices.push_back(i);
            } else {
                tc[i] = conj[pos * masks + neg];
                td[i] = disj[pos * masks + neg];
                if (deg >= 2) free_vertices.push_back(i);
            }
        }
        NetFlags fl{!fg.has_pos, !fg.has_neg, !fg.has_source};
        std::uint32_t total = std::uint32_t{1} << free_vertices.size();
        for (std::uint32_t code = 0; code < total; ++code) {
            std::uint32_t fp = full_mask;
            std::uint32_t rest = code;
            std::size_t k = 0;
            for (int i = 0; i < n; ++i) {
                std::uint32_t tbl = tc[i];
                if (k < free_vertices.size() && free_vertices[k] == i) {
                    if (rest & 1) tbl = td[i];
                    rest >>= 1;
                    ++k;
                }
                fp &= ~(tbl ^ xbit[i]);
            }
            check_fixed_point_items(rep, fl, std::popcount(fp), "(and-or)");
        }
    });
    return rep;
}

SuiteReport run_complete_word_suite(int n) {
    SuiteReport rep;
    rep.name = "complete-word";
    rep.params = "n=" + std::to_string(n);
    Word universal = n_complete_word(n);

    auto check_table_net = [&](const TableNet& f) {
        ++rep.checked;
        if (apply_word_set(f, universal, StateSet::full(n)).count() != 1)
            record_failure(rep, "repeated-identity word fails on an acyclic net");
    };

    if (n <= 3) {
        const int configs = 1 << n;
        const std::uint32_t tables = std::uint32_t{1} << configs;
        // Unsigned dependence profile per table.
        std::vector<std::uint32_t> deps(tables, 0);
        for (std::uint32_t t = 0; t < tables; ++t)
            for (int j = 0; j < n; ++j)
                for (int x = 0; x < configs; ++x)
                    if (!((x >> j) & 1) && (((t >> x) & 1) != ((t >> (x | (1 << j))) & 1))) {
                        deps[t] |= 1u << j;
                        break;
                    }
        // Acyclicity per dependence matrix (n rows of n bits).
        auto acyclic = [&](const std::vector<std::uint32_t>& row) {
            std::vector<char> removed(n, 0);
            for (int round = 0; round < n; ++round) {
                int pick = -1;
                for (int i = 0; i < n && pick < 0; ++i) {
                    if (removed[i]) continue;
                    std::uint32_t live = row[i];
                    for (int j = 0; j < n; ++j)
                        if (removed[j]) live &= ~(1u << j);
                    if (live == 0) pick = i;
                }
                if (pick < 0) return false;
                removed[pick] = 1;
            }
            return true;
        };
        std::vector<std::uint32_t> t(n, 0), row(n, 0);
        std::function<void(int)> rec = [&](int i) {
            if (i == n) {
                for (int v = 0; v < n; ++v) row[v] = deps[t[v]];
                if (!acyclic(row)) return;
                TableNet f(n);
                for (int v = 0; v < n; ++v)
                    for (int x = 0; x < configs; ++x)
                        if ((t[v] >> x) & 1) f.set_component(v, x, true);
                check_table_net(f);
                return;
            }
            for (std::uint32_t tb = 0; tb < tables; ++tb) {
                t[i] = tb;
                rec(i + 1);
            }
        };
        rec(0);
    } else if (n == 4) {
        for_each_flat_graph(n, [&](const FlatGraph& fg) {
            if (fg.has_pos || fg.has_neg) return;  // signed cycles present
            SignedDigraph g = to_digraph(fg);
            for_each_and_or_net(g, [&](const AndOrNet& f) {
                ++rep.checked;
                if (apply_word_set(f, universal, StateSet::full(n)).count() != 1)
                    record_failure(rep, "repeated-identity word fails on " + describe(g));
            });
        });
    } else {
        throw std::invalid_argument("complete-word suite limited to n <= 4");
    }

    // Per-permutation counterexamples: the chain network along pi is
    // synchronized by pi itself, but not by the maximal word missing pi.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        Word pi(perm.begin(), perm.end());
        TableNet f = missing_permutation_counterexample(pi, n);
        ++rep.checked;
        if (!is_synchronizing(f)) {
            record_failure(rep, "chain counterexample is not synchronizing");
            continue;
        }
        if (apply_word_set(f, pi, StateSet::full(n)).count() != 1)
            record_failure(rep, "permutation fails to synchronize its chain network");
        // (reverse pi) repeated n-1 times contains every permutation except pi.
        Word rev(pi.rbegin(), pi.rend());
        Word missing;
        for (int rep_k = 0; rep_k + 1 < n; ++rep_k)
            missing.insert(missing.end(), rev.begin(), rev.end());
        auto contains = [](const Word& w, const Word& sub) {
            std::size_t pos = 0;
            for (int letter : w)
                if (pos < sub.size() && letter == sub[pos]) ++pos;
            return pos == sub.size();
        };
        if (n >= 2) {
            if (contains(missing, pi))
                record_failure(rep, "word expected to miss its permutation contains it");
            if (apply_word_set(f, missing, StateSet::full(n)).count() == 1)
                record_failure(rep, "word missing the permutation still synchronizes the chain");
        }
        if (!is_n_complete(n_complete_word(n), n))
            record_failure(rep, "repeated-identity word is not permutation-complete");
        if (n >= 2 && is_n_complete(missing, n))
            record_failure(rep, "word missing a permutation reported as complete");
    } while (std::next_permutation(perm.begin(), perm.end()));
    return rep;
}

SuiteReport run_majority_suite(int n) {
    SuiteReport rep;
    rep.name = "majority";
    rep.params = "n=" + std::to_string(n);
    if (n > kMaxFlatN) throw std::invalid_argument("majority suite limited to n <= 5");
    const int configs = 1 << n;
    // Both defining checks decompose per component, so validating every
    // signed in-neighborhood with in-degree not in {0, 2} covers every graph
    // in the class compositionally.
    std::uint64_t local_choices = 0;
    for (int pos = 0; pos < configs; ++pos)
        for (int neg = 0; neg < configs; ++neg) {
            if (pos & neg) continue;
            int d = std::popcount(static_cast<unsigned>(pos | neg));
            if (d == 0 || d == 2) continue;
            ++local_choices;
            ++rep.checked;
            int phi = std::countr_zero(static_cast<unsigned>(pos | neg));
            bool phi_pos = (pos >> phi) & 1;
            std::vector<char> table(configs);
            for (int x = 0; x < configs; ++x) {
                int sat = std::popcount(static_cast<unsigned>(x & pos)) +
                          std::popcount(static_cast<unsigned>(~x & neg));
                if (2 * sat > d)
                    table[x] = 1;
                else if (2 * sat < d)
                    table[x] = 0;
                else
                    table[x] = (((x >> phi) & 1) == phi_pos) ? 1 : 0;
            }
            // Dependence must match (pos, neg) exactly.
            for (int j = 0; j < n; ++j) {
                bool dep_pos = false, dep_neg = false;
                for (int x = 0; x < configs; ++x)
                    if (!((x >> j) & 1)) {
                        if (table[x] < table[x | (1 << j)]) dep_pos = true;
                        if (table[x] > table[x | (1 << j)]) dep_neg = true;
                    }
                bool want_pos = (pos >> j) & 1, want_neg = (neg >> j) & 1;
                if (dep_pos != want_pos || dep_neg != want_neg || (dep_pos && dep_neg)) {
                    record_failure(rep, "majority component does not realize its in-neighborhood");
                    break;
                }
            }
            for (int x = 0; x < configs; ++x)
                if (table[x] == table[(configs - 1) ^ x]) {
                    record_failure(rep, "majority component equal on an opposite pair");
                    break;
                }
        }
    std::uint64_t covered = 1;
    for (int i = 0; i < n; ++i) covered *= local_choices;
    rep.notes = "per-component checks cover " + std::to_string(covered) +
                " graphs compositionally";
    return rep;
}

SuiteReport run_reduction_suite(int full_check_sample, unsigned seed) {
    SuiteReport rep;
    rep.name = "reductions";
    rep.params = "full_check_sample=" + std::to_string(full_check_sample);
    // All three-variable 3-clauses: one variable triple, eight polarities.
    std::vector<std::array<int, 3>> all_clauses;
    for (int p = 0; p < 8; ++p)
        all_clauses.push_back({(p & 1) ? -1 : 1, (p & 2) ? -2 : 2, (p & 4) ? -3 : 3});
    std::vector<Cnf3> formulas;
    for (const auto& c : all_clauses) {
        Cnf3 psi;
        psi.n_vars = 3;
        psi.clauses = {c};
        formulas.push_back(psi);
    }
    for (const auto& c1 : all_clauses)
        for (const auto& c2 : all_clauses) {
            Cnf3 psi;
            psi.n_vars = 3;
            psi.clauses = {c1, c2};
            formulas.push_back(psi);
        }
    std::uint64_t unsat_count = 0;
    for (const Cnf3& psi : formulas) {
        ++rep.checked;
        EquivalenceReport er = equivalence_check(psi, full_check_sample, seed);
        if (!er.satisfiable) ++unsat_count;
        if (!er.consistent) {
            std::ostringstream what;
            what << "inconsistent reduction on formula with clauses";
            for (const auto& cl : psi.clauses)
                what << " (" << cl[0] << " " << cl[1] << " " << cl[2] << ")";
            record_failure(rep, what.str());
        }
    }
    rep.notes = "formulas=" + std::to_string(formulas.size()) +
                " unsat=" + std::to_string(unsat_count);
    return rep;
}

std::vector<SignedDigraph> strong_negative_sample(int n, int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<SignedDigraph> out;
    std::uniform_int_distribution<int> extra_arcs(1, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> vert(0, n - 1);
    while (static_cast<int>(out.size()) < count) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        SignedDigraph g(n);
        int cycle_sign = 1;
        for (int k = 0; k < n; ++k) {
            int s = coin(rng) ? 1 : -1;
            if (k == n - 1 && cycle_sign * s > 0) s = -s;  // force a negative cycle
            cycle_sign *= s;
            g.add_arc(perm[k], perm[(k + 1) % n], s);
        }
        int extras = extra_arcs(rng);
        bool ok = true;
        for (int k = 0; k < extras && ok; ++k) {
            int a = vert(rng), b = vert(rng);
            if (g.has_arc(a, b)) {
                ok = false;
                break;
            }
            g.add_arc(a, b, coin(rng) ? 1 : -1);
        }
        if (!ok) continue;
        if (!is_strong(g) || is_cycle_graph(g)) continue;
        if (cycle_sign_profile(g).has_positive()) continue;
        out.push_back(g);
    }
    return out;
}

std::vector<std::string> suite_names() {
    return {"dichotomy",     "budgets",           "attractor-size", "fixed-points-general",
            "fixed-points-and-or", "complete-word", "majority",       "reductions"};
}

SuiteReport run_suite_by_name(const std::string& name, int n, int samples, unsigned seed) {
    auto timed = [](std::function<SuiteReport()> fn) {
        auto start = std::chrono::steady_clock::now();
        SuiteReport rep = fn();
        rep.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return rep;
    };
    if (name == "dichotomy") return timed([&] { return run_dichotomy_suite(n); });
    if (name == "budgets") return timed([&] { return run_budget_suite(n, samples, seed); });
    if (name == "attractor-size")
        return timed([&] { return run_attractor_suite(n, samples, seed); });
    if (name == "fixed-points-general")
        return timed([&] { return run_fixed_point_general_suite(n); });
    if (name == "fixed-points-and-or")
        return timed([&] { return run_fixed_point_and_or_suite(n); });
    if (name == "complete-word") return timed([&] { return run_complete_word_suite(n); });
    if (name == "majority") return timed([&] { return run_majority_suite(n); });
    if (name == "reductions") return timed([&] { return run_reduction_suite(samples, seed); });
    throw std::invalid_argument("unknown suite: " + name);
}

std::string report_to_json(const SuiteReport& rep) {
    nlohmann::json j;
    j["suite"] = rep.name;
    j["params"] = rep.params;
    j["checked"] = rep.checked;
    j["failures"] = rep.failures;
    j["failure_examples"] = rep.failure_examples;
    j["notes"] = rep.notes;
    j["seconds"] = rep.seconds;
    j["passed"] = rep.passed();
    return j.dump();
}

}  // namespace bnsync
