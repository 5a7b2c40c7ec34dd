#include "bnsync/syncdet.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace bnsync {

namespace {

void check_pair_space(int n) {
    if (n > 13) throw std::invalid_argument("pair-graph operation limited to n <= 13");
}

std::uint64_t pair_key(Config x, Config y) {
    if (x > y) std::swap(x, y);
    return (std::uint64_t{x} << 20) | y;
}

}  // namespace

std::optional<Word> merge_pair(const BooleanNetwork& f, Config x, Config y) {
    check_pair_space(f.size());
    const int n = f.size();
    if (x == y) return Word{};
    struct Parent {
        std::uint64_t from;
        int letter;
    };
    std::unordered_map<std::uint64_t, Parent> parent;
    std::deque<std::pair<Config, Config>> queue;
    std::uint64_t start = pair_key(x, y);
    parent[start] = {start, -1};
    queue.emplace_back(std::min(x, y), std::max(x, y));
    while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        std::uint64_t here = pair_key(a, b);
        for (int i = 0; i < n; ++i) {
            Config a2 = f.async_step(i, a), b2 = f.async_step(i, b);
            std::uint64_t next = pair_key(a2, b2);
            if (next == here || parent.count(next)) continue;
            parent[next] = {here, i};
            if (a2 == b2) {
                Word w;
                std::uint64_t k = next;
                while (k != start) {
                    const Parent& p = parent.at(k);
                    w.push_back(p.letter);
                    k = p.from;
                }
                std::reverse(w.begin(), w.end());
                return w;
            }
            queue.emplace_back(std::min(a2, b2), std::max(a2, b2));
        }
    }
    return std::nullopt;
}

bool is_synchronizing(const BooleanNetwork& f) {
    check_pair_space(f.size());
    const int n = f.size();
    const std::size_t N = std::size_t{1} << n;
    // Backward BFS from the diagonal over unordered pairs.
    std::vector<std::vector<std::vector<Config>>> inv(n, std::vector<std::vector<Config>>(N));
    for (int i = 0; i < n; ++i)
        for (Config x = 0; x < N; ++x) inv[i][f.async_step(i, x)].push_back(x);
    auto idx = [N](Config x, Config y) {
        if (x > y) std::swap(x, y);
        return std::size_t{x} * N + y;
    };
    std::vector<char> mergeable(N * N, 0);
    std::deque<std::pair<Config, Config>> queue;
    for (Config x = 0; x < N; ++x) {
        mergeable[idx(x, x)] = 1;
        queue.emplace_back(x, x);
    }
    while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i)
            for (Config pa : inv[i][a])
                for (Config pb : inv[i][b]) {
                    std::size_t k = idx(pa, pb);
                    if (!mergeable[k]) {
                        mergeable[k] = 1;
                        queue.emplace_back(std::min(pa, pb), std::max(pa, pb));
                    }
                }
    }
    for (Config x = 0; x < N; ++x)
        for (Config y = x + 1; y < N; ++y)
            if (!mergeable[idx(x, y)]) return false;
    return true;
}

Word synchronize_set(const BooleanNetwork& f, const StateSet& xs,
                     std::size_t length_budget, const PairMerger& merger) {
    PairMerger merge = merger;
    if (!merge)
        merge = [](const BooleanNetwork& g, Config a, Config b) {
            auto w = merge_pair(g, a, b);
            if (!w) throw std::runtime_error("pair cannot be merged");
            return *w;
        };
    Word word;
    StateSet image = xs;
    while (image.count() > 1) {
        auto states = image.to_vector();
        Word step = merge(f, states[0], states[1]);
        word.insert(word.end(), step.begin(), step.end());
        if (word.size() > length_budget) throw std::runtime_error("synchronization budget exceeded");
        image = apply_word_set(f, step, image);
    }
    return word;
}

std::optional<Word> shortest_sync_word(const BooleanNetwork& f) {
    const int n = f.size();
    if (n > 4) throw std::invalid_argument("subset BFS limited to n <= 4");
    const std::size_t N = std::size_t{1} << n;
    using Subset = std::uint32_t;  // bitset over configurations
    Subset full = N == 32 ? 0xffffffffu : ((Subset{1} << N) - 1);
    auto step = [&](Subset s, int i) {
        Subset t = 0;
        for (Config x = 0; x < N; ++x)
            if ((s >> x) & 1) t |= Subset{1} << f.async_step(i, x);
        return t;
    };
    struct Parent {
        Subset from;
        int letter;
    };
    std::unordered_map<Subset, Parent> parent;
    std::deque<Subset> queue{full};
    parent[full] = {full, -1};
    auto reconstruct = [&](Subset s) {
        Word w;
        while (s != full) {
            const Parent& p = parent.at(s);
            w.push_back(p.letter);
            s = p.from;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };
    if (__builtin_popcount(full) == 1) return Word{};
    while (!queue.empty()) {
        Subset s = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            Subset t = step(s, i);
            if (parent.count(t)) continue;
            parent[t] = {s, i};
            if (__builtin_popcount(t) == 1) return reconstruct(t);
            queue.push_back(t);
        }
    }
    return std::nullopt;
}

}  // namespace bnsync
