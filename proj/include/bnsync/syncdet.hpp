#pragma once

#include <functional>
#include <optional>

#include "bnsync/bnet.hpp"

namespace bnsync {

// Shortest word merging x and y (BFS over unordered state pairs, letters in
// increasing order). Empty optional if the pair cannot be merged. n <= 13.
std::optional<Word> merge_pair(const BooleanNetwork& f, Config x, Config y);

// Decision by the pairwise criterion: f is synchronizing iff every pair of
// configurations is mergeable. n <= 13.
bool is_synchronizing(const BooleanNetwork& f);

// Greedy merge of a configuration set: repeatedly merge the two smallest
// distinct members with `merger` and push the word through the whole image.
// Throws if some merge fails or the budget is exceeded.
using PairMerger = std::function<Word(const BooleanNetwork&, Config, Config)>;

Word synchronize_set(const BooleanNetwork& f, const StateSet& xs,
                     std::size_t length_budget, const PairMerger& merger = {});

// Exact shortest synchronizing word by BFS over subsets of the state space.
// Empty optional if f is not synchronizing. n <= 4.
std::optional<Word> shortest_sync_word(const BooleanNetwork& f);

}  // namespace bnsync
