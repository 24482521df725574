/*
 * Copyright 2026 The bolz Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BOLZ_WINDOW_TRIE_HPP
#define BOLZ_WINDOW_TRIE_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "bolz/suffix_index.hpp"

namespace bolz {

inline constexpr std::uint32_t kNoPosition = std::numeric_limits<std::uint32_t>::max();

/// Inclusive range of text positions; empty when lo > hi.
struct Range {
    std::size_t lo = 1;
    std::size_t hi = 0;

    static constexpr Range empty_range() noexcept { return {}; }
    constexpr bool empty() const noexcept { return lo > hi; }
    constexpr std::size_t size() const noexcept { return empty() ? 0 : hi - lo + 1; }
    constexpr bool contains(std::size_t x) const noexcept { return lo <= x && x <= hi; }
    friend constexpr bool operator==(const Range&, const Range&) = default;
};

/// Positions s whose distance h - s lies in [l, r], clipped at 0.
constexpr Range copy_window(std::size_t h, std::size_t l, std::size_t r) noexcept {
    if (h < l) return {};
    return {h >= r ? h - r : 0, h - l};
}

/// Maps the distinct symbols met in a set of ranges to 0, 1, 2, ... in
/// first-occurrence order. Symbols outside the domain map to 256 + c, which
/// keeps the mapping injective over the whole byte alphabet.
class RemapTable {
public:
    RemapTable() noexcept { code_.fill(kUnmapped); }

    void add_range(std::span<const std::uint8_t> text, Range r);
    void clear() noexcept;

    std::uint32_t map(std::uint8_t c) const noexcept { return code_[c] == kUnmapped ? 256u + c : code_[c]; }
    bool contains(std::uint8_t c) const noexcept { return code_[c] != kUnmapped; }
    std::size_t size() const noexcept { return used_.size(); }

private:
    static constexpr std::uint32_t kUnmapped = std::numeric_limits<std::uint32_t>::max();
    std::array<std::uint32_t, 256> code_;
    std::vector<std::uint8_t> used_;
};

/// Order of suffixes a and b of the remapped text; either may be idx.size(),
/// the empty suffix. One lcp query plus one symbol comparison.
std::strong_ordering compare_remapped(const TextIndex& idx, const RemapTable& remap, std::size_t a, std::size_t b);

/// Positions of `range`, ordered by their remapped suffixes. Sorts the pair
/// string <M(S[h]), sign(S_{h+1} vs S_{hi+1})> by suffix sorting over an
/// alphabet of size 3 * |M|. Every symbol of the range must be mapped.
std::vector<std::uint32_t> sort_range_suffixes(const TextIndex& idx, Range range, const RemapTable& remap);
std::vector<std::uint32_t> sort_range_suffixes(const TextIndex& idx, Range range);

/// Merges two lists sorted under `remap`. A position present in both is kept once.
std::vector<std::uint32_t> merge_sorted_suffix_lists(const TextIndex& idx, const RemapTable& remap,
                                                     std::span<const std::uint32_t> a,
                                                     std::span<const std::uint32_t> b);

/// Unordered compact trie (lcp-interval tree) over the suffixes starting in
/// B and in the window W_B = W' u W''. Nodes 0..leaf_count()-1 are the leaves,
/// in sorted leaf order; internal nodes follow.
///
/// Per node u: a(u) is the smallest position of B below u; min(u) the
/// rightmost position of W' below u; max(u) the leftmost position of W''
/// below u. kNoPosition marks an undefined value.
struct BlockTrie {
    std::vector<std::uint32_t> leaf_pos;
    std::vector<std::uint32_t> parent;
    std::vector<std::uint32_t> depth;
    std::vector<std::uint32_t> a;
    std::vector<std::uint32_t> min_left;
    std::vector<std::uint32_t> max_right;
    std::vector<std::uint32_t> postorder;
    std::uint32_t root = kNoPosition;

    std::size_t leaf_count() const noexcept { return leaf_pos.size(); }
    std::size_t node_count() const noexcept { return parent.size(); }
    bool is_leaf(std::uint32_t u) const noexcept { return u < leaf_pos.size(); }
    bool empty() const noexcept { return leaf_pos.empty(); }
    void clear() noexcept;
};

/// Splits the window of block B for distance class [l, r] into its halves:
/// W' = W_{B.lo} and W'' = the rest of W_{B.hi}. Both clipped at 0.
std::array<Range, 2> block_window(Range block, std::size_t l, std::size_t r);

/// Reusable workspace for building block tries; one per class pass.
class BlockTrieBuilder {
public:
    /// Ranges must lie inside the text. W' and W'' must be adjacent (or one empty).
    const BlockTrie& build(const TextIndex& idx, Range block, Range window_left, Range window_right);

private:
    void sort_leaves(const TextIndex& idx, Range block, Range window);
    void sort_one_range(const TextIndex& idx, Range range, std::vector<std::uint32_t>& out);
    void link(const TextIndex& idx);

    BlockTrie trie_;
    RemapTable remap_;
    std::vector<std::uint32_t> order_;
    std::vector<std::uint32_t> other_;
    std::vector<std::uint32_t> merged_;
    std::vector<std::int32_t> pairs_;
    std::vector<std::uint32_t> stack_;
};

BlockTrie build_block_trie(const TextIndex& idx, Range block, Range window_left, Range window_right);

/// Maximal-position sweep. mp[h - block.lo] receives, for every h in the block
/// that has a d-maximal edge with distance in [l, r], a position of W_h whose
/// suffix shares the longest prefix with suffix h. Other entries are either
/// kNoPosition or a position of W_h that need not be the best match.
void compute_maximal_positions(const BlockTrie& trie, Range block, std::size_t l, std::size_t r,
                               std::span<std::uint32_t> mp);
std::vector<std::uint32_t> compute_maximal_positions(const BlockTrie& trie, Range block, std::size_t l,
                                                     std::size_t r);

}  // namespace bolz

#endif  // BOLZ_WINDOW_TRIE_HPP
