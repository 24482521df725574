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

#include "bolz/window_trie.hpp"

#include <algorithm>

#include "bolz/errors.hpp"

namespace bolz {

namespace {

// Unions below this size are ordered by direct comparison.
constexpr std::size_t kSmallRange = 24;

void check_range(const TextIndex& idx, Range r) {
    if (!r.empty() && r.hi >= idx.size()) throw DomainError("range exceeds text");
}

void insertion_sort(const TextIndex& idx, const RemapTable& remap, std::span<std::uint32_t> v) {
    for (std::size_t k = 1; k < v.size(); ++k) {
        const std::uint32_t x = v[k];
        std::size_t j = k;
        while (j > 0 && compare_remapped(idx, remap, x, v[j - 1]) < 0) {
            v[j] = v[j - 1];
            --j;
        }
        v[j] = x;
    }
}

// Pair string for range sorting: symbol * 3 + (1 + sign), where
// sign compares suffix h + 1 with suffix range.hi + 1.
void pair_string(const TextIndex& idx, const RemapTable& remap, Range range, std::vector<std::int32_t>& w) {
    w.resize(range.size());
    const auto text = idx.text();
    for (std::size_t h = range.lo; h <= range.hi; ++h) {
        const std::uint32_t sym = remap.map(text[h]);
        if (sym >= remap.size()) throw DomainError("range symbol missing from remap table");
        int sign = 0;
        if (h < range.hi) {
            const auto c = compare_remapped(idx, remap, h + 1, range.hi + 1);
            sign = c < 0 ? -1 : 1;
        }
        w[h - range.lo] = static_cast<std::int32_t>(sym * 3 + static_cast<std::uint32_t>(sign + 1));
    }
}

void merge_into(const TextIndex& idx, const RemapTable& remap, std::span<const std::uint32_t> a,
                std::span<const std::uint32_t> b, std::vector<std::uint32_t>& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t x = 0, y = 0;
    while (x < a.size() && y < b.size()) {
        if (a[x] == b[y]) {
            out.push_back(a[x]);
            ++x;
            ++y;
        } else if (compare_remapped(idx, remap, a[x], b[y]) < 0) {
            out.push_back(a[x++]);
        } else {
            out.push_back(b[y++]);
        }
    }
    out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(x), a.end());
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(y), b.end());
}

}  // namespace

void RemapTable::add_range(std::span<const std::uint8_t> text, Range r) {
    if (r.empty()) return;
    for (std::size_t h = r.lo; h <= r.hi; ++h) {
        const std::uint8_t c = text[h];
        if (code_[c] == kUnmapped) {
            code_[c] = static_cast<std::uint32_t>(used_.size());
            used_.push_back(c);
        }
    }
}

void RemapTable::clear() noexcept {
    for (std::uint8_t c : used_) code_[c] = kUnmapped;
    used_.clear();
}

std::strong_ordering compare_remapped(const TextIndex& idx, const RemapTable& remap, std::size_t a, std::size_t b) {
    if (a == b) return std::strong_ordering::equal;
    const std::size_t n = idx.size();
    const std::size_t l = idx.lcp_unchecked(a, b);
    if (a + l == n) return std::strong_ordering::less;
    if (b + l == n) return std::strong_ordering::greater;
    return remap.map(idx[a + l]) <=> remap.map(idx[b + l]);
}

std::vector<std::uint32_t> sort_range_suffixes(const TextIndex& idx, Range range, const RemapTable& remap) {
    if (range.empty()) return {};
    check_range(idx, range);
    std::vector<std::int32_t> w;
    pair_string(idx, remap, range, w);
    const auto upper = static_cast<std::int32_t>(3 * remap.size() - 1);
    const std::vector<std::int32_t> sa = detail::sais(w, upper);
    std::vector<std::uint32_t> order(sa.size());
    for (std::size_t t = 0; t < sa.size(); ++t) order[t] = static_cast<std::uint32_t>(range.lo + sa[t]);
    return order;
}

std::vector<std::uint32_t> sort_range_suffixes(const TextIndex& idx, Range range) {
    check_range(idx, range);
    RemapTable remap;
    remap.add_range(idx.text(), range);
    return sort_range_suffixes(idx, range, remap);
}

std::vector<std::uint32_t> merge_sorted_suffix_lists(const TextIndex& idx, const RemapTable& remap,
                                                     std::span<const std::uint32_t> a,
                                                     std::span<const std::uint32_t> b) {
    std::vector<std::uint32_t> out;
    merge_into(idx, remap, a, b, out);
    return out;
}

void BlockTrie::clear() noexcept {
    leaf_pos.clear();
    parent.clear();
    depth.clear();
    a.clear();
    min_left.clear();
    max_right.clear();
    postorder.clear();
    root = kNoPosition;
}

std::array<Range, 2> block_window(Range block, std::size_t l, std::size_t r) {
    if (block.empty() || block.hi < l) return {Range{}, Range{}};
    const Range left = copy_window(block.lo, l, r);
    const Range right{block.lo + 1 > l ? block.lo + 1 - l : 0, block.hi - l};
    return {left, right};
}

void BlockTrieBuilder::sort_one_range(const TextIndex& idx, Range range, std::vector<std::uint32_t>& out) {
    out.clear();
    if (range.empty()) return;
    if (range.size() <= kSmallRange) {
        for (std::size_t h = range.lo; h <= range.hi; ++h) out.push_back(static_cast<std::uint32_t>(h));
        insertion_sort(idx, remap_, out);
        return;
    }
    pair_string(idx, remap_, range, pairs_);
    const auto upper = static_cast<std::int32_t>(3 * remap_.size() - 1);
    const std::vector<std::int32_t> sa = detail::sais(pairs_, upper);
    out.resize(sa.size());
    for (std::size_t t = 0; t < sa.size(); ++t) out[t] = static_cast<std::uint32_t>(range.lo + sa[t]);
}

void BlockTrieBuilder::sort_leaves(const TextIndex& idx, Range block, Range window) {
    remap_.clear();
    if (window.empty()) {
        remap_.add_range(idx.text(), block);
        sort_one_range(idx, block, order_);
        return;
    }
    const bool joined = window.hi + 1 >= block.lo && block.hi + 1 >= window.lo;
    if (joined) {
        const Range hull{std::min(block.lo, window.lo), std::max(block.hi, window.hi)};
        remap_.add_range(idx.text(), hull);
        sort_one_range(idx, hull, order_);
        return;
    }
    const Range& first = window.lo < block.lo ? window : block;
    const Range& second = window.lo < block.lo ? block : window;
    remap_.add_range(idx.text(), first);
    remap_.add_range(idx.text(), second);
    sort_one_range(idx, first, order_);
    sort_one_range(idx, second, other_);
    merge_into(idx, remap_, order_, other_, merged_);
    order_.swap(merged_);
}

// Cartesian tree over the adjacent-lcp sequence of the sorted leaves. Nodes
// are appended to `postorder` when they are closed.
void BlockTrieBuilder::link(const TextIndex& idx) {
    const std::size_t m = order_.size();
    auto& t = trie_;
    t.leaf_pos.swap(order_);
    order_.clear();
    const auto& leaves = t.leaf_pos;
    t.parent.reserve(2 * m);
    t.depth.reserve(2 * m);
    t.postorder.reserve(2 * m);
    t.parent.assign(m, kNoPosition);
    t.depth.resize(m);
    for (std::size_t k = 0; k < m; ++k) t.depth[k] = static_cast<std::uint32_t>(idx.size() - leaves[k]);
    if (m == 0) return;

    auto new_internal = [&](std::uint32_t d) {
        t.parent.push_back(kNoPosition);
        t.depth.push_back(d);
        return static_cast<std::uint32_t>(t.parent.size() - 1);
    };
    stack_.clear();
    std::uint32_t cur = 0;
    t.postorder.push_back(0);
    for (std::size_t k = 1; k < m; ++k) {
        const auto h = static_cast<std::uint32_t>(idx.lcp_unchecked(leaves[k - 1], leaves[k]));
        while (!stack_.empty() && t.depth[stack_.back()] > h) {
            const std::uint32_t node = stack_.back();
            stack_.pop_back();
            t.parent[cur] = node;
            t.postorder.push_back(node);
            cur = node;
        }
        if (!stack_.empty() && t.depth[stack_.back()] == h) {
            t.parent[cur] = stack_.back();
        } else {
            const std::uint32_t node = new_internal(h);
            t.parent[cur] = node;
            stack_.push_back(node);
        }
        cur = static_cast<std::uint32_t>(k);
        t.postorder.push_back(cur);
    }
    while (!stack_.empty()) {
        const std::uint32_t node = stack_.back();
        stack_.pop_back();
        t.parent[cur] = node;
        t.postorder.push_back(node);
        cur = node;
    }
    t.root = cur;
}

const BlockTrie& BlockTrieBuilder::build(const TextIndex& idx, Range block, Range window_left,
                                         Range window_right) {
    check_range(idx, block);
    check_range(idx, window_left);
    check_range(idx, window_right);
    if (!window_left.empty() && !window_right.empty() && window_left.hi + 1 != window_right.lo)
        throw DomainError("window halves must be adjacent");

    Range window = window_left.empty() ? window_right : window_left;
    if (!window_left.empty() && !window_right.empty()) window.hi = window_right.hi;

    trie_.clear();
    sort_leaves(idx, block, window);
    link(idx);

    auto& t = trie_;
    const std::size_t nodes = t.parent.size();
    t.a.assign(nodes, kNoPosition);
    t.min_left.assign(nodes, kNoPosition);
    t.max_right.assign(nodes, kNoPosition);
    for (std::size_t k = 0; k < t.leaf_count(); ++k) {
        const std::uint32_t pos = t.leaf_pos[k];
        if (block.contains(pos)) t.a[k] = pos;
        if (window_left.contains(pos)) t.min_left[k] = pos;
        if (window_right.contains(pos)) t.max_right[k] = pos;
    }
    for (std::uint32_t u : t.postorder) {
        const std::uint32_t p = t.parent[u];
        if (p == kNoPosition) continue;
        t.a[p] = std::min(t.a[p], t.a[u]);
        t.max_right[p] = std::min(t.max_right[p], t.max_right[u]);
        if (t.min_left[u] != kNoPosition && (t.min_left[p] == kNoPosition || t.min_left[u] > t.min_left[p]))
            t.min_left[p] = t.min_left[u];
    }
    return t;
}

BlockTrie build_block_trie(const TextIndex& idx, Range block, Range window_left, Range window_right) {
    BlockTrieBuilder builder;
    return builder.build(idx, block, window_left, window_right);
}

void compute_maximal_positions(const BlockTrie& trie, Range block, std::size_t l, std::size_t r,
                               std::span<std::uint32_t> mp) {
    if (mp.size() < block.size()) throw DomainError("mp buffer smaller than block");
    std::fill(mp.begin(), mp.begin() + static_cast<std::ptrdiff_t>(block.size()), kNoPosition);
    for (std::uint32_t u : trie.postorder) {
        const std::uint32_t h = trie.a[u];
        if (h == kNoPosition || mp[h - block.lo] != kNoPosition) continue;
        const Range w = copy_window(h, l, r);
        if (trie.min_left[u] != kNoPosition && w.contains(trie.min_left[u]))
            mp[h - block.lo] = trie.min_left[u];
        else if (trie.max_right[u] != kNoPosition && w.contains(trie.max_right[u]))
            mp[h - block.lo] = trie.max_right[u];
    }
    // Fallback: the top node u with a(u) = h hands h the closer B position a(parent(u)).
    for (std::uint32_t u : trie.postorder) {
        const std::uint32_t p = trie.parent[u];
        if (p == kNoPosition) continue;
        const std::uint32_t h = trie.a[u];
        if (h == kNoPosition || h == trie.a[p] || mp[h - block.lo] != kNoPosition) continue;
        if (copy_window(h, l, r).contains(trie.a[p])) mp[h - block.lo] = trie.a[p];
    }
}

std::vector<std::uint32_t> compute_maximal_positions(const BlockTrie& trie, Range block, std::size_t l,
                                                     std::size_t r) {
    std::vector<std::uint32_t> mp(block.size());
    compute_maximal_positions(trie, block, l, r, mp);
    return mp;
}

}  // namespace bolz
