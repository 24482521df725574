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

#include "bolz/suffix_index.hpp"

#include <algorithm>
#include <bit>

#include "bolz/errors.hpp"

namespace bolz {

using Index = std::int32_t;

namespace detail {

// Induced sorting (SA-IS) over symbols in [0, upper]. The implicit terminator
// is smaller than every symbol.
std::vector<Index> sais(std::span<const Index> s, Index upper) {
    const auto n = static_cast<Index>(s.size());
    if (n == 0) return {};
    if (n == 1) return {0};
    if (n == 2) return s[0] < s[1] ? std::vector<Index>{0, 1} : std::vector<Index>{1, 0};

    std::vector<Index> sa(static_cast<std::size_t>(n));
    std::vector<bool> is_s(static_cast<std::size_t>(n));  // S-type; the last symbol is L-type
    for (Index i = n - 2; i >= 0; --i) is_s[i] = s[i] == s[i + 1] ? is_s[i + 1] : s[i] < s[i + 1];

    // bucket_begin[c]: first slot of bucket c; s_begin[c]: first S-type slot of bucket c.
    // An S-type symbol is never `upper`, so bucket_begin[c + 1] is in range below.
    const auto buckets = static_cast<std::size_t>(upper) + 1;
    std::vector<Index> bucket_begin(buckets), s_begin(buckets);
    for (Index i = 0; i < n; ++i) {
        if (!is_s[i])
            ++s_begin[s[i]];
        else
            ++bucket_begin[s[i] + 1];
    }
    for (Index c = 0; c <= upper; ++c) {
        s_begin[c] += bucket_begin[c];
        if (c < upper) bucket_begin[c + 1] += s_begin[c];
    }

    std::vector<Index> cursor(buckets);
    auto induce = [&](const std::vector<Index>& lms) {
        std::fill(sa.begin(), sa.end(), -1);
        std::copy(s_begin.begin(), s_begin.end(), cursor.begin());
        for (Index d : lms) {
            if (d == n) continue;
            sa[cursor[s[d]]++] = d;
        }
        std::copy(bucket_begin.begin(), bucket_begin.end(), cursor.begin());
        sa[cursor[s[n - 1]]++] = n - 1;
        for (Index k = 0; k < n; ++k) {
            const Index v = sa[k];
            if (v >= 1 && !is_s[v - 1]) sa[cursor[s[v - 1]]++] = v - 1;
        }
        std::copy(bucket_begin.begin(), bucket_begin.end(), cursor.begin());
        for (Index k = n - 1; k >= 0; --k) {
            const Index v = sa[k];
            if (v >= 1 && is_s[v - 1]) sa[--cursor[s[v - 1] + 1]] = v - 1;
        }
    };

    std::vector<Index> lms_id(static_cast<std::size_t>(n) + 1, -1);
    std::vector<Index> lms;
    for (Index i = 1; i < n; ++i) {
        if (!is_s[i - 1] && is_s[i]) {
            lms_id[i] = static_cast<Index>(lms.size());
            lms.push_back(i);
        }
    }
    const auto m = static_cast<Index>(lms.size());
    induce(lms);
    if (m == 0) return sa;

    std::vector<Index> sorted_lms;
    sorted_lms.reserve(static_cast<std::size_t>(m));
    for (Index v : sa)
        if (lms_id[v] != -1) sorted_lms.push_back(v);

    // Name LMS substrings; equal names for identical substrings.
    std::vector<Index> reduced(static_cast<std::size_t>(m));
    Index name = 0;
    reduced[lms_id[sorted_lms[0]]] = 0;
    for (Index k = 1; k < m; ++k) {
        Index l = sorted_lms[k - 1], r = sorted_lms[k];
        const Index end_l = lms_id[l] + 1 < m ? lms[lms_id[l] + 1] : n;
        const Index end_r = lms_id[r] + 1 < m ? lms[lms_id[r] + 1] : n;
        bool same = end_l - l == end_r - r;
        if (same) {
            while (l < end_l && s[l] == s[r]) {
                ++l;
                ++r;
            }
            if (l == n || s[l] != s[r]) same = false;
        }
        if (!same) ++name;
        reduced[lms_id[sorted_lms[k]]] = name;
    }

    const std::vector<Index> reduced_sa = sais(reduced, name);
    for (Index k = 0; k < m; ++k) sorted_lms[k] = lms[reduced_sa[k]];
    induce(sorted_lms);
    return sa;
}

}  // namespace detail

namespace {

std::vector<std::uint32_t> to_unsigned(const std::vector<Index>& sa) {
    return {sa.begin(), sa.end()};
}

}  // namespace

std::vector<std::uint32_t> build_suffix_array(std::span<const std::uint32_t> s, std::uint32_t upper) {
    std::vector<Index> symbols(s.begin(), s.end());
    for (Index c : symbols)
        if (c < 0 || static_cast<std::uint32_t>(c) > upper) throw DomainError("symbol exceeds alphabet bound");
    return to_unsigned(detail::sais(symbols, static_cast<Index>(upper)));
}

std::vector<std::uint32_t> build_suffix_array(std::span<const std::uint8_t> text) {
    std::vector<Index> symbols(text.begin(), text.end());
    return to_unsigned(detail::sais(symbols, 255));
}

RangeMin::RangeMin(std::span<const std::uint32_t> values) : values_(values), masks_(values.size()) {
    const std::size_t n = values.size();
    const std::size_t blocks = (n + 63) / 64;
    std::vector<std::uint32_t> block_min(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t first = b * 64;
        const std::size_t last = std::min(n, first + 64);
        std::uint64_t stack = 0;
        std::uint32_t lo = values[first];
        for (std::size_t i = first; i < last; ++i) {
            // Drop stacked positions whose value is not below values[i].
            while (stack != 0) {
                const auto top = static_cast<std::size_t>(63 - std::countl_zero(stack));
                if (values[first + top] < values[i]) break;
                stack ^= std::uint64_t{1} << top;
            }
            stack |= std::uint64_t{1} << (i - first);
            masks_[i] = stack;
            lo = std::min(lo, values[i]);
        }
        block_min[b] = lo;
    }
    sparse_.push_back(std::move(block_min));
    for (std::size_t width = 2; width <= blocks; width *= 2) {
        const auto& prev = sparse_.back();
        std::vector<std::uint32_t> level(blocks - width + 1);
        for (std::size_t b = 0; b < level.size(); ++b) level[b] = std::min(prev[b], prev[b + width / 2]);
        sparse_.push_back(std::move(level));
    }
}

std::size_t RangeMin::in_block(std::size_t l, std::size_t r) const {
    const std::size_t first = l & ~std::size_t{63};
    const std::uint64_t live = masks_[r] & (~std::uint64_t{0} << (l - first));
    return first + static_cast<std::size_t>(std::countr_zero(live));
}

std::uint32_t RangeMin::query(std::size_t l, std::size_t r) const {
    const std::size_t bl = l / 64, br = r / 64;
    if (bl == br) return values_[in_block(l, r)];
    std::uint32_t best = std::min(values_[in_block(l, bl * 64 + 63)], values_[in_block(br * 64, r)]);
    if (bl + 1 < br) {
        const std::size_t lo = bl + 1, count = br - lo;
        const auto k = static_cast<std::size_t>(std::bit_width(count) - 1);
        best = std::min({best, sparse_[k][lo], sparse_[k][br - (std::size_t{1} << k)]});
    }
    return best;
}

TextIndex::TextIndex(std::span<const std::uint8_t> text) : text_(text.begin(), text.end()) {
    const std::size_t n = text_.size();
    sa_ = build_suffix_array(text_);
    rank_.resize(n);
    for (std::size_t t = 0; t < n; ++t) rank_[sa_[t]] = static_cast<std::uint32_t>(t);

    // Kasai et al.
    lcp_.assign(n, 0);
    std::size_t h = 0;
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t r = rank_[a];
        if (r == 0) {
            h = 0;
            continue;
        }
        const std::size_t b = sa_[r - 1];
        while (a + h < n && b + h < n && text_[a + h] == text_[b + h]) ++h;
        lcp_[r] = static_cast<std::uint32_t>(h);
        if (h > 0) --h;
    }
    rmq_ = RangeMin(lcp_);
}

std::size_t TextIndex::lcp_unchecked(std::size_t a, std::size_t b) const noexcept {
    const std::size_t n = text_.size();
    if (a == b) return n - a;
    // Most pairs mismatch early; a short scan avoids three random accesses.
    const std::size_t room = n - std::max(a, b);
    const std::size_t probe = std::min<std::size_t>(room, 16);
    for (std::size_t k = 0; k < probe; ++k)
        if (text_[a + k] != text_[b + k]) return k;
    if (probe == room) return room;
    std::size_t ra = rank_[a], rb = rank_[b];
    if (ra > rb) std::swap(ra, rb);
    return rmq_.query(ra + 1, rb);
}

std::size_t TextIndex::lcp_query(std::size_t a, std::size_t b) const {
    if (a >= size() || b >= size()) throw DomainError("suffix position out of range");
    return lcp_unchecked(a, b);
}

std::strong_ordering TextIndex::compare_suffixes(std::size_t a, std::size_t b) const {
    if (a >= size() || b >= size()) throw DomainError("suffix position out of range");
    if (a == b) return std::strong_ordering::equal;
    const std::size_t l = lcp_unchecked(a, b);
    if (a + l == size()) return std::strong_ordering::less;
    if (b + l == size()) return std::strong_ordering::greater;
    return text_[a + l] <=> text_[b + l];
}

}  // namespace bolz
