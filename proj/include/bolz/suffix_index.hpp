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

#ifndef BOLZ_SUFFIX_INDEX_HPP
#define BOLZ_SUFFIX_INDEX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bolz {

/// Suffix array of `s` by induced sorting. Symbols must lie in [0, upper].
/// Linear time; the end of the string acts as a unique smallest symbol.
std::vector<std::uint32_t> build_suffix_array(std::span<const std::uint32_t> s, std::uint32_t upper);
std::vector<std::uint32_t> build_suffix_array(std::span<const std::uint8_t> text);

namespace detail {
std::vector<std::int32_t> sais(std::span<const std::int32_t> s, std::int32_t upper);
}

/// Range-minimum over a fixed array: 64-wide blocks answered with stack
/// bitmasks, a sparse table over the block minima. O(n) words, O(1) query.
class RangeMin {
public:
    RangeMin() = default;
    explicit RangeMin(std::span<const std::uint32_t> values);

    /// min(values[l..r]), l <= r.
    std::uint32_t query(std::size_t l, std::size_t r) const;

    std::size_t size() const noexcept { return values_.size(); }

private:
    std::size_t in_block(std::size_t l, std::size_t r) const;

    std::span<const std::uint32_t> values_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::vector<std::uint32_t>> sparse_;  // sparse_[k][b] = min over blocks [b, b + 2^k)
};

/// Suffix array, inverse, LCP array and RMQ over a byte text. Positions are
/// 0-based; suffix a is text[a..n).
class TextIndex {
public:
    TextIndex() = default;
    explicit TextIndex(std::span<const std::uint8_t> text);

    TextIndex(const TextIndex&) = delete;
    TextIndex& operator=(const TextIndex&) = delete;
    TextIndex(TextIndex&&) = delete;
    TextIndex& operator=(TextIndex&&) = delete;

    std::size_t size() const noexcept { return text_.size(); }
    std::span<const std::uint8_t> text() const noexcept { return text_; }
    std::uint8_t operator[](std::size_t pos) const noexcept { return text_[pos]; }

    const std::vector<std::uint32_t>& sa() const noexcept { return sa_; }
    const std::vector<std::uint32_t>& rank() const noexcept { return rank_; }
    /// lcp()[t] = lcp(suffix sa[t-1], suffix sa[t]); lcp()[0] = 0.
    const std::vector<std::uint32_t>& lcp() const noexcept { return lcp_; }
    const RangeMin& lcp_rmq() const noexcept { return rmq_; }

    /// Longest common prefix of suffixes a and b. Throws DomainError unless
    /// both are in [0, size()).
    std::size_t lcp_query(std::size_t a, std::size_t b) const;

    /// Lexicographic order of suffixes a and b; DomainError as lcp_query.
    std::strong_ordering compare_suffixes(std::size_t a, std::size_t b) const;

    /// As lcp_query without range checks; either position may equal size(),
    /// the empty suffix.
    std::size_t lcp_unchecked(std::size_t a, std::size_t b) const noexcept;

private:
    std::vector<std::uint8_t> text_;
    std::vector<std::uint32_t> sa_;
    std::vector<std::uint32_t> rank_;
    std::vector<std::uint32_t> lcp_;
    RangeMin rmq_;
};

}  // namespace bolz

#endif  // BOLZ_SUFFIX_INDEX_HPP
