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

#include "bolz/parser.hpp"

#include <algorithm>
#include <limits>

#include "bolz/fsg.hpp"
#include "bolz/suffix_index.hpp"

namespace bolz {

namespace {

constexpr std::uint64_t kUnreached = std::numeric_limits<std::uint64_t>::max();

struct Back {
    std::uint32_t distance = 0;
    std::uint32_t length = 0;
};

// Max-segment tree over suffix ranks holding the text position of each
// inserted suffix, -1 when absent.
class RankTree {
public:
    explicit RankTree(std::size_t n) {
        while (width_ < n) width_ *= 2;
        tree_.assign(2 * width_, -1);
    }

    void set(std::size_t rank, std::int32_t value) {
        std::size_t v = rank + width_;
        tree_[v] = value;
        for (v /= 2; v >= 1; v /= 2) tree_[v] = std::max(tree_[2 * v], tree_[2 * v + 1]);
    }

    std::int32_t range_max(std::size_t lo, std::size_t hi) const {
        std::int32_t best = -1;
        for (std::size_t l = lo + width_, r = hi + width_ + 1; l < r; l /= 2, r /= 2) {
            if (l & 1) best = std::max(best, tree_[l++]);
            if (r & 1) best = std::max(best, tree_[--r]);
        }
        return best;
    }

    // Largest occupied rank below `rank`, or -1.
    std::int64_t occupied_before(std::size_t rank) const {
        std::size_t v = rank + width_;
        while (v > 1) {
            if ((v & 1) && tree_[v - 1] >= 0) return descend(v - 1, true);
            v /= 2;
        }
        return -1;
    }

    // Smallest occupied rank above `rank`, or -1.
    std::int64_t occupied_after(std::size_t rank) const {
        std::size_t v = rank + width_;
        while (v > 1) {
            if (!(v & 1) && tree_[v + 1] >= 0) return descend(v + 1, false);
            v /= 2;
        }
        return -1;
    }

private:
    std::int64_t descend(std::size_t v, bool rightmost) const {
        while (v < width_) {
            const std::size_t prefer = rightmost ? 2 * v + 1 : 2 * v;
            const std::size_t other = rightmost ? 2 * v : 2 * v + 1;
            v = tree_[prefer] >= 0 ? prefer : other;
        }
        return static_cast<std::int64_t>(v - width_);
    }

    std::size_t width_ = 1;
    std::vector<std::int32_t> tree_;
};

// Ranks whose suffix shares at least `len` symbols with the suffix at rank r.
std::pair<std::size_t, std::size_t> rank_interval(const TextIndex& idx, std::size_t r, std::size_t len) {
    const RangeMin& rmq = idx.lcp_rmq();
    std::size_t lo = 0, hi = r;  // smallest t with min(lcp[t+1..r]) >= len
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (rmq.query(mid + 1, r) >= len)
            hi = mid;
        else
            lo = mid + 1;
    }
    const std::size_t first = lo;
    lo = r;
    hi = idx.size() - 1;  // largest t with min(lcp[r+1..t]) >= len
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo + 1) / 2;
        if (rmq.query(r + 1, mid) >= len)
            lo = mid;
        else
            hi = mid - 1;
    }
    return {first, lo};
}

}  // namespace

Parsing optimal_parse(std::span<const std::uint8_t> text, const CostModel& model,
                      std::optional<std::size_t> max_distance, ParseStats* stats) {
    const std::size_t n = text.size();
    Parsing parsing;
    if (n == 0) return parsing;

    const TextIndex idx(text);
    ForwardStarGenerator fsg(idx, model, max_distance);
    if (stats) {
        *stats = ParseStats{};
        stats->distance_passes = fsg.pass_count();
    }

    std::vector<std::uint64_t> cost(n + 1, kUnreached);
    std::vector<Back> via(n + 1);
    cost[0] = 0;
    std::vector<MaximalEdge> star;
    for (std::size_t i = 0; i < n; ++i) {
        fsg.forward_star(i, star);
        const std::uint64_t base = cost[i];
        for (const MaximalEdge& e : star) {
            const std::uint64_t c = base + e.cost;
            std::uint64_t& best = cost[e.target];
            Back& back = via[e.target];
            const std::uint32_t len = e.length();
            if (c < best || (c == best && (len > back.length || (len == back.length && e.distance < back.distance)))) {
                best = c;
                back = {e.distance, len};
            }
        }
        if (stats) {
            const std::size_t copies = star.size() - 1;
            if (stats->copy_edge_histogram.size() <= copies) stats->copy_edge_histogram.resize(copies + 1);
            ++stats->copy_edge_histogram[copies];
            stats->relaxations += star.size();
            stats->max_copy_edges = std::max(stats->max_copy_edges, copies);
        }
    }

    parsing.total_bits = cost[n];
    for (std::size_t v = n; v > 0;) {
        const Back& b = via[v];
        v -= b.length;
        parsing.phrases.push_back(b.distance == 0 ? Phrase::literal(text[v]) : Phrase::copy(b.distance, b.length));
    }
    std::reverse(parsing.phrases.begin(), parsing.phrases.end());
    return parsing;
}

Parsing greedy_parse(std::span<const std::uint8_t> text, const CostModel& model,
                     std::optional<std::size_t> max_distance) {
    const std::size_t n = text.size();
    Parsing parsing;
    if (n == 0) return parsing;

    const TextIndex idx(text);
    const std::size_t reach = effective_max_distance(n, model, max_distance);
    const std::uint64_t max_len = model.max_length();
    RankTree sources(n);
    std::size_t inserted = 0, evicted = 0;

    for (std::size_t i = 0; i < n;) {
        for (; inserted < i; ++inserted) sources.set(idx.rank()[inserted], static_cast<std::int32_t>(inserted));
        for (; evicted + reach < i; ++evicted) sources.set(idx.rank()[evicted], -1);

        const std::size_t r = idx.rank()[i];
        std::size_t best = 0;
        for (const std::int64_t t : {sources.occupied_before(r), sources.occupied_after(r)})
            if (t >= 0) best = std::max(best, idx.lcp_unchecked(idx.sa()[static_cast<std::size_t>(t)], i));
        best = static_cast<std::size_t>(std::min<std::uint64_t>(best, max_len));

        if (best == 0) {
            parsing.phrases.push_back(Phrase::literal(text[i]));
            parsing.total_bits += model.literal_cost();
            ++i;
            continue;
        }
        const auto [lo, hi] = rank_interval(idx, r, best);
        const auto source = static_cast<std::size_t>(sources.range_max(lo, hi));
        const std::size_t d = i - source;
        parsing.phrases.push_back(Phrase::copy(d, best));
        parsing.total_bits += model.copy_cost(d, best);
        i += best;
    }
    return parsing;
}

}  // namespace bolz
