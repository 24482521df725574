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

#include "bolz/fsg.hpp"

#include <algorithm>

#include "bolz/errors.hpp"

namespace bolz {

std::vector<LengthStep> subdivide_length_classes(std::uint64_t prev_len, std::uint64_t cand_len,
                                                 IntegerCode length_code) {
    std::vector<LengthStep> steps;
    for (std::uint64_t x = prev_len + 1; x <= cand_len;) {
        const std::uint64_t end = std::min(class_last(length_code, x), cand_len);
        steps.push_back({end, codeword_len(length_code, end)});
        x = end + 1;
    }
    return steps;
}

std::size_t effective_max_distance(std::size_t n, const CostModel& model, std::optional<std::size_t> window) {
    if (window && *window == 0) throw DomainError("window must be positive");
    std::uint64_t limit = std::min<std::uint64_t>(n, model.max_distance());
    if (window) limit = std::min<std::uint64_t>(limit, *window);
    return static_cast<std::size_t>(limit);
}

ForwardStarGenerator::ForwardStarGenerator(const TextIndex& idx, const CostModel& model,
                                           std::optional<std::size_t> max_distance)
    : idx_(idx), model_(model) {
    const std::size_t reach = effective_max_distance(idx.size(), model, max_distance);
    if (reach == 0) return;
    for (const CostClass& c : cost_classes(model.distance_code, 2, std::uint64_t{reach} + 1).classes) {
        ClassPass pass{c.lo - 1, c.hi - 1, c.bits, Range{}, {}};
        pass.mp.resize(std::min<std::size_t>(pass.r - pass.l + 1, idx.size()));
        passes_.push_back(std::move(pass));
    }
}

std::vector<CostClass> ForwardStarGenerator::distance_classes() const {
    std::vector<CostClass> out;
    for (const ClassPass& p : passes_) out.push_back({p.l, p.r, p.cost});
    return out;
}

std::size_t ForwardStarGenerator::resident_entries() const noexcept {
    std::size_t total = 0;
    for (const ClassPass& p : passes_) total += p.mp.size();
    return total;
}

void ForwardStarGenerator::load_block(ClassPass& pass, std::size_t i) {
    const std::size_t width = pass.r - pass.l + 1;
    const std::size_t lo = i / width * width;
    pass.block = Range{lo, std::min(lo + width - 1, idx_.size() - 1)};
    const auto [left, right] = block_window(pass.block, pass.l, pass.r);
    if (left.empty() && right.empty()) {
        std::fill(pass.mp.begin(), pass.mp.end(), kNoPosition);
        return;
    }
    const BlockTrie& trie = builder_.build(idx_, pass.block, left, right);
    compute_maximal_positions(trie, pass.block, pass.l, pass.r, pass.mp);
}

void ForwardStarGenerator::forward_star(std::size_t i, std::vector<MaximalEdge>& out) {
    if (i >= idx_.size()) throw DomainError("vertex has no outgoing edges");
    if (i < next_) throw UsageError("forward_star must visit vertices in increasing order");
    next_ = i + 1;

    out.clear();
    const auto src = static_cast<std::uint32_t>(i);
    out.push_back({src, src + 1, 0, model_.literal_cost()});

    const std::size_t n = idx_.size();
    const std::uint64_t length_cap = std::min<std::uint64_t>(n - i, model_.max_length());
    std::uint64_t best = 0;
    for (ClassPass& pass : passes_) {
        if (i < pass.l) break;  // this and all farther classes reach before position 0
        if (pass.block.empty() || i > pass.block.hi) load_block(pass, i);
        const std::uint32_t s = pass.mp[i - pass.block.lo];
        if (s == kNoPosition || !copy_window(i, pass.l, pass.r).contains(s)) continue;
        const std::uint64_t q = std::min<std::uint64_t>(idx_.lcp_unchecked(s, i), length_cap);
        if (q <= best) continue;
        const auto d = static_cast<std::uint32_t>(i - s);
        for (std::uint64_t x = best + 1; x <= q;) {
            const std::uint64_t len = std::min(class_last(model_.length_code, x), q);
            out.push_back({src, static_cast<std::uint32_t>(i + len), d,
                           pass.cost + codeword_len(model_.length_code, len)});
            x = len + 1;
        }
        best = q;
        if (best == length_cap) break;
    }
}

std::vector<MaximalEdge> ForwardStarGenerator::forward_star(std::size_t i) {
    std::vector<MaximalEdge> out;
    forward_star(i, out);
    return out;
}

}  // namespace bolz
