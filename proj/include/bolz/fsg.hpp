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

#ifndef BOLZ_FSG_HPP
#define BOLZ_FSG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bolz/integer_code.hpp"
#include "bolz/parsing.hpp"
#include "bolz/suffix_index.hpp"
#include "bolz/window_trie.hpp"

namespace bolz {

using MaximalEdge = Edge;

struct LengthStep {
    std::uint64_t length;
    unsigned cost;
    friend bool operator==(const LengthStep&, const LengthStep&) = default;
};

/// One step per length-code class meeting [prev_len + 1, cand_len], each at
/// the longest length of that class inside the interval.
std::vector<LengthStep> subdivide_length_classes(std::uint64_t prev_len, std::uint64_t cand_len,
                                                 IntegerCode length_code);

/// Largest distance a parse may use: min(n, window, what the distance code can carry).
std::size_t effective_max_distance(std::size_t n, const CostModel& model, std::optional<std::size_t> window);

/// Generates the maximal outgoing edges of each vertex on the fly, one pass
/// per distance cost class. Each pass keeps the maximal positions of its
/// current block of |I_k| vertices; the passes advance together as vertices
/// are visited, so retained state is sum |I_k| = O(n) entries.
///
/// Vertices must be visited in strictly increasing order.
class ForwardStarGenerator {
public:
    ForwardStarGenerator(const TextIndex& idx, const CostModel& model,
                         std::optional<std::size_t> max_distance = std::nullopt);

    std::size_t pass_count() const noexcept { return passes_.size(); }

    /// Distance classes [l, r] (unshifted distances) with their distance-code cost.
    std::vector<CostClass> distance_classes() const;

    /// Literal edge first, then copy edges by increasing length.
    void forward_star(std::size_t i, std::vector<MaximalEdge>& out);
    std::vector<MaximalEdge> forward_star(std::size_t i);

    /// Maximal-position slots held across all passes.
    std::size_t resident_entries() const noexcept;

private:
    struct ClassPass {
        std::size_t l;
        std::size_t r;
        unsigned cost;
        Range block;
        std::vector<std::uint32_t> mp;
    };

    void load_block(ClassPass& pass, std::size_t i);

    const TextIndex& idx_;
    CostModel model_;
    std::vector<ClassPass> passes_;
    BlockTrieBuilder builder_;
    std::size_t next_ = 0;
};

}  // namespace bolz

#endif  // BOLZ_FSG_HPP
