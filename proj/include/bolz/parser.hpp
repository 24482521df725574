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

#ifndef BOLZ_PARSER_HPP
#define BOLZ_PARSER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bolz/integer_code.hpp"
#include "bolz/parsing.hpp"

namespace bolz {

/// Counters filled in by optimal_parse when requested.
struct ParseStats {
    std::vector<std::size_t> copy_edge_histogram;  // [k] = vertices emitting k copy edges
    std::size_t relaxations = 0;
    std::size_t max_copy_edges = 0;
    std::size_t distance_passes = 0;
};

/// Bit-optimal parse: shortest path over the maximal edges, generated per
/// vertex while the vertices are scanned left to right. Equal costs prefer
/// the longer phrase, then the smaller distance.
Parsing optimal_parse(std::span<const std::uint8_t> text, const CostModel& model,
                      std::optional<std::size_t> max_distance = std::nullopt, ParseStats* stats = nullptr);

/// Longest-match parse. Each phrase copies the longest earlier match (within
/// the window), from its rightmost source; a literal when nothing matches.
Parsing greedy_parse(std::span<const std::uint8_t> text, const CostModel& model,
                     std::optional<std::size_t> max_distance = std::nullopt);

}  // namespace bolz

#endif  // BOLZ_PARSER_HPP
