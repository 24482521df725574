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

#ifndef BOLZ_ORACLE_GRAPH_HPP
#define BOLZ_ORACLE_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bolz/integer_code.hpp"
#include "bolz/parsing.hpp"

namespace bolz {

/// Explicit parse DAG: one vertex per text position plus the end vertex n.
/// forward_star[i] holds the literal edge followed by the copy edges of i in
/// increasing target order; each copy uses the rightmost earlier occurrence.
///
/// Brute force (cubic worst case); meant for validation on short inputs.
struct ParseGraph {
    std::vector<std::uint8_t> text;
    std::vector<std::vector<Edge>> forward_star;

    std::size_t vertex_count() const noexcept { return text.size() + 1; }
    std::size_t edge_count() const noexcept;
};

ParseGraph build_full_graph(std::span<const std::uint8_t> text, const CostModel& model,
                            std::optional<std::size_t> max_distance = std::nullopt);

/// Per-vertex copy edges whose successor in the same forward star costs
/// strictly more (or is absent), plus every literal edge.
ParseGraph enumerate_maximal_edges(const ParseGraph& graph);

/// Shortest path from vertex 0 to n by dynamic programming in topological
/// order. Equal costs prefer the longer phrase, then the smaller distance.
Parsing oracle_shortest_path(const ParseGraph& graph);

/// Graphviz rendering; edges labelled <d, len> / cost.
std::string to_dot(const ParseGraph& graph, const std::string& name);

}  // namespace bolz

#endif  // BOLZ_ORACLE_GRAPH_HPP
