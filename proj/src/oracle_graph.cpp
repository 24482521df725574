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

#include "bolz/oracle_graph.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "bolz/fsg.hpp"

namespace bolz {

std::size_t ParseGraph::edge_count() const noexcept {
    std::size_t total = 0;
    for (const auto& fs : forward_star) total += fs.size();
    return total;
}

ParseGraph build_full_graph(std::span<const std::uint8_t> text, const CostModel& model,
                            std::optional<std::size_t> max_distance) {
    const std::size_t n = text.size();
    const std::size_t reach = effective_max_distance(n, model, max_distance);
    const std::uint64_t max_len = model.max_length();
    ParseGraph g;
    g.text.assign(text.begin(), text.end());
    g.forward_star.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& fs = g.forward_star[i];
        const auto src = static_cast<std::uint32_t>(i);
        fs.push_back({src, src + 1, 0, model.literal_cost()});
        // Scan sources right to left; each new longest match extends the
        // star with lengths only a farther source can supply.
        std::size_t covered = 0;
        const std::size_t stop = i > reach ? i - reach : 0;
        for (std::size_t p = i; p-- > stop;) {
            std::size_t len = 0;
            while (i + len < n && text[p + len] == text[i + len]) ++len;
            for (std::size_t l = covered + 1; l <= len && l <= max_len; ++l)
                fs.push_back({src, static_cast<std::uint32_t>(i + l), static_cast<std::uint32_t>(i - p),
                              model.copy_cost(i - p, l)});
            covered = std::max(covered, len);
        }
        // Targets were appended in increasing order already.
    }
    return g;
}

ParseGraph enumerate_maximal_edges(const ParseGraph& graph) {
    ParseGraph out;
    out.text = graph.text;
    out.forward_star.resize(graph.forward_star.size());
    for (std::size_t i = 0; i < graph.forward_star.size(); ++i) {
        const auto& fs = graph.forward_star[i];
        auto& kept = out.forward_star[i];
        std::vector<const Edge*> copies;
        for (const Edge& e : fs) {
            if (e.is_literal())
                kept.push_back(e);
            else
                copies.push_back(&e);
        }
        for (std::size_t k = 0; k < copies.size(); ++k) {
            const bool last = k + 1 == copies.size();
            if (last || copies[k]->cost < copies[k + 1]->cost) kept.push_back(*copies[k]);
        }
    }
    return out;
}

Parsing oracle_shortest_path(const ParseGraph& graph) {
    const std::size_t n = graph.text.size();
    constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> dist(n + 1, kInf);
    std::vector<Edge> via(n + 1);
    dist[0] = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (dist[i] == kInf) continue;
        for (const Edge& e : graph.forward_star[i]) {
            const std::uint64_t c = dist[i] + e.cost;
            std::uint64_t& best = dist[e.target];
            const Edge& cur = via[e.target];
            const bool better = c < best || (c == best && (e.length() > cur.length() ||
                                                          (e.length() == cur.length() && e.distance < cur.distance)));
            if (better) {
                best = c;
                via[e.target] = e;
            }
        }
    }
    Parsing parsing;
    if (n == 0) return parsing;
    parsing.total_bits = dist[n];
    for (std::size_t v = n; v > 0;) {
        const Edge& e = via[v];
        parsing.phrases.push_back(e.is_literal() ? Phrase::literal(graph.text[e.source])
                                                 : Phrase::copy(e.distance, e.length()));
        v = e.source;
    }
    std::reverse(parsing.phrases.begin(), parsing.phrases.end());
    return parsing;
}

std::string to_dot(const ParseGraph& graph, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=LR;\n";
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        os << "  v" << v << " [label=\"";
        if (v < graph.text.size()) {
            const unsigned char c = graph.text[v];
            if (c >= 0x20 && c < 0x7f && c != '"' && c != '\\')
                os << c;
            else
                os << "\\\\x" << std::hex << static_cast<unsigned>(c) << std::dec;
        } else {
            os << "end";
        }
        os << "\"];\n";
    }
    for (const auto& fs : graph.forward_star)
        for (const Edge& e : fs)
            os << "  v" << e.source << " -> v" << e.target << " [label=\"<" << e.distance << "," << e.length()
               << "> " << e.cost << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace bolz
