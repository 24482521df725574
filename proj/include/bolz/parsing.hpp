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

#ifndef BOLZ_PARSING_HPP
#define BOLZ_PARSING_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bolz/integer_code.hpp"

namespace bolz {

/// Literal(symbol) when distance == 0, otherwise Copy(distance, length).
struct Phrase {
    std::uint64_t distance = 0;
    std::uint64_t length = 1;
    std::uint8_t symbol = 0;

    static constexpr Phrase literal(std::uint8_t c) noexcept { return {0, 1, c}; }
    static constexpr Phrase copy(std::uint64_t d, std::uint64_t len) noexcept { return {d, len, 0}; }

    constexpr bool is_literal() const noexcept { return distance == 0; }
    friend constexpr bool operator==(const Phrase&, const Phrase&) = default;
};

struct Parsing {
    std::vector<Phrase> phrases;
    std::uint64_t total_bits = 0;

    /// Number of text symbols covered.
    std::uint64_t text_length() const noexcept;
};

/// Edge of the parse graph: vertex `source` (text position) to `target`.
/// distance == 0 marks the literal edge source -> source + 1.
struct Edge {
    std::uint32_t source = 0;
    std::uint32_t target = 0;
    std::uint32_t distance = 0;
    std::uint32_t cost = 0;

    std::uint32_t length() const noexcept { return target - source; }
    bool is_literal() const noexcept { return distance == 0; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

std::uint64_t phrase_cost(const Phrase& phrase, const CostModel& model);

/// Recomputes the bit cost of a phrase sequence. Throws CorruptStreamError if
/// a copy reaches before the start of the text or has length 0.
std::uint64_t parse_cost(const Parsing& parsing, const CostModel& model);

/// Decodes phrases; copies are replayed symbol by symbol so d < length works.
/// Throws CorruptStreamError(CopyBeyondOutput) on an invalid copy.
std::vector<std::uint8_t> expand(const Parsing& parsing);

}  // namespace bolz

#endif  // BOLZ_PARSING_HPP
