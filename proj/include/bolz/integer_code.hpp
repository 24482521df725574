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

#ifndef BOLZ_INTEGER_CODE_HPP
#define BOLZ_INTEGER_CODE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bolz/bit_io.hpp"

namespace bolz {

enum class CodeKind : std::uint8_t { FixedWidth, EliasGamma, EliasDelta, Fibonacci };

/// A prefix-free code over the positive integers whose codeword length is
/// non-decreasing in the encoded value.
struct IntegerCode {
    CodeKind kind = CodeKind::EliasGamma;
    unsigned width = 0;  // FixedWidth only

    static constexpr IntegerCode fixed(unsigned bits) { return {CodeKind::FixedWidth, bits}; }
    static constexpr IntegerCode gamma() { return {CodeKind::EliasGamma, 0}; }
    static constexpr IntegerCode delta() { return {CodeKind::EliasDelta, 0}; }
    static constexpr IntegerCode fibonacci() { return {CodeKind::Fibonacci, 0}; }

    friend constexpr bool operator==(const IntegerCode&, const IntegerCode&) = default;
};

/// Largest value the code accepts.
std::uint64_t max_value(IntegerCode code);

/// Exact length in bits of the codeword for x. Throws DomainError for x = 0
/// or x > max_value(code).
unsigned codeword_len(IntegerCode code, std::uint64_t x);

void encode_value(IntegerCode code, std::uint64_t x, BitWriter& out);

/// Reads one codeword. Throws CorruptStreamError on truncated or malformed input.
std::uint64_t decode_value(IntegerCode code, BitReader& in);

/// Largest y >= x with codeword_len(y) == codeword_len(x), capped at max_value.
std::uint64_t class_last(IntegerCode code, std::uint64_t x);

struct CostClass {
    std::uint64_t lo;
    std::uint64_t hi;
    unsigned bits;

    std::uint64_t size() const noexcept { return hi - lo + 1; }
    friend bool operator==(const CostClass&, const CostClass&) = default;
};

/// Partition of a value range into maximal runs of equal codeword length,
/// in increasing order of value (and therefore of cost).
struct CostClassTable {
    std::vector<CostClass> classes;
    std::uint64_t domain_max = 0;

    std::size_t size() const noexcept { return classes.size(); }
    bool empty() const noexcept { return classes.empty(); }
    const CostClass& operator[](std::size_t k) const { return classes[k]; }
};

/// Boundaries come from class_last, one step per class.
CostClassTable cost_classes(IntegerCode code, std::uint64_t lo, std::uint64_t hi);

/// Number of distinct codeword lengths over [1, n]; 0 when n = 0.
std::size_t class_count(IntegerCode code, std::uint64_t n);

/// Container-format identifiers: 0 = FixedWidth(32), 1 = gamma, 2 = delta,
/// 3 = Fibonacci. Other fixed widths have no id.
std::optional<std::uint8_t> code_id(IntegerCode code);
std::optional<IntegerCode> code_from_id(std::uint8_t id);

/// "fixed" (32 bits), "fixedN", "gamma", "delta", "fib"/"fibonacci".
std::optional<IntegerCode> parse_code_name(std::string_view name);
std::string code_name(IntegerCode code);

/// Bit cost of phrases. Distances are shifted by one before encoding so that
/// the literal marker d = 0 is representable by every code.
struct CostModel {
    IntegerCode distance_code = IntegerCode::gamma();
    IntegerCode length_code = IntegerCode::gamma();
    unsigned literal_bits = 8;

    unsigned distance_cost(std::uint64_t d) const { return codeword_len(distance_code, d + 1); }
    unsigned length_cost(std::uint64_t len) const { return codeword_len(length_code, len); }
    unsigned literal_cost() const { return distance_cost(0) + literal_bits; }
    unsigned copy_cost(std::uint64_t d, std::uint64_t len) const {
        return distance_cost(d) + length_cost(len);
    }

    // Largest distance and length the codes can carry.
    std::uint64_t max_distance() const { return max_value(distance_code) - 1; }
    std::uint64_t max_length() const { return max_value(length_code); }
};

}  // namespace bolz

#endif  // BOLZ_INTEGER_CODE_HPP
