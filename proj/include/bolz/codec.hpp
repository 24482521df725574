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

#ifndef BOLZ_CODEC_HPP
#define BOLZ_CODEC_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bolz/integer_code.hpp"
#include "bolz/parsing.hpp"

namespace bolz {

enum class ParserKind { Optimal, Greedy };

struct CompressOptions {
    CostModel model;
    std::optional<std::size_t> max_distance;  // nullopt: unbounded
    ParserKind parser = ParserKind::Optimal;
};

/// Fixed-size container header; see FORMAT.md.
struct ContainerHeader {
    static constexpr std::array<std::uint8_t, 4> kMagic{'B', 'O', 'L', 'Z'};
    static constexpr std::uint8_t kVersion = 1;
    static constexpr std::size_t kSize = 24;

    std::uint8_t f_code_id = 1;
    std::uint8_t g_code_id = 1;
    std::uint8_t literal_bits = 8;
    std::uint64_t max_distance = 0;  // 0: unbounded
    std::uint64_t original_length = 0;

    std::array<std::uint8_t, kSize> serialize() const;
    /// Throws CorruptStreamError on short input, bad magic, version, code id
    /// or literal width.
    static ContainerHeader parse(std::span<const std::uint8_t> bytes);
};

/// Literal widths the format accepts.
inline constexpr unsigned kMinLiteralBits = 1;
inline constexpr unsigned kMaxLiteralBits = 32;

/// Phrase bitstream: f(d + 1), then literal_bits raw bits (d = 0) or g(len).
/// MSB-first, zero-padded to a byte boundary.
std::vector<std::uint8_t> encode_phrases(const Parsing& parsing, const CostModel& model);

struct CompressResult {
    std::vector<std::uint8_t> bytes;
    Parsing parsing;
    std::uint64_t payload_bits = 0;
};

/// Throws DomainError when the model has no container id, a literal does not
/// fit literal_bits, or the window is 0.
CompressResult compress_detailed(std::span<const std::uint8_t> text, const CompressOptions& options);
std::vector<std::uint8_t> compress(std::span<const std::uint8_t> text, const CompressOptions& options);

/// Throws CorruptStreamError on any malformed stream; nothing is returned then.
std::vector<std::uint8_t> decompress(std::span<const std::uint8_t> bytes);

}  // namespace bolz

#endif  // BOLZ_CODEC_HPP
