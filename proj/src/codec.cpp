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

#include "bolz/codec.hpp"

#include <algorithm>
#include <string>

#include "bolz/bit_io.hpp"
#include "bolz/errors.hpp"
#include "bolz/parser.hpp"

namespace bolz {

namespace {

void put_u64_le(std::uint8_t* out, std::uint64_t v) {
    for (int k = 0; k < 8; ++k) out[k] = static_cast<std::uint8_t>(v >> (8 * k));
}

std::uint64_t get_u64_le(const std::uint8_t* in) {
    std::uint64_t v = 0;
    for (int k = 7; k >= 0; --k) v = (v << 8) | in[k];
    return v;
}

void write_phrases(const Parsing& parsing, const CostModel& model, BitWriter& out) {
    for (const Phrase& ph : parsing.phrases) {
        encode_value(model.distance_code, ph.distance + 1, out);
        if (ph.is_literal())
            out.put_bits(ph.symbol, model.literal_bits);
        else
            encode_value(model.length_code, ph.length, out);
    }
}

}  // namespace

std::array<std::uint8_t, ContainerHeader::kSize> ContainerHeader::serialize() const {
    std::array<std::uint8_t, kSize> out{};
    std::copy(kMagic.begin(), kMagic.end(), out.begin());
    out[4] = kVersion;
    out[5] = f_code_id;
    out[6] = g_code_id;
    out[7] = literal_bits;
    put_u64_le(out.data() + 8, max_distance);
    put_u64_le(out.data() + 16, original_length);
    return out;
}

ContainerHeader ContainerHeader::parse(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 4 || !std::equal(kMagic.begin(), kMagic.end(), bytes.begin()))
        throw CorruptStreamError(StreamError::BadMagic, "not a bolz stream");
    if (bytes.size() < kSize) throw CorruptStreamError(StreamError::Truncated, "header shorter than 24 bytes");
    if (bytes[4] != kVersion)
        throw CorruptStreamError(StreamError::BadVersion, "version " + std::to_string(bytes[4]));
    ContainerHeader h;
    h.f_code_id = bytes[5];
    h.g_code_id = bytes[6];
    h.literal_bits = bytes[7];
    if (!code_from_id(h.f_code_id) || !code_from_id(h.g_code_id))
        throw CorruptStreamError(StreamError::BadCodeId, "code ids " + std::to_string(h.f_code_id) + "/" +
                                                             std::to_string(h.g_code_id));
    if (h.literal_bits < kMinLiteralBits || h.literal_bits > kMaxLiteralBits)
        throw CorruptStreamError(StreamError::BadLiteralBits, std::to_string(h.literal_bits) + " bits");
    h.max_distance = get_u64_le(bytes.data() + 8);
    h.original_length = get_u64_le(bytes.data() + 16);
    return h;
}

std::vector<std::uint8_t> encode_phrases(const Parsing& parsing, const CostModel& model) {
    BitWriter out;
    write_phrases(parsing, model, out);
    return std::move(out).take_bytes();
}

CompressResult compress_detailed(std::span<const std::uint8_t> text, const CompressOptions& options) {
    const CostModel& model = options.model;
    const auto f_id = code_id(model.distance_code);
    const auto g_id = code_id(model.length_code);
    if (!f_id || !g_id) throw DomainError("code has no container id: fixed-width codes must be 32 bits");
    if (model.literal_bits < kMinLiteralBits || model.literal_bits > kMaxLiteralBits)
        throw DomainError("literal_bits must be in [1, 32]");
    if (model.literal_bits < 8) {
        const unsigned limit = 1u << model.literal_bits;
        for (std::uint8_t c : text)
            if (c >= limit) throw DomainError("symbol does not fit in " + std::to_string(model.literal_bits) + " bits");
    }
    if (options.max_distance && *options.max_distance == 0) throw DomainError("window must be positive");

    CompressResult result;
    result.parsing = options.parser == ParserKind::Optimal ? optimal_parse(text, model, options.max_distance)
                                                           : greedy_parse(text, model, options.max_distance);
    ContainerHeader header;
    header.f_code_id = *f_id;
    header.g_code_id = *g_id;
    header.literal_bits = static_cast<std::uint8_t>(model.literal_bits);
    header.max_distance = options.max_distance.value_or(0);
    header.original_length = text.size();

    const auto head = header.serialize();
    BitWriter payload;
    write_phrases(result.parsing, model, payload);
    result.payload_bits = payload.bit_count();
    result.bytes.assign(head.begin(), head.end());
    const auto& body = payload.bytes();
    result.bytes.insert(result.bytes.end(), body.begin(), body.end());
    return result;
}

std::vector<std::uint8_t> compress(std::span<const std::uint8_t> text, const CompressOptions& options) {
    return compress_detailed(text, options).bytes;
}

std::vector<std::uint8_t> decompress(std::span<const std::uint8_t> bytes) {
    const ContainerHeader header = ContainerHeader::parse(bytes);
    const IntegerCode f = *code_from_id(header.f_code_id);
    const IntegerCode g = *code_from_id(header.g_code_id);
    const std::uint64_t n = header.original_length;
    const auto payload = bytes.subspan(ContainerHeader::kSize);

    // Every phrase costs at least one bit and yields at least one symbol only
    // when literal; copies may yield many. Cap the up-front reservation.
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(n, 64 * payload.size() + 64)));

    BitReader in(payload);
    while (out.size() < n) {
        const std::uint64_t d = decode_value(f, in) - 1;
        if (d == 0) {
            const std::uint64_t sym = in.get_bits(header.literal_bits);
            if (sym > 0xff) throw CorruptStreamError(StreamError::BadLiteral, std::to_string(sym));
            out.push_back(static_cast<std::uint8_t>(sym));
            continue;
        }
        const std::uint64_t len = decode_value(g, in);
        if (d > out.size())
            throw CorruptStreamError(StreamError::CopyBeyondOutput,
                                     "distance " + std::to_string(d) + " at " + std::to_string(out.size()));
        if (len > n - out.size())
            throw CorruptStreamError(StreamError::OutputOverrun, "copy runs past the declared length");
        const std::size_t from = out.size() - static_cast<std::size_t>(d);
        for (std::uint64_t k = 0; k < len; ++k) {
            const std::uint8_t c = out[from + k];
            out.push_back(c);
        }
    }
    const std::size_t used_bytes = (in.position() + 7) / 8;
    if (used_bytes < payload.size()) throw CorruptStreamError(StreamError::TrailingBytes, "data after last phrase");
    while (in.remaining() > 0)
        if (in.get_bit()) throw CorruptStreamError(StreamError::NonZeroPadding, "padding bits must be zero");
    return out;
}

}  // namespace bolz
