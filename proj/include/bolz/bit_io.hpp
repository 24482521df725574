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

#ifndef BOLZ_BIT_IO_HPP
#define BOLZ_BIT_IO_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bolz/errors.hpp"

namespace bolz {

// MSB-first bit packing: the first bit written lands in bit 7 of byte 0.
class BitWriter {
public:
    void put_bit(bool bit) {
        if ((nbits_ & 7) == 0) bytes_.push_back(0);
        if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (nbits_ & 7));
        ++nbits_;
    }

    // Writes the low `count` bits of `value`, most significant first.
    void put_bits(std::uint64_t value, unsigned count) {
        while (count > 0) {
            --count;
            put_bit((value >> count) & 1u);
        }
    }

    void put_zeros(std::size_t count) {
        for (std::size_t k = 0; k < count; ++k) put_bit(false);
    }

    std::size_t bit_count() const noexcept { return nbits_; }
    const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
    std::vector<std::uint8_t> take_bytes() && { return std::move(bytes_); }

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t nbits_ = 0;
};

class BitReader {
public:
    explicit BitReader(std::span<const std::uint8_t> bytes)
        : bytes_(bytes), limit_(bytes.size() * 8) {}

    BitReader(std::span<const std::uint8_t> bytes, std::size_t bit_limit)
        : bytes_(bytes), limit_(bit_limit < bytes.size() * 8 ? bit_limit : bytes.size() * 8) {}

    bool get_bit() {
        if (pos_ >= limit_) throw CorruptStreamError(StreamError::Truncated, "bit stream exhausted");
        const bool bit = (bytes_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
        ++pos_;
        return bit;
    }

    std::uint64_t get_bits(unsigned count) {
        std::uint64_t v = 0;
        for (unsigned k = 0; k < count; ++k) v = (v << 1) | static_cast<std::uint64_t>(get_bit());
        return v;
    }

    std::size_t position() const noexcept { return pos_; }
    std::size_t remaining() const noexcept { return limit_ - pos_; }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t limit_;
    std::size_t pos_ = 0;
};

}  // namespace bolz

#endif  // BOLZ_BIT_IO_HPP
