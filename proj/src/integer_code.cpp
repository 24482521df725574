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

#include "bolz/integer_code.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>

#include "bolz/errors.hpp"

namespace bolz {

const char* to_string(StreamError e) noexcept {
    switch (e) {
        case StreamError::BadMagic: return "bad magic";
        case StreamError::BadVersion: return "unsupported version";
        case StreamError::BadCodeId: return "unknown code id";
        case StreamError::BadLiteralBits: return "invalid literal width";
        case StreamError::Truncated: return "truncated stream";
        case StreamError::MalformedCodeword: return "malformed codeword";
        case StreamError::CopyBeyondOutput: return "copy beyond produced output";
        case StreamError::OutputOverrun: return "output overrun";
        case StreamError::BadLiteral: return "literal out of byte range";
        case StreamError::NonZeroPadding: return "non-zero padding";
        case StreamError::TrailingBytes: return "trailing bytes";
    }
    return "stream error";
}

namespace {

constexpr std::uint64_t kVariableMax = std::uint64_t{1} << 62;

// 1, 2, 3, 5, 8, ... up to the first value above kVariableMax.
constexpr auto kFib = [] {
    std::array<std::uint64_t, 92> f{};
    f[0] = 1;
    f[1] = 2;
    for (std::size_t k = 2; k < f.size(); ++k) f[k] = f[k - 1] + f[k - 2];
    return f;
}();

unsigned floor_log2(std::uint64_t x) { return 63u - static_cast<unsigned>(std::countl_zero(x)); }

// Index of the largest Fibonacci number <= x.
std::size_t fib_index(std::uint64_t x) {
    auto it = std::upper_bound(kFib.begin(), kFib.end(), x);
    return static_cast<std::size_t>(it - kFib.begin()) - 1;
}

void check_domain(IntegerCode code, std::uint64_t x) {
    if (code.kind == CodeKind::FixedWidth && (code.width == 0 || code.width > 64))
        throw DomainError("fixed-width code needs a width in [1, 64]");
    if (x == 0) throw DomainError("integer codes are defined on positive integers only");
    if (x > max_value(code)) throw DomainError("value exceeds the range of " + code_name(code));
}

void put_gamma(std::uint64_t x, BitWriter& out) {
    const unsigned b = floor_log2(x);
    out.put_zeros(b);
    out.put_bits(x, b + 1);
}

std::uint64_t get_gamma(BitReader& in) {
    unsigned zeros = 0;
    while (!in.get_bit()) {
        if (++zeros > 63) throw CorruptStreamError(StreamError::MalformedCodeword, "gamma prefix too long");
    }
    return (std::uint64_t{1} << zeros) | in.get_bits(zeros);
}

}  // namespace

std::uint64_t max_value(IntegerCode code) {
    if (code.kind == CodeKind::FixedWidth) {
        if (code.width >= 64) return ~std::uint64_t{0};
        return (std::uint64_t{1} << code.width) - 1;
    }
    return kVariableMax;
}

unsigned codeword_len(IntegerCode code, std::uint64_t x) {
    check_domain(code, x);
    switch (code.kind) {
        case CodeKind::FixedWidth: return code.width;
        case CodeKind::EliasGamma: return 2 * floor_log2(x) + 1;
        case CodeKind::EliasDelta: {
            const unsigned b = floor_log2(x);
            return b + 2 * floor_log2(b + 1) + 1;
        }
        case CodeKind::Fibonacci: return static_cast<unsigned>(fib_index(x)) + 2;
    }
    return 0;
}

void encode_value(IntegerCode code, std::uint64_t x, BitWriter& out) {
    check_domain(code, x);
    switch (code.kind) {
        case CodeKind::FixedWidth: out.put_bits(x, code.width); return;
        case CodeKind::EliasGamma: put_gamma(x, out); return;
        case CodeKind::EliasDelta: {
            const unsigned b = floor_log2(x);
            put_gamma(b + 1, out);
            out.put_bits(x, b);
            return;
        }
        case CodeKind::Fibonacci: {
            const std::size_t top = fib_index(x);
            std::array<bool, kFib.size()> used{};
            std::uint64_t rest = x;
            for (std::size_t k = top + 1; k-- > 0;) {
                if (kFib[k] <= rest) {
                    used[k] = true;
                    rest -= kFib[k];
                }
            }
            for (std::size_t k = 0; k <= top; ++k) out.put_bit(used[k]);
            out.put_bit(true);
            return;
        }
    }
}

std::uint64_t decode_value(IntegerCode code, BitReader& in) {
    switch (code.kind) {
        case CodeKind::FixedWidth: {
            if (code.width == 0 || code.width > 64) throw DomainError("fixed-width code needs a width in [1, 64]");
            const std::uint64_t x = in.get_bits(code.width);
            if (x == 0) throw CorruptStreamError(StreamError::MalformedCodeword, "fixed-width zero");
            return x;
        }
        case CodeKind::EliasGamma: {
            const std::uint64_t x = get_gamma(in);
            if (x > kVariableMax) throw CorruptStreamError(StreamError::MalformedCodeword, "gamma value out of range");
            return x;
        }
        case CodeKind::EliasDelta: {
            const std::uint64_t nbits = get_gamma(in);
            if (nbits > 63) throw CorruptStreamError(StreamError::MalformedCodeword, "delta length out of range");
            const auto b = static_cast<unsigned>(nbits - 1);
            const std::uint64_t x = (std::uint64_t{1} << b) | in.get_bits(b);
            if (x > kVariableMax) throw CorruptStreamError(StreamError::MalformedCodeword, "delta value out of range");
            return x;
        }
        case CodeKind::Fibonacci: {
            std::uint64_t x = 0;
            bool prev = false;
            for (std::size_t k = 0;; ++k) {
                const bool bit = in.get_bit();
                if (bit && prev) break;
                if (k >= kFib.size())
                    throw CorruptStreamError(StreamError::MalformedCodeword, "fibonacci codeword too long");
                if (bit) x += kFib[k];
                prev = bit;
            }
            if (x == 0 || x > kVariableMax)
                throw CorruptStreamError(StreamError::MalformedCodeword, "fibonacci value out of range");
            return x;
        }
    }
    return 0;
}

std::uint64_t class_last(IntegerCode code, std::uint64_t x) {
    check_domain(code, x);
    const std::uint64_t cap = max_value(code);
    switch (code.kind) {
        case CodeKind::FixedWidth: return cap;
        case CodeKind::EliasGamma:
        case CodeKind::EliasDelta: {
            const unsigned b = floor_log2(x);
            return std::min(cap, (std::uint64_t{1} << (b + 1)) - 1);
        }
        case CodeKind::Fibonacci: return std::min(cap, kFib[fib_index(x) + 1] - 1);
    }
    return cap;
}

CostClassTable cost_classes(IntegerCode code, std::uint64_t lo, std::uint64_t hi) {
    if (lo == 0 || lo > hi) throw DomainError("cost_classes needs 1 <= lo <= hi");
    check_domain(code, hi);
    CostClassTable table;
    table.domain_max = hi;
    for (std::uint64_t x = lo;;) {
        const std::uint64_t end = std::min(class_last(code, x), hi);
        table.classes.push_back({x, end, codeword_len(code, x)});
        if (end == hi) break;
        x = end + 1;
    }
    return table;
}

std::size_t class_count(IntegerCode code, std::uint64_t n) {
    return n == 0 ? 0 : cost_classes(code, 1, n).size();
}

std::optional<std::uint8_t> code_id(IntegerCode code) {
    switch (code.kind) {
        case CodeKind::FixedWidth: return code.width == 32 ? std::optional<std::uint8_t>(0) : std::nullopt;
        case CodeKind::EliasGamma: return 1;
        case CodeKind::EliasDelta: return 2;
        case CodeKind::Fibonacci: return 3;
    }
    return std::nullopt;
}

std::optional<IntegerCode> code_from_id(std::uint8_t id) {
    switch (id) {
        case 0: return IntegerCode::fixed(32);
        case 1: return IntegerCode::gamma();
        case 2: return IntegerCode::delta();
        case 3: return IntegerCode::fibonacci();
        default: return std::nullopt;
    }
}

std::optional<IntegerCode> parse_code_name(std::string_view name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "gamma") return IntegerCode::gamma();
    if (s == "delta") return IntegerCode::delta();
    if (s == "fib" || s == "fibonacci") return IntegerCode::fibonacci();
    if (s == "fixed") return IntegerCode::fixed(32);
    if (s.starts_with("fixed")) {
        unsigned w = 0;
        const char* first = s.data() + 5;
        const char* last = s.data() + s.size();
        auto [ptr, ec] = std::from_chars(first, last, w);
        if (ec == std::errc{} && ptr == last && w >= 1 && w <= 64) return IntegerCode::fixed(w);
    }
    return std::nullopt;
}

std::string code_name(IntegerCode code) {
    switch (code.kind) {
        case CodeKind::FixedWidth: return "fixed" + std::to_string(code.width);
        case CodeKind::EliasGamma: return "gamma";
        case CodeKind::EliasDelta: return "delta";
        case CodeKind::Fibonacci: return "fib";
    }
    return "?";
}

}  // namespace bolz
