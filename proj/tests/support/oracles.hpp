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

// Brute-force reference implementations used by the tests. Nothing here calls
// into the library beyond plain data types, so a shared bug cannot hide.

#ifndef BOLZ_TESTS_ORACLES_HPP
#define BOLZ_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oracle {

using Text = std::vector<std::uint8_t>;

inline Text bytes(std::string_view s) { return Text(s.begin(), s.end()); }

inline std::string binary(std::uint64_t x) {
    std::string s;
    do {
        s.insert(s.begin(), static_cast<char>('0' + (x & 1)));
        x >>= 1;
    } while (x != 0);
    return s;
}

inline std::string gamma(std::uint64_t x) {
    const std::string b = binary(x);
    return std::string(b.size() - 1, '0') + b;
}

inline std::string delta(std::uint64_t x) {
    const std::string b = binary(x);
    return gamma(b.size()) + b.substr(1);
}

inline std::string fibonacci(std::uint64_t x) {
    std::vector<std::uint64_t> fib{1};
    for (std::uint64_t a = 1, b = 2; b <= x; b += a, a = b - a) fib.push_back(b);
    std::string s(fib.size(), '0');
    for (std::size_t k = fib.size(); k-- > 0;)
        if (fib[k] <= x) {
            s[k] = '1';
            x -= fib[k];
        }
    return s + '1';
}

inline std::string fixed(std::uint64_t x, unsigned width) {
    std::string s(width, '0');
    for (unsigned k = 0; k < width; ++k) s[width - 1 - k] = static_cast<char>('0' + ((x >> k) & 1));
    return s;
}

enum class Code { Gamma, Delta, Fib, Fixed16, Fixed32 };

inline std::string codeword(Code c, std::uint64_t x) {
    switch (c) {
        case Code::Gamma: return gamma(x);
        case Code::Delta: return delta(x);
        case Code::Fib: return fibonacci(x);
        case Code::Fixed16: return fixed(x, 16);
        case Code::Fixed32: return fixed(x, 32);
    }
    return {};
}

/// Bits of one phrase: f(d + 1) then either 8 raw bits or g(len).
struct Costs {
    Code f;
    Code g;
    unsigned literal_bits = 8;
    std::uint64_t literal() const { return codeword(f, 1).size() + literal_bits; }
    std::uint64_t copy(std::uint64_t d, std::uint64_t len) const {
        return codeword(f, d + 1).size() + codeword(g, len).size();
    }
};

/// Run-length scan of codeword lengths over [lo, hi].
struct Run {
    std::uint64_t lo, hi, bits;
    bool operator==(const Run&) const = default;
};

inline std::vector<Run> length_runs(Code c, std::uint64_t lo, std::uint64_t hi) {
    std::vector<Run> runs;
    for (std::uint64_t x = lo; x <= hi; ++x) {
        const std::uint64_t b = codeword(c, x).size();
        if (!runs.empty() && runs.back().bits == b)
            runs.back().hi = x;
        else
            runs.push_back({x, x, b});
    }
    return runs;
}

inline std::size_t lcp(const Text& s, std::size_t a, std::size_t b) {
    std::size_t k = 0;
    while (a + k < s.size() && b + k < s.size() && s[a + k] == s[b + k]) ++k;
    return k;
}

inline std::vector<std::uint32_t> suffix_array(const Text& s) {
    std::vector<std::uint32_t> sa(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) sa[k] = static_cast<std::uint32_t>(k);
    std::sort(sa.begin(), sa.end(), [&](std::uint32_t a, std::uint32_t b) {
        return std::lexicographical_compare(s.begin() + a, s.end(), s.begin() + b, s.end());
    });
    return sa;
}

/// Suffixes rewritten through a first-occurrence map of the symbols in the
/// given ranges; other symbols become 256 + c.
inline std::vector<std::uint32_t> remapped_sort(const Text& s, std::vector<std::uint32_t> positions,
                                                const std::vector<std::pair<std::size_t, std::size_t>>& ranges) {
    std::vector<std::uint32_t> code(256, std::numeric_limits<std::uint32_t>::max());
    std::uint32_t next = 0;
    for (auto [lo, hi] : ranges)
        for (std::size_t k = lo; k <= hi && k < s.size(); ++k)
            if (code[s[k]] == std::numeric_limits<std::uint32_t>::max()) code[s[k]] = next++;
    auto m = [&](std::uint8_t c) { return code[c] == std::numeric_limits<std::uint32_t>::max() ? 256u + c : code[c]; };
    std::sort(positions.begin(), positions.end(), [&](std::uint32_t a, std::uint32_t b) {
        for (std::size_t k = 0;; ++k) {
            const bool ea = a + k >= s.size(), eb = b + k >= s.size();
            if (ea || eb) return ea && !eb;
            const auto x = m(s[a + k]), y = m(s[b + k]);
            if (x != y) return x < y;
        }
    });
    return positions;
}

/// Longest match of suffix h against sources s in [h - r, h - l] (clipped at 0).
inline std::size_t window_max_lcp(const Text& s, std::size_t h, std::size_t l, std::size_t r) {
    if (h < l) return 0;
    std::size_t best = 0;
    for (std::size_t src = h >= r ? h - r : 0; src <= h - l; ++src) best = std::max(best, lcp(s, src, h));
    return best;
}

/// Minimum bit cost over every parsing, all distances and lengths tried.
/// Overlapping copies allowed. max_distance == 0 means unbounded.
inline std::uint64_t optimal_bits(const Text& s, const Costs& costs, std::size_t max_distance = 0) {
    const std::size_t n = s.size();
    constexpr std::uint64_t inf = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> best(n + 1, inf);
    best[n] = 0;
    for (std::size_t i = n; i-- > 0;) {
        std::uint64_t b = costs.literal() + best[i + 1];
        for (std::size_t d = 1; d <= i; ++d) {
            if (max_distance != 0 && d > max_distance) break;
            for (std::size_t len = 1; i + len <= n && s[i + len - 1] == s[i + len - 1 - d]; ++len)
                b = std::min(b, costs.copy(d, len) + best[i + len]);
        }
        best[i] = b;
    }
    return best[0];
}

/// Every parsing of s, enumerated explicitly (exponential; n <= 8).
inline std::uint64_t enumerate_parsings(const Text& s, const Costs& costs, std::size_t i = 0) {
    if (i == s.size()) return 0;
    std::uint64_t b = costs.literal() + enumerate_parsings(s, costs, i + 1);
    for (std::size_t len = 1; i + len <= s.size(); ++len)
        for (std::size_t d = 1; d <= i; ++d) {
            bool ok = true;
            for (std::size_t k = 0; k < len && ok; ++k) ok = s[i + k] == s[i + k - d];
            if (ok) b = std::min(b, costs.copy(d, len) + enumerate_parsings(s, costs, i + len));
        }
    return b;
}

/// Phrase count of the longest-match parse (unbounded window).
inline std::size_t greedy_phrase_count(const Text& s) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < s.size(); ++count) {
        std::size_t best = 0;
        for (std::size_t src = 0; src < i; ++src) best = std::max(best, lcp(s, src, i));
        i += std::max<std::size_t>(best, 1);
    }
    return count;
}

/// Bits and phrase count of the longest-match parse taking the closest
/// source among the longest matches (unbounded window).
inline std::pair<std::uint64_t, std::size_t> greedy_bits(const Text& s, const Costs& costs) {
    std::uint64_t bits = 0;
    std::size_t phrases = 0;
    for (std::size_t i = 0; i < s.size(); ++phrases) {
        std::size_t best = 0, dist = 0;
        for (std::size_t src = 0; src < i; ++src) {
            const std::size_t q = lcp(s, src, i);
            if (q > 0 && q >= best) best = q, dist = i - src;
        }
        bits += best == 0 ? costs.literal() : costs.copy(dist, best);
        i += std::max<std::size_t>(best, 1);
    }
    return {bits, phrases};
}

/// Minimum-cost parse with its phrase count; ties prefer fewer phrases.
inline std::pair<std::uint64_t, std::size_t> optimal_bits_and_phrases(const Text& s, const Costs& costs) {
    const std::size_t n = s.size();
    constexpr std::uint64_t inf = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::pair<std::uint64_t, std::size_t>> best(n + 1, {inf, 0});
    best[n] = {0, 0};
    for (std::size_t i = n; i-- > 0;) {
        auto b = std::make_pair(costs.literal() + best[i + 1].first, best[i + 1].second + 1);
        for (std::size_t d = 1; d <= i; ++d)
            for (std::size_t len = 1; i + len <= n && s[i + len - 1] == s[i + len - 1 - d]; ++len)
                b = std::min(b, std::make_pair(costs.copy(d, len) + best[i + len].first, best[i + len].second + 1));
        best[i] = b;
    }
    return best[0];
}

/// b a^l c^(2^l) (ba)(baa)...(ba^l), built independently of the library.
inline Text gap_family(unsigned l) {
    std::string s = "b" + std::string(l, 'a') + std::string(std::size_t{1} << l, 'c');
    for (unsigned i = 1; i <= l; ++i) s += "b" + std::string(i, 'a');
    return bytes(s);
}

inline Text random_text(std::mt19937_64& rng, std::size_t n, unsigned sigma) {
    Text s(n);
    for (auto& c : s) c = static_cast<std::uint8_t>('a' + rng() % sigma);
    return s;
}

/// Random text with planted repeats, so long copies are common.
inline Text repetitive_text(std::mt19937_64& rng, std::size_t n, unsigned sigma) {
    Text s;
    while (s.size() < n) {
        if (s.size() > 4 && rng() % 2 == 0) {
            const std::size_t from = rng() % s.size();
            const std::size_t len = 1 + rng() % 24;
            for (std::size_t k = 0; k < len && s.size() < n; ++k) s.push_back(s[from + k]);
        } else {
            s.push_back(static_cast<std::uint8_t>('a' + rng() % sigma));
        }
    }
    return s;
}

}  // namespace oracle

#endif  // BOLZ_TESTS_ORACLES_HPP
