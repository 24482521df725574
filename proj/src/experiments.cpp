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

#include "bolz/experiments.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>

#include "bolz/errors.hpp"
#include "bolz/parser.hpp"

namespace bolz {

namespace {

void check_index(unsigned l) {
    if (l < 1 || l > kMaxGapFamilyIndex)
        throw DomainError("gap family index must be in [1, 24], got " + std::to_string(l));
}

}  // namespace

std::size_t gap_family_length(unsigned l) {
    check_index(l);
    return 1 + 2 * std::size_t{l} + (std::size_t{1} << l) + std::size_t{l} * (l + 1) / 2;
}

std::vector<std::uint8_t> generate_gap_family(unsigned l) {
    std::vector<std::uint8_t> s;
    s.reserve(gap_family_length(l));
    s.push_back('b');
    s.insert(s.end(), l, 'a');
    s.insert(s.end(), std::size_t{1} << l, 'c');
    for (unsigned i = 1; i <= l; ++i) {
        s.push_back('b');
        s.insert(s.end(), i, 'a');
    }
    return s;
}

Parsing ropt_parse(unsigned l, const CostModel& model) {
    check_index(l);
    std::vector<Phrase> ph;
    ph.push_back(Phrase::literal('b'));
    ph.push_back(Phrase::literal('a'));
    if (l > 1) ph.push_back(Phrase::copy(1, l - 1));
    ph.push_back(Phrase::literal('c'));
    ph.push_back(Phrase::copy(1, (std::uint64_t{1} << l) - 1));
    ph.push_back(Phrase::literal('b'));
    ph.push_back(Phrase::literal('a'));
    for (unsigned i = 2; i <= l; ++i) {
        ph.push_back(Phrase::copy(i, i));
        ph.push_back(Phrase::copy(1, 1));
    }
    Parsing p;
    p.phrases = std::move(ph);
    p.total_bits = parse_cost(p, model);
    return p;
}

std::vector<GapReportRow> run_gap_experiment(unsigned l_min, unsigned l_max, const CostModel& model) {
    std::vector<GapReportRow> rows;
    for (unsigned l = l_min; l <= l_max; ++l) {
        const auto text = generate_gap_family(l);
        const Parsing greedy = greedy_parse(text, model);
        const Parsing optimal = optimal_parse(text, model);
        GapReportRow row;
        row.l = l;
        row.n = text.size();
        row.greedy_bits = greedy.total_bits;
        row.optimal_bits = optimal.total_bits;
        row.ratio = static_cast<double>(greedy.total_bits) / static_cast<double>(optimal.total_bits);
        row.greedy_phrases = greedy.phrases.size();
        row.optimal_phrases = optimal.phrases.size();
        rows.push_back(row);
    }
    return rows;
}

void write_gap_csv(std::ostream& out, const std::vector<GapReportRow>& rows) {
    out << kGapCsvHeader << '\n';
    for (const auto& r : rows) {
        char ratio[32];
        std::snprintf(ratio, sizeof ratio, "%.6f", r.ratio);
        out << r.l << ',' << r.n << ',' << r.greedy_bits << ',' << r.optimal_bits << ',' << ratio << ','
            << r.greedy_phrases << ',' << r.optimal_phrases << '\n';
    }
}

std::string gap_csv(const std::vector<GapReportRow>& rows) {
    std::ostringstream out;
    write_gap_csv(out, rows);
    return out.str();
}

std::vector<std::uint8_t> generate_mixed_text(std::size_t n, std::uint64_t seed) {
    static constexpr std::array<std::string_view, 24> kWords{
        "the",   "of",     "and",    "parse", "string", "window", "edge",   "cost",
        "suffix", "array", "vertex", "block", "class",  "code",   "length", "distance",
        "a",     "to",     "in",     "is",    "that",   "with",   "for",    "by"};
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> out;
    out.reserve(n);
    auto pick = [&](std::uint64_t bound) { return static_cast<std::size_t>(rng() % bound); };
    while (out.size() < n) {
        const std::size_t kind = pick(100);
        if (kind < 60) {
            const auto w = kWords[pick(kWords.size())];
            out.insert(out.end(), w.begin(), w.end());
            out.push_back(pick(10) == 0 ? '.' : ' ');
        } else if (kind < 75) {
            const std::size_t digits = 1 + pick(6);
            for (std::size_t k = 0; k < digits; ++k) out.push_back(static_cast<std::uint8_t>('0' + pick(10)));
            out.push_back(' ');
        } else if (kind < 85) {
            const std::size_t len = 1 + pick(12);
            for (std::size_t k = 0; k < len; ++k) out.push_back(static_cast<std::uint8_t>(pick(256)));
        } else if (!out.empty()) {
            // Repeat an earlier fragment, near or far.
            const std::size_t back = 1 + pick(pick(4) == 0 ? out.size() : std::min<std::size_t>(out.size(), 4096));
            const std::size_t len = 4 + pick(60);
            const std::size_t from = out.size() - back;
            for (std::size_t k = 0; k < len; ++k) {
                const std::uint8_t c = out[from + k];
                out.push_back(c);
            }
        }
    }
    out.resize(n);
    return out;
}

}  // namespace bolz
