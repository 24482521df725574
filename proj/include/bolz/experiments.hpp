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

#ifndef BOLZ_EXPERIMENTS_HPP
#define BOLZ_EXPERIMENTS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bolz/integer_code.hpp"
#include "bolz/parsing.hpp"

namespace bolz {

inline constexpr unsigned kMaxGapFamilyIndex = 24;

/// S_l = b a^l c^(2^l) (ba)(baa)...(ba^l). Throws DomainError unless 1 <= l <= 24.
std::vector<std::uint8_t> generate_gap_family(unsigned l);
std::size_t gap_family_length(unsigned l);

/// Reference parse of S_l whose cost bounds the optimum from above.
Parsing ropt_parse(unsigned l, const CostModel& model);

struct GapReportRow {
    unsigned l = 0;
    std::size_t n = 0;
    std::uint64_t greedy_bits = 0;
    std::uint64_t optimal_bits = 0;
    double ratio = 0.0;
    std::size_t greedy_phrases = 0;
    std::size_t optimal_phrases = 0;
};

std::vector<GapReportRow> run_gap_experiment(unsigned l_min, unsigned l_max, const CostModel& model);

inline constexpr const char* kGapCsvHeader = "l,n,greedy_bits,optimal_bits,ratio,greedy_phrases,optimal_phrases";

void write_gap_csv(std::ostream& out, const std::vector<GapReportRow>& rows);
std::string gap_csv(const std::vector<GapReportRow>& rows);

/// Deterministic text mixing words, digits, punctuation and repeated
/// fragments. Same (n, seed) gives the same bytes.
std::vector<std::uint8_t> generate_mixed_text(std::size_t n, std::uint64_t seed = 1);

}  // namespace bolz

#endif  // BOLZ_EXPERIMENTS_HPP
