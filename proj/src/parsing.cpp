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

#include "bolz/parsing.hpp"

#include <string>

#include "bolz/errors.hpp"

namespace bolz {

namespace {

void validate(const Phrase& ph, std::uint64_t produced) {
    if (ph.is_literal()) {
        if (ph.length != 1) throw CorruptStreamError(StreamError::CopyBeyondOutput, "literal with length != 1");
        return;
    }
    if (ph.length == 0) throw CorruptStreamError(StreamError::CopyBeyondOutput, "copy of length 0");
    if (ph.distance > produced)
        throw CorruptStreamError(StreamError::CopyBeyondOutput,
                                 "copy distance " + std::to_string(ph.distance) + " at position " +
                                     std::to_string(produced));
}

}  // namespace

std::uint64_t Parsing::text_length() const noexcept {
    std::uint64_t total = 0;
    for (const Phrase& ph : phrases) total += ph.length;
    return total;
}

std::uint64_t phrase_cost(const Phrase& phrase, const CostModel& model) {
    if (phrase.is_literal()) return model.literal_cost();
    return model.copy_cost(phrase.distance, phrase.length);
}

std::uint64_t parse_cost(const Parsing& parsing, const CostModel& model) {
    std::uint64_t bits = 0, produced = 0;
    for (const Phrase& ph : parsing.phrases) {
        validate(ph, produced);
        bits += phrase_cost(ph, model);
        produced += ph.length;
    }
    return bits;
}

std::vector<std::uint8_t> expand(const Parsing& parsing) {
    std::vector<std::uint8_t> out;
    for (const Phrase& ph : parsing.phrases) {
        validate(ph, out.size());
        if (ph.is_literal()) {
            out.push_back(ph.symbol);
            continue;
        }
        const std::size_t from = out.size() - ph.distance;
        for (std::uint64_t k = 0; k < ph.length; ++k) {
            const std::uint8_t c = out[from + k];
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace bolz
