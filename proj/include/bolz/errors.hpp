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

#ifndef BOLZ_ERRORS_HPP
#define BOLZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bolz {

/// Argument outside the domain of an operation (x = 0 for an integer code,
/// position past the end of the text, empty range, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// API misuse that is not a data problem, e.g. visiting vertices out of order.
class UsageError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class StreamError {
    BadMagic,
    BadVersion,
    BadCodeId,
    BadLiteralBits,
    Truncated,
    MalformedCodeword,
    CopyBeyondOutput,
    OutputOverrun,
    BadLiteral,
    NonZeroPadding,
    TrailingBytes,
};

const char* to_string(StreamError e) noexcept;

/// Raised on any malformed compressed stream or phrase sequence.
class CorruptStreamError : public std::runtime_error {
public:
    CorruptStreamError(StreamError kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    StreamError kind() const noexcept { return kind_; }

private:
    StreamError kind_;
};

}  // namespace bolz

#endif  // BOLZ_ERRORS_HPP
