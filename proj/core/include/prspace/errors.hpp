/*
 * Copyright 2026 The prspace Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PRSPACE_ERRORS_HPP_
#define PRSPACE_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace prspace {

// Stable error categories. The CLI prints the category name on stderr so
// scripts can branch on it without parsing the message text.
enum class ErrorCode {
  kNegativeCell,
  kEmptyDataset,
  kUndefinedPrecision,
  kNoPositives,
  kDegenerateDataset,
  kDegenerateSkew,
  kDegenerateGroup,
  kDomainError,
  kInvalidRange,
  kOutOfBounds,
  kUndefinedScore,
  kEmptyInput,
  kInsufficientNegatives,
  kParseError,
  kWriteError,
};

constexpr std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNegativeCell: return "NegativeCell";
    case ErrorCode::kEmptyDataset: return "EmptyDataset";
    case ErrorCode::kUndefinedPrecision: return "UndefinedPrecision";
    case ErrorCode::kNoPositives: return "NoPositives";
    case ErrorCode::kDegenerateDataset: return "DegenerateDataset";
    case ErrorCode::kDegenerateSkew: return "DegenerateSkew";
    case ErrorCode::kDegenerateGroup: return "DegenerateGroup";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kInvalidRange: return "InvalidRange";
    case ErrorCode::kOutOfBounds: return "OutOfBounds";
    case ErrorCode::kUndefinedScore: return "UndefinedScore";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kInsufficientNegatives: return "InsufficientNegatives";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kWriteError: return "WriteError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code),
        message_(std::move(message)) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view category() const noexcept { return error_name(code_); }
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace prspace

#endif  // PRSPACE_ERRORS_HPP_
