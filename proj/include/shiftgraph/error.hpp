// Copyright 2026 The shiftgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SHIFTGRAPH_ERROR_HPP_
#define SHIFTGRAPH_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace shiftgraph {

// Stable numeric values: these are also the C API status codes.
enum class ErrorCode : int {
  kOk = 0,
  kInvalidCharacter = 1,
  kUnbalancedType = 2,
  kEmptyType = 3,
  kWidthMismatch = 4,
  kNotSorted = 5,
  kSyntaxError = 6,
  kNonCanonical = 7,
  kOutOfRange = 8,
  kBudgetExceeded = 9,
  kWidthTooLarge = 10,
  kElementOutOfGround = 11,
  kUnsupported = 12,
  kAmbiguousCensus = 13,
  kWrongType = 14,
  kNotAShiftGraph = 15,
  kOutOfStatedRange = 16,
  kInvalidArgument = 17,
  kIoError = 18,
  kInternal = 19,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace shiftgraph

#endif  // SHIFTGRAPH_ERROR_HPP_
