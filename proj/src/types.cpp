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

#include "shiftgraph/types.hpp"

#include <algorithm>

namespace shiftgraph {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kInvalidCharacter: return "InvalidCharacter";
    case ErrorCode::kUnbalancedType: return "UnbalancedType";
    case ErrorCode::kEmptyType: return "EmptyType";
    case ErrorCode::kWidthMismatch: return "WidthMismatch";
    case ErrorCode::kNotSorted: return "NotSorted";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kNonCanonical: return "NonCanonical";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kWidthTooLarge: return "WidthTooLarge";
    case ErrorCode::kElementOutOfGround: return "ElementOutOfGround";
    case ErrorCode::kUnsupported: return "Unsupported";
    case ErrorCode::kAmbiguousCensus: return "AmbiguousCensus";
    case ErrorCode::kWrongType: return "WrongType";
    case ErrorCode::kNotAShiftGraph: return "NotAShiftGraph";
    case ErrorCode::kOutOfStatedRange: return "OutOfStatedRange";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

TypePattern::TypePattern(std::vector<Mark> marks) : marks_(std::move(marks)) {
  std::size_t ones = 0;
  std::size_t twos = 0;
  std::size_t threes = 0;
  for (Mark m : marks_) {
    switch (m) {
      case Mark::kOne: ++ones; break;
      case Mark::kTwo: ++twos; break;
      case Mark::kThree: ++threes; break;
    }
  }
  if (marks_.empty()) fail(ErrorCode::kEmptyType, "type pattern is empty");
  if (ones != twos) {
    fail(ErrorCode::kUnbalancedType,
         "type pattern has " + std::to_string(ones) + " ones but " +
             std::to_string(twos) + " twos");
  }
  width_ = ones + threes;
}

TypePattern TypePattern::from_marks(std::vector<Mark> marks) {
  return TypePattern(std::move(marks));
}

TypePattern TypePattern::parse(std::string_view text) {
  if (text.empty()) fail(ErrorCode::kEmptyType, "type pattern is empty");
  std::vector<Mark> marks;
  marks.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '1': marks.push_back(Mark::kOne); break;
      case '2': marks.push_back(Mark::kTwo); break;
      case '3': marks.push_back(Mark::kThree); break;
      default:
        fail(ErrorCode::kInvalidCharacter,
             std::string("type pattern contains invalid character '") + c + "'");
    }
  }
  return TypePattern(std::move(marks));
}

std::string TypePattern::render() const {
  std::string out;
  out.reserve(marks_.size());
  for (Mark m : marks_) out.push_back(static_cast<char>('0' + static_cast<int>(m)));
  return out;
}

TypePattern sigma(std::size_t a, std::size_t b) {
  if (a + b == 0) fail(ErrorCode::kEmptyType, "sigma(0, 0) is the empty type");
  std::vector<Mark> marks;
  marks.insert(marks.end(), a, Mark::kOne);
  marks.insert(marks.end(), b, Mark::kThree);
  marks.insert(marks.end(), a, Mark::kTwo);
  return TypePattern::from_marks(std::move(marks));
}

TypePattern swap_type(const TypePattern& type) {
  std::vector<Mark> marks = type.marks();
  for (Mark& m : marks) {
    if (m == Mark::kOne) {
      m = Mark::kTwo;
    } else if (m == Mark::kTwo) {
      m = Mark::kOne;
    }
  }
  return TypePattern::from_marks(std::move(marks));
}

std::optional<SigmaParams> as_sigma(const TypePattern& type) {
  const auto& m = type.marks();
  std::size_t a = 0;
  while (a < m.size() && m[a] == Mark::kOne) ++a;
  std::size_t b = 0;
  while (a + b < m.size() && m[a + b] == Mark::kThree) ++b;
  std::size_t twos = 0;
  while (a + b + twos < m.size() && m[a + b + twos] == Mark::kTwo) ++twos;
  if (a + b + twos != m.size() || twos != a) return std::nullopt;
  return SigmaParams{a, b};
}

}  // namespace shiftgraph
