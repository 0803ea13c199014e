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

// Type patterns: words over {1,2,3} describing how two equal-width sorted
// tuples interleave.

#ifndef SHIFTGRAPH_TYPES_HPP_
#define SHIFTGRAPH_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shiftgraph/error.hpp"

namespace shiftgraph {

enum class Mark : std::uint8_t { kOne = 1, kTwo = 2, kThree = 3 };

// A validated type: count(ONE) == count(TWO), length >= 1.
class TypePattern {
 public:
  static TypePattern parse(std::string_view text);
  static TypePattern from_marks(std::vector<Mark> marks);

  const std::vector<Mark>& marks() const noexcept { return marks_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t length() const noexcept { return marks_.size(); }

  // Canonical form: digits '1','2','3' without separators.
  std::string render() const;

  friend bool operator==(const TypePattern&, const TypePattern&) = default;

 private:
  explicit TypePattern(std::vector<Mark> marks);

  std::vector<Mark> marks_;
  std::size_t width_ = 0;
};

// 1^a 3^b 2^a.
TypePattern sigma(std::size_t a, std::size_t b);

// Pointwise exchange of ONE and TWO.
TypePattern swap_type(const TypePattern& type);

struct SigmaParams {
  std::size_t a = 0;
  std::size_t b = 0;
  friend bool operator==(const SigmaParams&, const SigmaParams&) = default;
};

// Returns (a, b) when `type` is exactly sigma(a, b).
std::optional<SigmaParams> as_sigma(const TypePattern& type);

// Reads the type of an ordered pair of strictly increasing tuples off their
// sorted union. Works for any totally ordered element type.
template <typename T>
TypePattern type_of_pair(std::span<const T> x, std::span<const T> y) {
  if (x.size() != y.size()) {
    fail(ErrorCode::kWidthMismatch, "type_of_pair: tuples have different widths");
  }
  auto check_sorted = [](std::span<const T> v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (!(v[i - 1] < v[i])) {
        fail(ErrorCode::kNotSorted, "type_of_pair: tuple is not strictly increasing");
      }
    }
  };
  check_sorted(x);
  check_sorted(y);
  if (x.empty()) fail(ErrorCode::kEmptyType, "type_of_pair: empty tuples");

  std::vector<Mark> marks;
  marks.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i] < y[j])) {
      marks.push_back(Mark::kOne);
      ++i;
    } else if (i == x.size() || y[j] < x[i]) {
      marks.push_back(Mark::kTwo);
      ++j;
    } else {
      marks.push_back(Mark::kThree);
      ++i;
      ++j;
    }
  }
  return TypePattern::from_marks(std::move(marks));
}

template <typename T>
TypePattern type_of_pair(const std::vector<T>& x, const std::vector<T>& y) {
  return type_of_pair(std::span<const T>(x), std::span<const T>(y));
}

}  // namespace shiftgraph

#endif  // SHIFTGRAPH_TYPES_HPP_
