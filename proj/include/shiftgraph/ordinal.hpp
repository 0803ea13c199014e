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

// Ordinals below w^w in Cantor normal form, and the finite/infinite counts
// that the degree formulas are phrased in.

#ifndef SHIFTGRAPH_ORDINAL_HPP_
#define SHIFTGRAPH_ORDINAL_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "shiftgraph/error.hpp"

namespace shiftgraph {

class Ordinal {
 public:
  struct Term {
    std::uint32_t exponent = 1;     // >= 1
    std::uint64_t coefficient = 1;  // >= 1
    friend bool operator==(const Term&, const Term&) = default;
  };

  Ordinal() = default;
  static Ordinal finite(std::uint64_t n);
  static Ordinal omega(std::uint64_t times = 1);
  // Validates the CNF invariants.
  static Ordinal from_terms(std::vector<Term> terms, std::uint64_t finite_part);
  static Ordinal parse(std::string_view text);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::uint64_t finite_part() const noexcept { return finite_part_; }

  bool is_zero() const noexcept { return terms_.empty() && finite_part_ == 0; }
  bool is_finite() const noexcept { return terms_.empty(); }
  bool is_limit() const noexcept { return !terms_.empty() && finite_part_ == 0; }

  // The limit part (zero when finite).
  Ordinal limit_part() const;

  std::string to_string() const;

  friend Ordinal operator+(const Ordinal& lhs, const Ordinal& rhs);
  friend Ordinal operator+(const Ordinal& lhs, std::uint64_t k);
  friend bool operator==(const Ordinal&, const Ordinal&) = default;
  friend std::strong_ordering operator<=>(const Ordinal& lhs, const Ordinal& rhs);

 private:
  std::vector<Term> terms_;
  std::uint64_t finite_part_ = 0;
};

struct Decomposition {
  Ordinal limit_part;
  std::uint64_t finite_part = 0;
};

// alpha = limit_part + finite_part, limit_part a limit ordinal or zero.
Decomposition decompose(const Ordinal& alpha);

// A cardinality that only distinguishes finite sizes from "infinite".
class Count {
 public:
  constexpr Count() = default;
  static constexpr Count finite(std::uint64_t n) { return Count(false, n); }
  static constexpr Count infinite() { return Count(true, 0); }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }
  // Only meaningful when finite.
  constexpr std::uint64_t value() const noexcept { return value_; }

  std::string to_string() const;

  friend Count operator+(Count lhs, Count rhs);
  friend Count operator*(Count lhs, Count rhs);
  friend constexpr bool operator==(const Count&, const Count&) = default;

 private:
  constexpr Count(bool inf, std::uint64_t v) : infinite_(inf), value_(v) {}
  bool infinite_ = false;
  std::uint64_t value_ = 0;
};

// C(count, a): infinite for a >= 1 when count is infinite, 1 for a = 0.
Count binomial(Count count, std::uint64_t a);

// |{z : z < xi}|.
Count below_count(const Ordinal& xi);

// |{z : xi < z < alpha}|. Throws OutOfRange unless xi < alpha.
Count tail_count(const Ordinal& alpha, const Ordinal& xi);

}  // namespace shiftgraph

#endif  // SHIFTGRAPH_ORDINAL_HPP_
