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

#include "shiftgraph/ordinal.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "shiftgraph/combinatorics.hpp"

namespace shiftgraph {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    fail(ErrorCode::kOutOfRange, "ordinal coefficient overflow");
  }
  return a + b;
}

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  Ordinal parse() {
    if (text_.empty()) syntax("empty ordinal literal");
    std::vector<Ordinal::Term> terms;
    std::uint64_t finite = 0;
    bool have_finite = false;
    while (true) {
      if (peek() == 'w') {
        ++pos_;
        std::uint64_t exponent = 1;
        std::uint64_t coefficient = 1;
        if (peek() == '^') {
          ++pos_;
          exponent = nat();
        }
        if (peek() == '*') {
          ++pos_;
          coefficient = nat();
        }
        if (exponent == 0 || coefficient == 0) {
          noncanonical("zero exponent or coefficient in '" + text_ + "'");
        }
        if (exponent > std::numeric_limits<std::uint32_t>::max()) {
          fail(ErrorCode::kOutOfRange, "ordinal exponent too large");
        }
        if (!terms.empty() && terms.back().exponent <= exponent) {
          noncanonical("terms of '" + text_ + "' are not in strictly decreasing order");
        }
        terms.push_back({static_cast<std::uint32_t>(exponent), coefficient});
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        finite = nat();
        have_finite = true;
        if (finite == 0 && !terms.empty()) noncanonical("zero finite term in '" + text_ + "'");
      } else {
        syntax("unexpected character in '" + text_ + "'");
      }
      if (pos_ == text_.size()) break;
      if (peek() != '+') syntax("expected '+' in '" + text_ + "'");
      ++pos_;
      if (pos_ == text_.size()) syntax("dangling '+' in '" + text_ + "'");
      // A finite term followed by anything is out of order.
      if (have_finite) noncanonical("finite term precedes a larger term in '" + text_ + "'");
    }
    return Ordinal::from_terms(std::move(terms), finite);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::uint64_t nat() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec == std::errc::result_out_of_range) fail(ErrorCode::kOutOfRange, "number too large");
    if (ec != std::errc() || ptr == begin) syntax("expected a natural number in '" + text_ + "'");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  [[noreturn]] void syntax(const std::string& msg) { fail(ErrorCode::kSyntaxError, msg); }
  [[noreturn]] void noncanonical(const std::string& msg) { fail(ErrorCode::kNonCanonical, msg); }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal Ordinal::finite(std::uint64_t n) {
  Ordinal o;
  o.finite_part_ = n;
  return o;
}

Ordinal Ordinal::omega(std::uint64_t times) {
  if (times == 0) return Ordinal();
  return from_terms({{1, times}}, 0);
}

Ordinal Ordinal::from_terms(std::vector<Term> terms, std::uint64_t finite_part) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].exponent == 0 || terms[i].coefficient == 0) {
      fail(ErrorCode::kNonCanonical, "CNF term with zero exponent or coefficient");
    }
    if (i > 0 && terms[i - 1].exponent <= terms[i].exponent) {
      fail(ErrorCode::kNonCanonical, "CNF exponents must be strictly decreasing");
    }
  }
  Ordinal o;
  o.terms_ = std::move(terms);
  o.finite_part_ = finite_part;
  return o;
}

Ordinal Ordinal::parse(std::string_view text) { return OrdinalParser(text).parse(); }

Ordinal Ordinal::limit_part() const { return from_terms(terms_, 0); }

std::string Ordinal::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out += '+';
    out += 'w';
    if (t.exponent != 1) out += '^' + std::to_string(t.exponent);
    if (t.coefficient != 1) out += '*' + std::to_string(t.coefficient);
  }
  if (finite_part_ != 0) {
    if (!out.empty()) out += '+';
    out += std::to_string(finite_part_);
  }
  return out;
}

Ordinal operator+(const Ordinal& lhs, const Ordinal& rhs) {
  if (rhs.terms_.empty()) return lhs + rhs.finite_part_;
  // Terms of lhs below the leading exponent of rhs are absorbed.
  const std::uint32_t lead = rhs.terms_.front().exponent;
  std::vector<Ordinal::Term> terms;
  for (const auto& t : lhs.terms_) {
    if (t.exponent > lead) terms.push_back(t);
  }
  auto it = rhs.terms_.begin();
  Ordinal::Term first = *it++;
  for (const auto& t : lhs.terms_) {
    if (t.exponent == lead) first.coefficient = checked_add(first.coefficient, t.coefficient);
  }
  terms.push_back(first);
  terms.insert(terms.end(), it, rhs.terms_.end());
  return Ordinal::from_terms(std::move(terms), rhs.finite_part_);
}

Ordinal operator+(const Ordinal& lhs, std::uint64_t k) {
  Ordinal out = lhs;
  out.finite_part_ = checked_add(out.finite_part_, k);
  return out;
}

std::strong_ordering operator<=>(const Ordinal& lhs, const Ordinal& rhs) {
  const std::size_t common = std::min(lhs.terms_.size(), rhs.terms_.size());
  for (std::size_t i = 0; i < common; ++i) {
    const auto& a = lhs.terms_[i];
    const auto& b = rhs.terms_[i];
    if (a.exponent != b.exponent) return a.exponent <=> b.exponent;
    if (a.coefficient != b.coefficient) return a.coefficient <=> b.coefficient;
  }
  // A remaining infinite term outweighs any finite part.
  if (lhs.terms_.size() != rhs.terms_.size()) {
    return lhs.terms_.size() <=> rhs.terms_.size();
  }
  return lhs.finite_part_ <=> rhs.finite_part_;
}

Decomposition decompose(const Ordinal& alpha) {
  return Decomposition{alpha.limit_part(), alpha.finite_part()};
}

std::string Count::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

Count operator+(Count lhs, Count rhs) {
  if (lhs.infinite_ || rhs.infinite_) return Count::infinite();
  return Count::finite(checked_add(lhs.value_, rhs.value_));
}

Count operator*(Count lhs, Count rhs) {
  if ((lhs.is_finite() && lhs.value() == 0) || (rhs.is_finite() && rhs.value() == 0)) {
    return Count::finite(0);
  }
  if (lhs.infinite_ || rhs.infinite_) return Count::infinite();
  unsigned __int128 p = static_cast<unsigned __int128>(lhs.value_) * rhs.value_;
  if (p > std::numeric_limits<std::uint64_t>::max()) {
    fail(ErrorCode::kOutOfRange, "count overflow");
  }
  return Count::finite(static_cast<std::uint64_t>(p));
}

Count binomial(Count count, std::uint64_t a) {
  if (count.is_infinite()) return a == 0 ? Count::finite(1) : Count::infinite();
  return Count::finite(binom(count.value(), a));
}

Count below_count(const Ordinal& xi) {
  return xi.is_finite() ? Count::finite(xi.finite_part()) : Count::infinite();
}

Count tail_count(const Ordinal& alpha, const Ordinal& xi) {
  if (!(xi < alpha)) {
    fail(ErrorCode::kOutOfRange, "tail_count: " + xi.to_string() + " is not below " +
                                     alpha.to_string());
  }
  if (xi.limit_part() == alpha.limit_part()) {
    return Count::finite(alpha.finite_part() - xi.finite_part() - 1);
  }
  return Count::infinite();
}

}  // namespace shiftgraph
