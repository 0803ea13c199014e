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

#include "shiftgraph/combinatorics.hpp"

#include <limits>
#include <string>

#include "shiftgraph/error.hpp"

namespace shiftgraph {

std::uint64_t binom_saturating(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  const std::uint64_t r = binom_saturating(n, k);
  if (r == std::numeric_limits<std::uint64_t>::max()) {
    fail(ErrorCode::kOutOfRange,
         "binomial C(" + std::to_string(n) + "," + std::to_string(k) + ") overflows 64 bits");
  }
  return r;
}

std::uint64_t colex_rank(std::span<const std::uint32_t> subset) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i > 0 && subset[i - 1] >= subset[i]) {
      fail(ErrorCode::kNotSorted, "colex_rank: subset is not strictly increasing");
    }
    rank += binom(subset[i], i + 1);
  }
  return rank;
}

std::vector<std::uint32_t> colex_unrank(std::uint64_t rank, std::uint32_t n, std::uint32_t k) {
  if (k > n || rank >= binom(n, k)) {
    fail(ErrorCode::kOutOfRange, "colex_unrank: rank " + std::to_string(rank) +
                                     " out of range for C(" + std::to_string(n) + "," +
                                     std::to_string(k) + ")");
  }
  std::vector<std::uint32_t> out(k);
  std::uint32_t hi = n;
  for (std::uint32_t i = k; i-- > 0;) {
    // Largest c < hi with C(c, i + 1) <= rank.
    std::uint32_t c = hi - 1;
    while (binom(c, i + 1) > rank) --c;
    out[i] = c;
    rank -= binom(c, i + 1);
    hi = c;
  }
  return out;
}

bool colex_next(std::span<std::uint32_t> subset, std::uint32_t n) {
  const std::size_t k = subset.size();
  if (k == 0) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint32_t limit = (i + 1 < k) ? subset[i + 1] : n;
    if (subset[i] + 1 < limit) {
      ++subset[i];
      for (std::size_t j = 0; j < i; ++j) subset[j] = static_cast<std::uint32_t>(j);
      return true;
    }
  }
  return false;
}

}  // namespace shiftgraph
