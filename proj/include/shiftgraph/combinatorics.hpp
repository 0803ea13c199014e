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

// Small exact combinatorics on 64-bit integers: checked binomials and the
// colexicographic rank/unrank of k-subsets.

#ifndef SHIFTGRAPH_COMBINATORICS_HPP_
#define SHIFTGRAPH_COMBINATORICS_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace shiftgraph {

// C(n, k); throws OutOfRange on 64-bit overflow.
std::uint64_t binom(std::uint64_t n, std::uint64_t k);

// Like binom but returns UINT64_MAX instead of throwing.
std::uint64_t binom_saturating(std::uint64_t n, std::uint64_t k) noexcept;

// Colex rank of a strictly increasing subset: sum_i C(v[i], i + 1).
std::uint64_t colex_rank(std::span<const std::uint32_t> subset);

// Inverse of colex_rank among k-subsets of [n].
std::vector<std::uint32_t> colex_unrank(std::uint64_t rank, std::uint32_t n, std::uint32_t k);

// Advances `subset` to its colex successor inside [n]; false at the end.
bool colex_next(std::span<std::uint32_t> subset, std::uint32_t n);

}  // namespace shiftgraph

#endif  // SHIFTGRAPH_COMBINATORICS_HPP_
