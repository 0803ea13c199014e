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

// Independent reference implementations used by the tests. Nothing here calls
// into the library except for the plain value types.

#ifndef SHIFTGRAPH_TESTS_ORACLES_HPP_
#define SHIFTGRAPH_TESTS_ORACLES_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// k-subsets of [n] as bitmasks, in increasing mask order (which is colex).
inline std::vector<std::uint64_t> subsets(unsigned n, unsigned k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (static_cast<unsigned>(std::popcount(m)) == k) out.push_back(m);
  }
  return out;
}

inline std::vector<std::uint32_t> elements(std::uint64_t mask) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i);
  }
  return out;
}

// Word over {1,2,3} read off the union of x and y in increasing order.
inline std::string type_word(const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y) {
  std::set<std::uint32_t> all(x.begin(), x.end());
  all.insert(y.begin(), y.end());
  std::string w;
  for (auto e : all) {
    const bool in_x = std::find(x.begin(), x.end(), e) != x.end();
    const bool in_y = std::find(y.begin(), y.end(), e) != y.end();
    w += in_x && in_y ? '3' : (in_x ? '1' : '2');
  }
  return w;
}

inline std::string swapped(std::string w) {
  for (auto& c : w) {
    if (c == '1') {
      c = '2';
    } else if (c == '2') {
      c = '1';
    }
  }
  return w;
}

inline unsigned width_of(const std::string& type) {
  return static_cast<unsigned>(std::count(type.begin(), type.end(), '1') + std::count(type.begin(), type.end(), '3'));
}

struct Dense {
  std::vector<std::uint64_t> masks;
  std::vector<std::vector<bool>> adj;
  std::size_t size() const { return masks.size(); }
  std::size_t degree(std::size_t v) const { return static_cast<std::size_t>(std::count(adj[v].begin(), adj[v].end(), true)); }
};

inline Dense shift_graph(unsigned n, const std::string& type) {
  Dense d;
  d.masks = subsets(n, width_of(type));
  const auto sw = swapped(type);
  d.adj.assign(d.size(), std::vector<bool>(d.size(), false));
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const auto w = type_word(elements(d.masks[i]), elements(d.masks[j]));
      if (w == type || w == sw) d.adj[i][j] = d.adj[j][i] = true;
    }
  }
  return d;
}

// Fixed-seed stream for property tests.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed * 0x9E3779B97F4A7C15ULL + 1); }

inline std::vector<std::uint32_t> random_permutation(std::size_t size, std::mt19937_64& gen) {
  std::vector<std::uint32_t> p(size);
  for (std::size_t i = 0; i < size; ++i) p[i] = static_cast<std::uint32_t>(i);
  std::shuffle(p.begin(), p.end(), gen);
  return p;
}

// Colouring of G(n,132) with ceil(log2 n) colours: element x gets a distinct
// subset f(x) of [t], listed by decreasing size, and the edge (x,y),(y,z)
// gets min(f(x) \ f(y)), which exists because f(x) is never a subset of a
// later f(y).
inline std::vector<std::uint32_t> binary_set_coloring(unsigned n, unsigned& t_out) {
  unsigned t = 0;
  while ((1u << t) < n) ++t;
  std::vector<std::uint32_t> sets;
  for (std::uint32_t m = 0; m < (1u << t); ++m) sets.push_back(m);
  std::stable_sort(sets.begin(), sets.end(), [](auto a, auto b) { return std::popcount(a) > std::popcount(b); });
  std::vector<std::uint32_t> colors;
  for (auto mask : subsets(n, 2)) {
    const auto e = elements(mask);
    const auto diff = sets[e[0]] & ~sets[e[1]];
    colors.push_back(diff ? static_cast<std::uint32_t>(std::countr_zero(diff)) : 0);
  }
  t_out = std::max(t, 1u);
  return colors;
}

}  // namespace oracle

#endif  // SHIFTGRAPH_TESTS_ORACLES_HPP_
