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

#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "shiftgraph/error.hpp"
#include "shiftgraph/graph.hpp"
#include "shiftgraph/random.hpp"
#include "shiftgraph/reconstruct.hpp"

namespace sg = shiftgraph;
using sg::ErrorCode;
using sg::Graph;
using sg::ShiftGraph;
using sg::TypePattern;
using sg::VertexId;

#define EXPECT_CODE(expr, want)                \
  do {                                         \
    try {                                      \
      (void)(expr);                            \
      ADD_FAILURE() << "no error from " #expr; \
    } catch (const sg::Error& e) {             \
      EXPECT_EQ(e.code(), want) << e.what();   \
    }                                          \
  } while (0)

namespace {

ShiftGraph build(unsigned n, const char* type) { return ShiftGraph::build(n, TypePattern::parse(type)); }

// perm[old] = new, from the test's own generator.
Graph shuffled(const ShiftGraph& g, std::uint64_t seed, std::vector<VertexId>* perm_out = nullptr) {
  auto gen = oracle::rng(seed);
  const auto perm = oracle::random_permutation(g.num_vertices(), gen);
  if (perm_out) *perm_out = perm;
  return g.graph().relabeled(perm);
}

// Independent check that a labelling is an isomorphism onto G(n, type): the
// assignment is a bijection onto the width-subsets and every pair is an edge
// exactly when its type word is type or its swap.
bool is_isomorphism(const Graph& g, const sg::Labeling& lab, unsigned n, const std::string& type) {
  const unsigned w = oracle::width_of(type);
  if (lab.assignment.size() != g.num_vertices()) return false;
  std::vector<std::uint64_t> masks;
  for (const auto& s : lab.assignment) {
    if (s.size() != w) return false;
    std::uint64_t m = 0;
    for (auto e : s) {
      if (e >= n) return false;
      m |= std::uint64_t{1} << e;
    }
    if (static_cast<unsigned>(std::popcount(m)) != w) return false;
    masks.push_back(m);
  }
  auto sorted = masks;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != oracle::subsets(n, w)) return false;
  const auto sw = oracle::swapped(type);
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (VertexId v = u + 1; v < g.num_vertices(); ++v) {
      const auto word = oracle::type_word(lab.assignment[u], lab.assignment[v]);
      if ((word == type || word == sw) != g.adjacent(u, v)) return false;
    }
  }
  return true;
}

TEST(Extract, Sigma11Blocks) {
  for (unsigned n = 3; n <= 9; ++n) {
    std::vector<VertexId> perm;
    const auto g = build(n, "132");
    const auto h = shuffled(g, n, &perm);
    const auto blocks = sg::extract_bar_sequence(h, TypePattern::parse("132"));
    ASSERT_EQ(blocks.size(), n - 1);
    for (std::size_t i = 0; i < blocks.size(); ++i) EXPECT_EQ(blocks[i].size(), n - 1 - i);
    // Block i holds first coordinate i, or last coordinate n-1-i when read
    // from the other end.
    std::vector<VertexId> inverse(perm.size());
    for (VertexId v = 0; v < perm.size(); ++v) inverse[perm[v]] = v;
    const bool forward = std::all_of(blocks[1].begin(), blocks[1].end(),
                                     [&](VertexId v) { return g.vertex(inverse[v])[0] == 1; });
    for (std::size_t i = 1; i < blocks.size(); ++i) {
      for (auto v : blocks[i]) {
        const auto x = g.vertex(inverse[v]);
        EXPECT_EQ(forward ? x[0] : n - 1 - x[1], i);
      }
    }
  }
}

TEST(Extract, Sigma21FirstBlock) {
  const auto g = build(7, "11322");
  std::vector<VertexId> perm;
  const auto h = shuffled(g, 99, &perm);
  const auto blocks = sg::extract_bar_sequence(h, TypePattern::parse("11322"));
  ASSERT_FALSE(blocks.empty());
  std::vector<VertexId> low;
  std::vector<VertexId> high;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.vertex(v)[0] <= 1) low.push_back(perm[v]);
    if (g.vertex(v)[2] >= 5) high.push_back(perm[v]);
  }
  std::sort(low.begin(), low.end());
  std::sort(high.begin(), high.end());
  auto first = blocks[0];
  std::sort(first.begin(), first.end());
  EXPECT_TRUE(first == low || first == high);
  EXPECT_EQ(first.size(), 25u);
}

TEST(Extract, FiveCycle) {
  const std::vector<sg::Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  const auto c5 = Graph::from_edges(5, edges);
  for (const char* type : {"132", "11322", "1332"}) {
    EXPECT_CODE(sg::extract_bar_sequence(c5, TypePattern::parse(type)), ErrorCode::kNotAShiftGraph);
  }
  EXPECT_CODE(sg::reconstruct(c5, TypePattern::parse("132")), ErrorCode::kWidthMismatch);
}

TEST(Reconstruct, RejectsNonShiftGraphs) {
  // Six vertices = C(4,2), but a 6-cycle is not G(4,132).
  const std::vector<sg::Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}};
  EXPECT_CODE(sg::reconstruct(Graph::from_edges(6, edges), TypePattern::parse("132")), ErrorCode::kNotAShiftGraph);
  // G(6,132) with one edge removed.
  const auto g = build(6, "132");
  auto e = g.graph().edges();
  e.erase(e.begin() + 3);
  EXPECT_CODE(sg::reconstruct(Graph::from_edges(15, e), TypePattern::parse("132")), ErrorCode::kNotAShiftGraph);
  EXPECT_CODE(sg::reconstruct(build(6, "1122").graph(), TypePattern::parse("1122")), ErrorCode::kUnsupported);
}

TEST(Reconstruct, Sigma11TwoMirroredLabelings) {
  const auto g = build(6, "132");
  const auto h = shuffled(g, 7);
  const auto r = sg::reconstruct(h, TypePattern::parse("132"));
  EXPECT_EQ(r.n, 6u);
  ASSERT_EQ(r.labelings.size(), 2u);
  EXPECT_NE(r.labelings[0].orientation, r.labelings[1].orientation);
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    EXPECT_EQ(r.labelings[1].assignment[v], sg::reverse_subset(r.labelings[0].assignment[v], 6));
  }
  for (const auto& lab : r.labelings) {
    EXPECT_TRUE(is_isomorphism(h, lab, 6, "132"));
    EXPECT_TRUE(sg::validate_labeling(h, g, lab));
  }
}

TEST(Reconstruct, TraceStrictlyDecreasingFor132) {
  for (unsigned n = 4; n <= 10; ++n) {
    const auto r = sg::reconstruct(shuffled(build(n, "132"), 100 + n), TypePattern::parse("132"));
    for (std::size_t i = 1; i < r.trace.size(); ++i) EXPECT_GT(r.trace[i - 1].size(), r.trace[i].size());
  }
}

// For a >= 2 the labelings agree on first and last coordinates, once the
// reversed ones are mapped back through the reversal. The graph cannot see a
// first coordinate below a - 1 or a last one above n - a (nothing fits on
// that side), and isolated vertices are all twins, so those are clamped or
// skipped.
TEST(Reconstruct, Sigma21SharesEndCoordinates) {
  const unsigned n = 8;
  const auto h = shuffled(build(n, "11322"), 8);
  const auto r = sg::reconstruct(h, TypePattern::parse("11322"));
  EXPECT_EQ(r.n, n);
  ASSERT_FALSE(r.labelings.empty());
  const auto& ref = r.labelings[0];
  for (const auto& lab : r.labelings) {
    EXPECT_TRUE(is_isomorphism(h, lab, n, "11322"));
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
      if (h.degree(v) == 0) continue;
      auto x = lab.assignment[v];
      if (lab.orientation != ref.orientation) x = sg::reverse_subset(x, n);
      const auto& y = ref.assignment[v];
      EXPECT_EQ(std::max(x.front(), 1u), std::max(y.front(), 1u));
      EXPECT_EQ(std::min(x.back(), n - 2), std::min(y.back(), n - 2));
    }
  }
}

TEST(Reconstruct, ReversalRelabelGivesSameReport) {
  const auto g = build(5, "132");
  std::vector<VertexId> perm(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) perm[v] = g.id_of(sg::reverse_subset(g.vertex(v), 5));
  const auto h = g.graph().relabeled(perm);
  EXPECT_EQ(h, g.graph());
  const auto a = sg::reconstruct(g.graph(), TypePattern::parse("132"));
  const auto b = sg::reconstruct(h, TypePattern::parse("132"));
  EXPECT_EQ(a.n, b.n);
  ASSERT_EQ(a.labelings.size(), b.labelings.size());
  for (std::size_t i = 0; i < a.labelings.size(); ++i) EXPECT_EQ(a.labelings[i].assignment, b.labelings[i].assignment);
}

// Round trip on seeded shuffles; the acceptance suite runs the full hundred.
TEST(Reconstruct, RoundTripProperty) {
  for (const char* type : {"132", "1332", "11322", "113322", "1113222"}) {
    for (unsigned n = 5; n <= 8; ++n) {
      if (n < oracle::width_of(type)) continue;
      const auto g = build(n, type);
      for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto h = shuffled(g, seed * 31 + n);
        const auto r = sg::reconstruct(h, TypePattern::parse(type));
        EXPECT_EQ(r.n, n);
        ASSERT_FALSE(r.labelings.empty()) << type << " n=" << n;
        for (const auto& lab : r.labelings) EXPECT_TRUE(is_isomorphism(h, lab, n, type)) << type << " n=" << n;
        if (sg::as_sigma(TypePattern::parse(type))->a == 1) EXPECT_EQ(r.labelings.size(), 2u);
      }
    }
  }
}

TEST(Reconstruct, LibraryShuffleIsDeterministic) {
  const auto a = sg::seeded_permutation(100, 42);
  EXPECT_EQ(a, sg::seeded_permutation(100, 42));
  EXPECT_NE(a, sg::seeded_permutation(100, 43));
  auto sorted = a;
  std::sort(sorted.begin(), sorted.end());
  for (VertexId i = 0; i < 100; ++i) EXPECT_EQ(sorted[i], i);
  // Reference splitmix64 outputs for seed 0.
  sg::SplitMix64 s(0);
  EXPECT_EQ(s.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(s.next(), 0x6E789E6AA1B965F4ULL);
}

TEST(Validate, DetectsWrongLabelings) {
  const auto g = build(6, "132");
  sg::Labeling lab;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    lab.assignment.emplace_back(g.vertex(v).begin(), g.vertex(v).end());
  }
  EXPECT_TRUE(sg::validate_labeling(g.graph(), g, lab));
  std::swap(lab.assignment[2], lab.assignment[7]);
  EXPECT_FALSE(sg::validate_labeling(g.graph(), g, lab));
}

TEST(InferAlpha, Examples) {
  auto r = sg::infer_alpha_symbolic(sg::Ordinal::parse("w+3"), 1, 1);
  EXPECT_EQ(r.alpha, sg::Ordinal::parse("w+3"));
  EXPECT_EQ(r.k, 3u);
  r = sg::infer_alpha_symbolic(sg::Ordinal::omega(), 2, 0);
  EXPECT_EQ(r.alpha, sg::Ordinal::omega());
  EXPECT_EQ(r.k, 0u);
  r = sg::infer_alpha_symbolic(sg::Ordinal::parse("w*2+1"), 1, 2);
  EXPECT_EQ(r.alpha, sg::Ordinal::parse("w*2+1"));
  EXPECT_EQ(r.k, 1u);
  for (std::uint64_t k = 0; k <= 5; ++k) {
    for (std::size_t a = 1; a <= 3; ++a) {
      const auto alpha = sg::Ordinal::omega() + k;
      EXPECT_EQ(sg::infer_alpha_symbolic(alpha, a, 1).k, k) << "a=" << a << " k=" << k;
    }
  }
}

}  // namespace
