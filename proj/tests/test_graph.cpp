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

#include "oracles.hpp"
#include "shiftgraph/combinatorics.hpp"
#include "shiftgraph/error.hpp"
#include "shiftgraph/graph.hpp"
#include "shiftgraph/io.hpp"

namespace sg = shiftgraph;
using sg::Count;
using sg::ErrorCode;
using sg::Ordinal;
using sg::ShiftGraph;
using sg::TypePattern;

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

sg::VertexId id(const ShiftGraph& g, std::vector<sg::Element> v) { return g.id_of(v); }

std::vector<Ordinal> finite_vertex(std::initializer_list<std::uint64_t> xs) {
  std::vector<Ordinal> v;
  for (auto x : xs) v.push_back(Ordinal::finite(x));
  return v;
}

TEST(Build, Examples) {
  const auto g = build(5, "1221");
  EXPECT_EQ(g.num_vertices(), 10u);
  EXPECT_TRUE(g.graph().adjacent(id(g, {1, 4}), id(g, {2, 3})));
  EXPECT_FALSE(g.graph().adjacent(id(g, {1, 3}), id(g, {2, 4})));

  const auto k4 = build(4, "12");
  EXPECT_EQ(k4.num_vertices(), 4u);
  EXPECT_EQ(k4.graph().num_edges(), 6u);

  const auto iso = build(4, "3");
  EXPECT_EQ(iso.num_vertices(), 4u);
  EXPECT_EQ(iso.graph().num_edges(), 0u);
}

TEST(Build, Errors) {
  EXPECT_CODE(build(2, "1113222"), ErrorCode::kWidthTooLarge);
  sg::BuildOptions opts;
  opts.max_vertices = 100;
  EXPECT_CODE(ShiftGraph::build(20, TypePattern::parse("132"), opts), ErrorCode::kBudgetExceeded);
  opts = {};
  opts.max_adjacency = 10;
  EXPECT_CODE(ShiftGraph::build(8, TypePattern::parse("132"), opts), ErrorCode::kBudgetExceeded);
}

// The materialised graph equals the brute-force graph built from masks for
// a spread of types, edge for edge and in the same vertex order.
TEST(Build, MatchesBruteForce) {
  for (const char* type : {"132", "1221", "12312", "1122", "11322", "1332", "2121", "33", "12", "3", "123132"}) {
    for (unsigned n = oracle::width_of(type); n <= 8; ++n) {
      const auto g = build(n, type);
      const auto ref = oracle::shift_graph(n, type);
      ASSERT_EQ(g.num_vertices(), ref.size()) << type << " n=" << n;
      std::size_t edges = 0;
      for (std::size_t i = 0; i < ref.size(); ++i) {
        EXPECT_EQ(g.vertex(static_cast<sg::VertexId>(i)).size(), oracle::width_of(type));
        const auto e = oracle::elements(ref.masks[i]);
        EXPECT_TRUE(std::equal(e.begin(), e.end(), g.vertex(static_cast<sg::VertexId>(i)).begin()));
        EXPECT_FALSE(g.graph().adjacent(static_cast<sg::VertexId>(i), static_cast<sg::VertexId>(i)));
        for (std::size_t j = 0; j < ref.size(); ++j) {
          const bool a = g.graph().adjacent(static_cast<sg::VertexId>(i), static_cast<sg::VertexId>(j));
          ASSERT_EQ(a, ref.adj[i][j]) << type << " n=" << n << " " << i << "," << j;
          edges += a;
        }
      }
      EXPECT_EQ(g.graph().num_edges() * 2, edges);
    }
  }
}

TEST(Build, TrivialFamilies) {
  for (unsigned n = 1; n <= 8; ++n) {
    const auto k = build(n, "12");
    EXPECT_EQ(k.graph().num_edges(), sg::binom(n, 2));
    for (unsigned b = 1; b <= std::min(n, 3u); ++b) {
      const auto e = ShiftGraph::build(n, sg::sigma(0, b));
      EXPECT_EQ(e.num_vertices(), sg::binom(n, b));
      EXPECT_EQ(e.graph().num_edges(), 0u);
    }
  }
}

TEST(Build, SparseAndDenseAgree) {
  for (const char* type : {"132", "11322"}) {
    sg::BuildOptions dense;
    sg::BuildOptions sparse;
    sparse.dense_cap = 0;
    const auto a = ShiftGraph::build(9, TypePattern::parse(type), dense);
    const auto b = ShiftGraph::build(9, TypePattern::parse(type), sparse);
    EXPECT_TRUE(a.graph().has_dense_rows());
    EXPECT_FALSE(b.graph().has_dense_rows());
    EXPECT_EQ(a.graph(), b.graph());
    for (sg::VertexId u = 0; u < a.num_vertices(); ++u) {
      for (sg::VertexId v = 0; v < a.num_vertices(); ++v) {
        ASSERT_EQ(a.graph().adjacent(u, v), b.graph().adjacent(u, v));
      }
    }
  }
}

TEST(Rank, RoundTrip) {
  EXPECT_EQ(sg::rank(std::vector<sg::Element>{0, 1}, 7), 0u);
  for (unsigned n = 2; n <= 9; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      for (std::uint64_t i = 0; i < sg::binom(n, k); ++i) EXPECT_EQ(sg::rank(sg::unrank(i, n, k), n), i);
    }
  }
  EXPECT_CODE(sg::unrank(sg::binom(6, 3), 6, 3), ErrorCode::kOutOfRange);
  EXPECT_CODE(sg::rank(std::vector<sg::Element>{1, 9}, 5), ErrorCode::kOutOfRange);
}

TEST(Graph, Validation) {
  std::vector<sg::Edge> loop{{1, 1}};
  EXPECT_CODE(sg::Graph::from_edges(3, loop), ErrorCode::kInvalidArgument);
  std::vector<sg::Edge> out{{0, 5}};
  EXPECT_CODE(sg::Graph::from_edges(3, out), ErrorCode::kInvalidArgument);
  EXPECT_CODE(sg::Graph::from_adjacency({{1}, {}}), ErrorCode::kInvalidArgument);
  std::vector<sg::Edge> dup{{0, 1}, {1, 0}, {0, 1}};
  const auto g = sg::Graph::from_edges(2, dup);
  EXPECT_EQ(g.num_edges(), 1u);
}

TEST(Graph, InducedAndRelabeled) {
  const auto g = build(6, "132");
  auto gen = oracle::rng(3);
  const auto perm = oracle::random_permutation(g.num_vertices(), gen);
  const auto h = g.graph().relabeled(perm);
  for (sg::VertexId u = 0; u < g.num_vertices(); ++u) {
    for (sg::VertexId v = 0; v < g.num_vertices(); ++v) {
      EXPECT_EQ(g.graph().adjacent(u, v), h.adjacent(perm[u], perm[v]));
    }
  }
  // G(5,132) is the induced subgraph on the first C(5,2) colex ids.
  std::vector<sg::VertexId> keep(10);
  for (sg::VertexId i = 0; i < 10; ++i) keep[i] = i;
  EXPECT_EQ(g.graph().induced(keep), build(5, "132").graph());
}

TEST(Degree, ClosedFormExamples) {
  const auto w3 = Ordinal::parse("w+3");
  const auto w = Ordinal::omega();
  const std::vector<Ordinal> v1{Ordinal::finite(2), w + 1};
  EXPECT_EQ(sg::degree_closed_form(w3, 1, 1, v1), Count::finite(3));
  const std::vector<Ordinal> v2{Ordinal::finite(4), w};
  EXPECT_EQ(sg::degree_closed_form(w3, 2, 0, v2), Count::finite(7));
  EXPECT_EQ(sg::degree_closed_form(Ordinal::finite(8), 1, 1, finite_vertex({2, 5})), Count::finite(4));
  const auto g = build(8, "132");
  EXPECT_EQ(g.graph().degree(id(g, {2, 5})), 4u);

  EXPECT_CODE(sg::degree_closed_form(w3, 1, 1, finite_vertex({1, 2, 3})), ErrorCode::kWidthMismatch);
  EXPECT_CODE(sg::degree_closed_form(Ordinal::finite(4), 1, 1, finite_vertex({1, 6})), ErrorCode::kElementOutOfGround);
  EXPECT_CODE(sg::degree_closed_form(w3, 1, 1, finite_vertex({3, 1})), ErrorCode::kNotSorted);
  EXPECT_CODE(sg::degree_closed_form(w3, 0, 2, finite_vertex({1, 2})), ErrorCode::kUnsupported);
}

// Closed form equals the brute-force degree of every vertex, n <= 10,
// a in 1..3, b in 0..2, width at most 5.
TEST(Degree, ClosedFormMatchesBruteForce) {
  for (std::size_t a = 1; a <= 3; ++a) {
    for (std::size_t b = 0; b <= 2 && a + b <= 5; ++b) {
      const auto type = sg::sigma(a, b).render();
      for (unsigned n = static_cast<unsigned>(a + b); n <= 10; ++n) {
        const auto ref = oracle::shift_graph(n, type);
        for (std::size_t v = 0; v < ref.size(); ++v) {
          std::vector<Ordinal> x;
          for (auto e : oracle::elements(ref.masks[v])) x.push_back(Ordinal::finite(e));
          ASSERT_EQ(sg::degree_closed_form(Ordinal::finite(n), a, b, x), Count::finite(ref.degree(v)))
              << type << " n=" << n << " v=" << v;
        }
      }
    }
  }
}

TEST(Degree, TypedNeighbourCount) {
  const auto ref = oracle::shift_graph(9, "12312");
  const auto type = TypePattern::parse("12312");
  const auto swapped = sg::swap_type(type);
  for (std::size_t v = 0; v < ref.size(); ++v) {
    const auto x = oracle::elements(ref.masks[v]);
    EXPECT_EQ(sg::count_typed_neighbors(x, 9, type) + sg::count_typed_neighbors(x, 9, swapped), ref.degree(v));
  }
}

TEST(Census, OmegaPlusK132) {
  for (std::uint64_t k = 0; k <= 6; ++k) {
    const auto alpha = Ordinal::omega() + k;
    const auto c = sg::finite_degree_census(alpha, 1, 1, sg::CensusScope::kVertices);
    for (std::uint64_t j = 0; j < 12; ++j) {
      const std::uint64_t want = k == 0 ? 0 : (j + 1 < k ? j + 1 : k);
      EXPECT_EQ(c.at(j), Count::finite(want)) << "k=" << k << " j=" << j;
    }
    EXPECT_EQ(sg::infer_k(c), k);
  }
}

TEST(Census, SpecExamples) {
  const auto c1 = sg::finite_degree_census(Ordinal::parse("w+3"), 1, 1, sg::CensusScope::kVertices);
  EXPECT_EQ(c1.at(0), Count::finite(1));
  EXPECT_EQ(c1.at(1), Count::finite(2));
  EXPECT_EQ(c1.at(2), Count::finite(3));
  EXPECT_EQ(c1.at(40), Count::finite(3));

  const auto c2 = sg::finite_degree_census(Ordinal::parse("w+2"), 2, 1, sg::CensusScope::kClasses);
  EXPECT_EQ(c2.at(0), Count::finite(4));
  EXPECT_EQ(sg::infer_k(c2), 2u);

  const auto c3 = sg::finite_degree_census(Ordinal::parse("w+3"), 2, 1, sg::CensusScope::kVertices);
  EXPECT_EQ(c3.at(0), Count::infinite());

  const auto c4 = sg::finite_degree_census(Ordinal::omega(), 1, 1, sg::CensusScope::kVertices);
  EXPECT_EQ(sg::infer_k(c4), 0u);
}

// Class census for a = 2, b = 1 over w+k: a class is fixed by the number n of
// finite coordinates below the middle and m of tail coordinates, and has
// degree C(n,2) + C(m,2) with m < k.
TEST(Census, ClassesSigma21AgainstCount) {
  for (std::uint64_t k = 1; k <= 5; ++k) {
    const auto c = sg::finite_degree_census(Ordinal::omega() + k, 2, 1, sg::CensusScope::kClasses);
    for (std::uint64_t j = 0; j <= sg::binom(k + 2, 2); ++j) {
      std::uint64_t want = 0;
      for (std::uint64_t n = 0; n * (n - 1) / 2 <= j; ++n) {
        for (std::uint64_t m = 0; m < k; ++m) want += n * (n - 1) / 2 + m * (m - 1) / 2 == j;
      }
      if (j < c.tail_from || c.tail) EXPECT_EQ(c.at(j), Count::finite(want)) << "k=" << k << " j=" << j;
    }
    EXPECT_EQ(sg::infer_k(c), k);
  }
}

TEST(Census, FiniteGroundAgreesWithGraph) {
  for (std::size_t a = 1; a <= 3; ++a) {
    for (std::size_t b = 0; b <= 2; ++b) {
      for (unsigned n = static_cast<unsigned>(a + b); n <= 9; ++n) {
        const auto g = ShiftGraph::build(n, sg::sigma(a, b));
        const auto want = sg::degree_census(g.graph());
        const auto got = sg::finite_degree_census(Ordinal::finite(n), a, b, sg::CensusScope::kVertices);
        std::uint64_t total = 0;
        for (std::uint64_t d = 0; d <= g.num_vertices(); ++d) {
          EXPECT_EQ(got.at(d), want.at(d)) << "a=" << a << " b=" << b << " n=" << n << " d=" << d;
          total += got.at(d).value();
        }
        EXPECT_EQ(total, g.num_vertices());
        EXPECT_EQ(sg::infer_k(got), n);
      }
    }
  }
}

TEST(Census, ScopeDefaultsAndErrors) {
  EXPECT_EQ(sg::default_census_scope(Ordinal::omega(), 1, 1), sg::CensusScope::kVertices);
  EXPECT_EQ(sg::default_census_scope(Ordinal::omega(), 2, 1), sg::CensusScope::kClasses);
  EXPECT_EQ(sg::default_census_scope(Ordinal::finite(9), 2, 1), sg::CensusScope::kVertices);
  const auto c = sg::finite_degree_census(Ordinal::omega() + 2, 2, 1, sg::CensusScope::kVertices);
  EXPECT_CODE(sg::infer_k(c), ErrorCode::kAmbiguousCensus);
  EXPECT_CODE(sg::finite_degree_census(Ordinal::omega(), 0, 2, sg::CensusScope::kVertices), ErrorCode::kUnsupported);
}

TEST(Io, JsonRoundTripAndDot) {
  const auto g = build(6, "132");
  const auto imported = sg::parse_graph_json(sg::to_json(g));
  EXPECT_EQ(imported.graph, g.graph());
  ASSERT_TRUE(imported.n.has_value());
  EXPECT_EQ(*imported.n, 6u);
  EXPECT_EQ(imported.type.value_or(""), "132");
  EXPECT_EQ(imported.vertices.size(), g.num_vertices());
  EXPECT_EQ(sg::parse_graph_json(sg::graph_to_json(g.graph())).graph, g.graph());

  const auto dot = sg::to_dot(build(5, "1221"));
  std::size_t labels = 0;
  for (std::size_t p = dot.find("[label="); p != std::string::npos; p = dot.find("[label=", p + 1)) ++labels;
  EXPECT_EQ(labels, 10u);
  EXPECT_NE(dot.find("label=\"(1,4)\""), std::string::npos);
  EXPECT_EQ(dot.rfind("graph G {", 0), 0u);

  EXPECT_CODE(sg::parse_graph_json("{"), ErrorCode::kSyntaxError);
  EXPECT_CODE(sg::parse_graph_json("{\"edges\":[[0,1]]}"), ErrorCode::kSyntaxError);
  EXPECT_CODE(sg::parse_graph_json("{\"num_vertices\":2,\"edges\":[[0]]}"), ErrorCode::kSyntaxError);
}

TEST(Io, Deterministic) {
  EXPECT_EQ(sg::to_json(build(7, "11322")), sg::to_json(build(7, "11322")));
}

}  // namespace
