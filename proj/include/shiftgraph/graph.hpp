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

// Finite shift graphs G(n, tau) and symbolic degree queries over ordinal
// ground sets.

#ifndef SHIFTGRAPH_GRAPH_HPP_
#define SHIFTGRAPH_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shiftgraph/bitset.hpp"
#include "shiftgraph/ordinal.hpp"
#include "shiftgraph/types.hpp"

namespace shiftgraph {

using VertexId = std::uint32_t;
using Element = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

// Simple undirected graph. Neighbor lists are sorted; when the vertex count is
// at most `dense_cap` adjacency rows are also kept as packed bits.
class Graph {
 public:
  static constexpr std::size_t kDefaultDenseCap = std::size_t{1} << 13;

  Graph() = default;
  // Edges may be given in any order and orientation; duplicates are merged.
  // Self-loops and out-of-range endpoints throw InvalidArgument.
  static Graph from_edges(std::size_t num_vertices, std::span<const Edge> edges,
                          std::size_t dense_cap = kDefaultDenseCap);
  // Takes per-vertex neighbor lists (symmetric, loop-free; sorted here).
  static Graph from_adjacency(std::vector<std::vector<VertexId>> adjacency,
                              std::size_t dense_cap = kDefaultDenseCap);

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return neighbors_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(VertexId u, VertexId v) const noexcept;

  bool has_dense_rows() const noexcept { return !rows_.empty(); }
  // Neighbor set of v as a bitset (computed on demand when not dense).
  DynBitset neighbor_set(VertexId v) const;

  // Edges (u, v) with u < v in increasing order.
  std::vector<Edge> edges() const;

  // Induced subgraph on `keep` (in the given order); vertex i of the result is
  // keep[i].
  Graph induced(std::span<const VertexId> keep) const;

  // perm[old] = new.
  Graph relabeled(std::span<const VertexId> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_;
  }

 private:
  void build_dense(std::size_t dense_cap);

  std::vector<std::size_t> offsets_;
  std::vector<VertexId> neighbors_;
  std::vector<DynBitset> rows_;
};

struct BuildOptions {
  std::uint64_t max_vertices = std::uint64_t{1} << 22;
  // Bound on stored adjacency entries (twice the edge count).
  std::uint64_t max_adjacency = std::uint64_t{1} << 28;
  std::size_t dense_cap = Graph::kDefaultDenseCap;
};

// G(n, tau) on the width-k subsets of [n]; vertex ids are colex ranks.
class ShiftGraph {
 public:
  static ShiftGraph build(std::uint32_t n, const TypePattern& type,
                          const BuildOptions& options = {});

  std::uint32_t n() const noexcept { return n_; }
  const TypePattern& type() const noexcept { return type_; }
  std::uint32_t width() const noexcept { return static_cast<std::uint32_t>(type_.width()); }
  const Graph& graph() const noexcept { return graph_; }
  std::size_t num_vertices() const noexcept { return graph_.num_vertices(); }

  std::span<const Element> vertex(VertexId id) const noexcept {
    return {elements_.data() + static_cast<std::size_t>(id) * width(), width()};
  }
  VertexId id_of(std::span<const Element> subset) const;

  std::string label(VertexId id) const;

 private:
  ShiftGraph(std::uint32_t n, TypePattern type) : n_(n), type_(std::move(type)) {}

  std::uint32_t n_ = 0;
  TypePattern type_;
  Graph graph_;
  std::vector<Element> elements_;
};

// Colex rank of a vertex of a graph on [n]; validates range and order.
std::uint64_t rank(std::span<const Element> vertex, std::uint32_t n);
std::vector<Element> unrank(std::uint64_t index, std::uint32_t n, std::uint32_t k);

// Number of neighbors y of x with type_of_pair(x, y) == type, inside [n].
// x must be a sorted width(type)-subset of [n].
std::uint64_t count_typed_neighbors(std::span<const Element> x, std::uint32_t n,
                                    const TypePattern& type);

// Degree of v in G(alpha, sigma(a, b)) as C(|below v_1|, a) + C(|above v_last|, a).
Count degree_closed_form(const Ordinal& alpha, std::size_t a, std::size_t b,
                         std::span<const Ordinal> v);

enum class CensusScope { kVertices, kClasses };

// degree -> number of vertices (or (first, last) classes) of that degree.
// Exact for d < tail_from; when `tail` is set every d >= tail_from has count
// *tail, otherwise counts beyond tail_from are not materialized.
struct DegreeCensus {
  CensusScope scope = CensusScope::kVertices;
  std::size_t a = 0;
  std::size_t b = 0;
  bool finite_ground = false;
  std::map<std::uint64_t, Count> entries;  // nonzero counts only
  std::uint64_t tail_from = 0;
  std::optional<Count> tail;

  Count at(std::uint64_t degree) const;
  // Shrinks tail_from while the last explicit entry equals the tail.
  void normalize();
};

// Default scope: classes whenever middle coordinates are free (width >= 3 over
// an infinite ground), vertices otherwise.
CensusScope default_census_scope(const Ordinal& alpha, std::size_t a, std::size_t b);

// Computed from degree_closed_form over (first, last) pairs, never by
// materialization. Unsupported when a == 0.
DegreeCensus finite_degree_census(const Ordinal& alpha, std::size_t a, std::size_t b,
                                  CensusScope scope);

// Vertex-scope census of a materialized graph.
DegreeCensus degree_census(const Graph& graph);

// Finite part k of the ground ordinal from a census of an infinite ground.
// a == 1 reads k off the largest attained count; a >= 2 deconvolves the
// census by the first-coordinate contribution.
std::uint64_t infer_k(const DegreeCensus& census);
std::uint64_t infer_k_by_deconvolution(const DegreeCensus& census);

}  // namespace shiftgraph

#endif  // SHIFTGRAPH_GRAPH_HPP_
