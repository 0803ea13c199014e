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

// Structural analyses: isolated points, common neighbours, neighbour-set
// equivalence classes and their quotient, side-conditioned co-cliques.

#ifndef SHIFTGRAPH_STRUCTURE_HPP_
#define SHIFTGRAPH_STRUCTURE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "shiftgraph/graph.hpp"

namespace shiftgraph {

std::vector<VertexId> isolated_vertices(const Graph& g);

// N(u) ∩ N(v), sorted. InvalidArgument when u == v.
std::vector<VertexId> common_neighbors(const Graph& g, VertexId u, VertexId v);

struct EquivalencePartition {
  // Classes ordered by smallest member; members sorted.
  std::vector<std::vector<VertexId>> classes;
  std::vector<std::uint32_t> class_of;
};

// Vertices with identical neighbour sets (such vertices are never adjacent).
EquivalencePartition equivalence_classes(const Graph& g);

struct QuotientGraph {
  Graph graph;                       // node i stands for classes[i]
  std::vector<std::uint64_t> sizes;  // class sizes
};

QuotientGraph quotient(const Graph& g, const EquivalencePartition& partition);

enum class SideCondition { kDisjointNeighborSets, kEqualOrDisjoint };

struct CocliqueOptions {
  // BudgetExceeded once this many maximal sets have been examined.
  std::uint64_t max_examined = std::uint64_t{1} << 24;
};

// Maximal co-cliques of the subgraph induced on `region` whose members
// pairwise satisfy `condition`, neighbour sets being taken inside the region.
// Each set is sorted; the list is in lexicographic order.
std::vector<std::vector<VertexId>> max_cocliques_with_side_condition(
    const Graph& g, std::span<const VertexId> region, SideCondition condition,
    const CocliqueOptions& options = {});

struct BipartiteWitness {
  std::vector<VertexId> left;
  std::vector<VertexId> right;
  std::optional<Element> center;
};

struct BipartiteFormReport {
  std::uint64_t pairs_checked = 0;  // pairs with at least two common neighbours
  std::vector<Edge> violations;     // such pairs sharing no coordinate
  std::vector<BipartiteWitness> stars;
};

// For G(n, 132): every pair with two or more common neighbours shares a
// coordinate, and the stars {(a,x)} x {(x,b)} are complete bipartite.
// WrongType for any other type.
BipartiteFormReport check_bipartite_form(const ShiftGraph& g);

}  // namespace shiftgraph

#endif  // SHIFTGRAPH_STRUCTURE_HPP_
