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

// Vertex colourings: greedy bounds, an exact branch-and-bound solver, and the
// two lower-bound certificates for shift graphs.

#ifndef SHIFTGRAPH_COLORING_HPP_
#define SHIFTGRAPH_COLORING_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "shiftgraph/graph.hpp"

namespace shiftgraph {

using Color = std::uint32_t;

struct Coloring {
  std::vector<Color> colors;  // vertex id -> colour in [t]
  std::uint32_t t = 0;
};

bool is_proper(const Graph& g, const Coloring& c);

enum class GreedyOrder { kColex, kDegreeDesc };

// First-fit in the given order (ties by id).
Coloring greedy_chromatic(const Graph& g, GreedyOrder order = GreedyOrder::kDegreeDesc);

// Largest clique (exact; intended for the small graphs the solver sees).
std::vector<VertexId> max_clique(const Graph& g);

enum class ProofKind {
  kNone,             // bounds only
  kCliqueBound,      // chi equals the clique number
  kExhausted,        // chi - 1 colours ruled out by exhaustive search on G
  kPrefixExhausted,  // ruled out on the induced subgraph G(m, tau), m < n
};

struct ChromaticOptions {
  double time_budget_seconds = 600.0;
  // Exhaustive infeasibility searches only run on graphs up to this size.
  std::size_t proof_vertex_cap = 256;
};

struct ChromaticResult {
  bool exact = false;
  std::uint32_t chi = 0;  // meaningful when exact
  std::uint32_t lower_bound = 0;
  std::uint32_t upper_bound = 0;
  Coloring witness;  // proper, upper_bound colours
  ProofKind proof = ProofKind::kNone;
  std::uint32_t proof_ground = 0;  // m for kPrefixExhausted
  std::uint64_t nodes = 0;         // search nodes visited
};

enum class Colorability { kColorable, kNotColorable, kUnknown };

// Exhaustive DSATUR backtracking for a t-colouring. kUnknown only when the
// deadline passes; `nodes` accumulates visited nodes.
Colorability t_colorable(const Graph& g, std::uint32_t t, double time_budget_seconds,
                         Coloring* out, std::uint64_t* nodes = nullptr);

ChromaticResult exact_chromatic(const Graph& g, const ChromaticOptions& options = {});

// Same, but t-infeasibility is first sought on the prefix graphs G(m, tau)
// (colex ids below C(m, k)), which are induced subgraphs of G(n, tau).
ChromaticResult exact_chromatic(const ShiftGraph& g, const ChromaticOptions& options = {});

struct InjectionCertificate {
  bool injective = true;
  // f(x) as sorted colour lists, x = 0..n-a.
  std::vector<std::vector<Color>> sets;
  // On a collision f(x) == f(x') with x' >= x + a: the two ground elements
  // and a monochromatic edge forced by them.
  std::optional<std::pair<Element, Element>> collision;
  std::optional<Edge> monochromatic_edge;
};

// For sigma(a, 1) (132 when a = 1): f(x) = colours of (x, ..., x+a-1, y),
// y >= x + a. Only a-separated pairs are compared. WrongType otherwise.
InjectionCertificate injection_certificate(const ShiftGraph& g, const Coloring& c);

struct PartitionTreeNode {
  Element pivot = 0;
  std::vector<Element> residual;
  std::optional<Color> edge_color;  // colour of (parent pivot, pivot)
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
  std::size_t depth = 0;
};

struct PartitionTree {
  std::vector<PartitionTreeNode> nodes;  // nodes[0] is the root
  std::size_t height() const;
  // Two nodes on one root-to-leaf branch whose edge colours coincide.
  std::optional<std::pair<std::size_t, std::size_t>> repeated_branch_color() const;
};

// For 132: root pivot 0 with residual 1..n-1; a node's residual is split by
// the colour of (pivot, t), each part's minimum becoming a child's pivot.
PartitionTree partition_tree(const ShiftGraph& g, const Coloring& c);

}  // namespace shiftgraph

#endif  // SHIFTGRAPH_COLORING_HPP_
