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

// Recovering n and a labelling from an unlabelled G(n, sigma(a, b)).

#ifndef SHIFTGRAPH_RECONSTRUCT_HPP_
#define SHIFTGRAPH_RECONSTRUCT_HPP_

#include <cstdint>
#include <vector>

#include "shiftgraph/graph.hpp"
#include "shiftgraph/ordinal.hpp"
#include "shiftgraph/structure.hpp"
#include "shiftgraph/types.hpp"

namespace shiftgraph {

enum class Orientation { kForward, kReversed };

struct Labeling {
  std::vector<std::vector<Element>> assignment;  // vertex id -> subset of [n]
  Orientation orientation = Orientation::kForward;
};

struct ReconstructionReport {
  std::uint32_t n = 0;
  TypePattern pattern = sigma(1, 1);
  std::vector<Labeling> labelings;
  // Blocks in extraction order; block i holds the vertices whose first
  // coordinate is a+i-1 (block 0: first coordinate below a).
  std::vector<std::vector<VertexId>> trace;
};

struct ReconstructOptions {
  // Block sequences tried per orientation before giving up.
  std::size_t max_sequences = 8;
  CocliqueOptions coclique;
};

// First structurally consistent block sequence of the forward orientation.
// NotAShiftGraph when none exists.
std::vector<std::vector<VertexId>> extract_bar_sequence(const Graph& g, const TypePattern& type,
                                                        const ReconstructOptions& options = {});

// Only labellings that reproduce the input edge set exactly are returned.
// Unsupported unless type is sigma(a, b) with a, b >= 1; WidthMismatch when
// |V| is no binomial C(n, a+b); NotAShiftGraph when nothing validates.
ReconstructionReport reconstruct(const Graph& g, const TypePattern& type,
                                 const ReconstructOptions& options = {});

// True iff `labeling` is a bijection onto the vertices of G(n, type) carrying
// the edges of g onto its edges.
bool validate_labeling(const Graph& g, const ShiftGraph& canonical, const Labeling& labeling);

// Orientation-reversing map x -> n-1-x applied to a subset (result sorted).
std::vector<Element> reverse_subset(std::span<const Element> subset, std::uint32_t n);

struct SymbolicAlpha {
  Ordinal alpha;
  std::uint64_t k = 0;
  CensusScope scope = CensusScope::kVertices;
  DegreeCensus census;
};

// alpha = limit part of the input + k, where k is read off the degree census.
SymbolicAlpha infer_alpha_symbolic(const Ordinal& alpha, std::size_t a, std::size_t b);

}  // namespace shiftgraph

#endif  // SHIFTGRAPH_RECONSTRUCT_HPP_
