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

#ifndef SHIFTGRAPH_IO_HPP_
#define SHIFTGRAPH_IO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shiftgraph/graph.hpp"

namespace shiftgraph {

// Undirected DOT; nodes are colex ids labelled "(x1,...,xk)".
std::string to_dot(const ShiftGraph& g);

// {"n","type","vertices":[[...]],"edges":[[i,j],...]} with colex ids and i < j.
std::string to_json(const ShiftGraph& g);

// Graph given by an edge list. Vertex count comes from "num_vertices" when
// present, else from the length of "vertices"; the other fields are optional
// and carried through untouched.
struct ImportedGraph {
  Graph graph;
  std::optional<std::uint32_t> n;
  std::optional<std::string> type;
  std::vector<std::vector<Element>> vertices;
};

ImportedGraph parse_graph_json(std::string_view text);

// Plain edge-list JSON for an unlabelled graph: {"num_vertices","edges"}.
std::string graph_to_json(const Graph& g);

}  // namespace shiftgraph

#endif  // SHIFTGRAPH_IO_HPP_
