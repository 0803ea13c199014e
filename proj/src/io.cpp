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

#include "shiftgraph/io.hpp"

#include <json.hpp>
#include <sstream>

#include "shiftgraph/error.hpp"

namespace shiftgraph {

using nlohmann::json;

std::string to_dot(const ShiftGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    os << "  " << v << " [label=\"" << g.label(static_cast<VertexId>(v)) << "\"];\n";
  }
  for (const auto& [u, v] : g.graph().edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

json edges_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return edges;
}

}  // namespace

std::string to_json(const ShiftGraph& g) {
  json out;
  out["n"] = g.n();
  out["type"] = g.type().render();
  json vs = json::array();
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const auto elems = g.vertex(static_cast<VertexId>(v));
    vs.push_back(std::vector<Element>(elems.begin(), elems.end()));
  }
  out["vertices"] = std::move(vs);
  out["edges"] = edges_json(g.graph());
  return out.dump();
}

std::string graph_to_json(const Graph& g) {
  json out;
  out["num_vertices"] = g.num_vertices();
  out["edges"] = edges_json(g);
  return out.dump();
}

ImportedGraph parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::kSyntaxError, std::string("graph json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array()) {
    fail(ErrorCode::kSyntaxError, "graph json: expected an object with an \"edges\" array");
  }
  ImportedGraph out;
  try {
    if (doc.contains("n")) out.n = doc["n"].get<std::uint32_t>();
    if (doc.contains("type")) out.type = doc["type"].get<std::string>();
    if (doc.contains("vertices")) {
      out.vertices = doc["vertices"].get<std::vector<std::vector<Element>>>();
    }
    std::size_t nv = 0;
    if (doc.contains("num_vertices")) {
      nv = doc["num_vertices"].get<std::size_t>();
    } else if (doc.contains("vertices")) {
      nv = out.vertices.size();
    } else {
      fail(ErrorCode::kSyntaxError, "graph json: need \"num_vertices\" or \"vertices\"");
    }
    std::vector<Edge> edges;
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2) fail(ErrorCode::kSyntaxError, "graph json: edge must be [i,j]");
      edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    out.graph = Graph::from_edges(nv, edges);
  } catch (const json::exception& e) {
    fail(ErrorCode::kSyntaxError, std::string("graph json: ") + e.what());
  }
  return out;
}

}  // namespace shiftgraph
