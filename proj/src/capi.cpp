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

#include "shiftgraph/shiftgraph.h"

#include <cstring>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "shiftgraph/automorphism.hpp"
#include "shiftgraph/coloring.hpp"
#include "shiftgraph/error.hpp"
#include "shiftgraph/graph.hpp"
#include "shiftgraph/io.hpp"
#include "shiftgraph/random.hpp"
#include "shiftgraph/reconstruct.hpp"
#include "shiftgraph/selftest.hpp"
#include "shiftgraph/structure.hpp"

using nlohmann::ordered_json;
namespace sg = shiftgraph;

struct sg_graph {
  std::optional<sg::ShiftGraph> shift;
  std::optional<sg::Graph> plain;

  const sg::Graph& graph() const { return shift ? shift->graph() : *plain; }
};

namespace {

thread_local std::string g_last_error;
bool g_corrupt_selftest = false;

int set_error(int code, const std::string& message) {
  g_last_error = message;
  return code;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
int guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const sg::Error& e) {
    return set_error(static_cast<int>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(SG_EBUDGET_EXCEEDED, "out of memory");
  } catch (const std::exception& e) {
    return set_error(SG_EINTERNAL, e.what());
  }
}

int require(bool ok, const char* what) {
  if (!ok) sg::fail(sg::ErrorCode::kInvalidArgument, what);
  return SG_OK;
}

std::string big(const sg::BigInt& x) { return x.str(); }

ordered_json count_json(const sg::Count& c) {
  if (c.is_infinite()) return "inf";
  return c.value();
}

ordered_json census_json(const sg::DegreeCensus& c) {
  ordered_json out = ordered_json::object();
  for (const auto& [d, cnt] : c.entries) {
    if (d < c.tail_from) out[std::to_string(d)] = count_json(cnt);
  }
  if (c.tail) out[std::to_string(c.tail_from) + "+"] = count_json(*c.tail);
  return out;
}

std::optional<sg::CensusScope> parse_scope(const char* scope) {
  if (!scope || !*scope) return std::nullopt;
  const std::string s(scope);
  if (s == "vertices") return sg::CensusScope::kVertices;
  if (s == "classes") return sg::CensusScope::kClasses;
  sg::fail(sg::ErrorCode::kInvalidArgument, "scope must be \"vertices\" or \"classes\"");
}

sg::SigmaParams sigma_params(const sg::TypePattern& type) {
  const auto ab = sg::as_sigma(type);
  if (!ab) sg::fail(sg::ErrorCode::kUnsupported, "type " + type.render() + " is not of the form 1^a 3^b 2^a");
  return *ab;
}

std::string_view proof_name(sg::ProofKind p) {
  switch (p) {
    case sg::ProofKind::kNone: return "none";
    case sg::ProofKind::kCliqueBound: return "clique_bound";
    case sg::ProofKind::kExhausted: return "exhausted";
    case sg::ProofKind::kPrefixExhausted: return "prefix_exhausted";
  }
  return "none";
}

ordered_json id_list(const std::vector<sg::VertexId>& ids) {
  ordered_json a = ordered_json::array();
  for (auto v : ids) a.push_back(v);
  return a;
}

}  // namespace

extern "C" {

const char* sg_last_error(void) { return g_last_error.c_str(); }

const char* sg_status_name(int status) {
  if (status < 0 || status > SG_EINTERNAL) return "Unknown";
  return sg::error_code_name(static_cast<sg::ErrorCode>(status)).data();
}

void sg_string_free(char* s) { delete[] s; }

int sg_graph_build(uint32_t n, const char* type, uint64_t max_vertices, sg_graph** out) {
  return guarded([&] {
    require(type && out, "sg_graph_build: null argument");
    sg::BuildOptions opts;
    if (max_vertices) opts.max_vertices = max_vertices;
    auto h = std::make_unique<sg_graph>();
    h->shift = sg::ShiftGraph::build(n, sg::TypePattern::parse(type), opts);
    *out = h.release();
    return SG_OK;
  });
}

int sg_graph_from_json(const char* json, sg_graph** out) {
  return guarded([&] {
    require(json && out, "sg_graph_from_json: null argument");
    auto h = std::make_unique<sg_graph>();
    h->plain = sg::parse_graph_json(json).graph;
    *out = h.release();
    return SG_OK;
  });
}

int sg_graph_shuffled(const sg_graph* g, uint64_t seed, sg_graph** out) {
  return guarded([&] {
    require(g && out, "sg_graph_shuffled: null argument");
    auto h = std::make_unique<sg_graph>();
    h->plain = g->graph().relabeled(sg::seeded_permutation(g->graph().num_vertices(), seed));
    *out = h.release();
    return SG_OK;
  });
}

void sg_graph_free(sg_graph* g) { delete g; }

int sg_graph_num_vertices(const sg_graph* g, uint64_t* out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = g->graph().num_vertices();
    return SG_OK;
  });
}

int sg_graph_num_edges(const sg_graph* g, uint64_t* out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = g->graph().num_edges();
    return SG_OK;
  });
}

int sg_graph_adjacent(const sg_graph* g, uint32_t u, uint32_t v, int* out) {
  return guarded([&] {
    require(g && out, "null argument");
    const auto nv = g->graph().num_vertices();
    if (u >= nv || v >= nv) sg::fail(sg::ErrorCode::kOutOfRange, "vertex id out of range");
    *out = g->graph().adjacent(u, v) ? 1 : 0;
    return SG_OK;
  });
}

int sg_graph_export(const sg_graph* g, const char* format, char** out) {
  return guarded([&] {
    require(g && format && out, "sg_graph_export: null argument");
    const std::string f(format);
    std::string text;
    if (f == "json") {
      text = g->shift ? sg::to_json(*g->shift) : sg::graph_to_json(*g->plain);
    } else if (f == "dot" || f == "text") {
      if (!g->shift) sg::fail(sg::ErrorCode::kUnsupported, "unlabelled graphs export as json only");
      if (f == "dot") {
        text = sg::to_dot(*g->shift);
      } else {
        const auto& s = *g->shift;
        std::ostringstream os;
        os << "G(" << s.n() << "," << s.type().render() << "): " << s.num_vertices() << " vertices, "
           << s.graph().num_edges() << " edges\n";
        for (sg::VertexId v = 0; v < s.num_vertices(); ++v) {
          os << v << " " << s.label(v) << ":";
          for (auto u : s.graph().neighbors(v)) os << " " << u;
          os << "\n";
        }
        text = os.str();
      }
    } else {
      sg::fail(sg::ErrorCode::kInvalidArgument, "format must be json, dot or text");
    }
    *out = dup_string(text);
    return SG_OK;
  });
}

int sg_analyze(const sg_graph* g, char** out_json) {
  return guarded([&] {
    require(g && out_json, "sg_analyze: null argument");
    const sg::Graph& gr = g->graph();
    ordered_json out;
    if (g->shift) {
      out["n"] = g->shift->n();
      out["type"] = g->shift->type().render();
    }
    out["vertices"] = gr.num_vertices();
    out["edges"] = gr.num_edges();
    const auto iso = sg::isolated_vertices(gr);
    out["isolated_count"] = iso.size();
    out["isolated"] = id_list(iso);
    out["degree_census"] = census_json(sg::degree_census(gr));
    const auto part = sg::equivalence_classes(gr);
    std::map<std::size_t, std::size_t> sizes;
    for (const auto& c : part.classes) ++sizes[c.size()];
    ordered_json cs = ordered_json::object();
    for (const auto& [size, mult] : sizes) cs[std::to_string(size)] = mult;
    out["classes"] = part.classes.size();
    out["class_sizes"] = cs;
    const auto q = sg::quotient(gr, part);
    out["quotient"] = {{"nodes", q.graph.num_vertices()},
                       {"edges", q.graph.num_edges()},
                       {"isolated", sg::isolated_vertices(q.graph).size()}};
    if (g->shift) {
      const auto ab = sg::as_sigma(g->shift->type());
      if (ab && ab->a == 1 && ab->b == 1) {
        const auto rep = sg::check_bipartite_form(*g->shift);
        out["bipartite_form"] = {{"pairs_checked", rep.pairs_checked},
                                 {"violations", rep.violations.size()},
                                 {"stars", rep.stars.size()}};
      }
      if (ab && ab->a >= 1 && ab->b >= 1 && gr.num_vertices() <= 512) {
        std::vector<sg::VertexId> all(gr.num_vertices());
        for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<sg::VertexId>(v);
        const auto cond = ab->a == 1 ? sg::SideCondition::kDisjointNeighborSets : sg::SideCondition::kEqualOrDisjoint;
        ordered_json sets = ordered_json::array();
        for (const auto& s : sg::max_cocliques_with_side_condition(gr, all, cond)) sets.push_back(id_list(s));
        out["side_condition_cocliques"] = sets;
      }
    }
    *out_json = dup_string(out.dump());
    return SG_OK;
  });
}

int sg_census(const char* ground, const char* type, const char* scope, char** out_json) {
  return guarded([&] {
    require(ground && type && out_json, "sg_census: null argument");
    const auto alpha = sg::Ordinal::parse(ground);
    const auto ab = sigma_params(sg::TypePattern::parse(type));
    const auto sc = parse_scope(scope).value_or(sg::default_census_scope(alpha, ab.a, ab.b));
    *out_json = dup_string(census_json(sg::finite_degree_census(alpha, ab.a, ab.b, sc)).dump());
    return SG_OK;
  });
}

int sg_infer_alpha(const char* ground, const char* type, char** out_json) {
  return guarded([&] {
    require(ground && type && out_json, "sg_infer_alpha: null argument");
    const auto ab = sigma_params(sg::TypePattern::parse(type));
    const auto r = sg::infer_alpha_symbolic(sg::Ordinal::parse(ground), ab.a, ab.b);
    ordered_json out;
    out["alpha"] = r.alpha.to_string();
    out["k"] = r.k;
    out["scope"] = r.scope == sg::CensusScope::kVertices ? "vertices" : "classes";
    out["census"] = census_json(r.census);
    *out_json = dup_string(out.dump());
    return SG_OK;
  });
}

int sg_reconstruct(const sg_graph* g, const char* type, int detail, char** out_json) {
  return guarded([&] {
    require(g && type && out_json, "sg_reconstruct: null argument");
    const auto r = sg::reconstruct(g->graph(), sg::TypePattern::parse(type));
    ordered_json out;
    out["n"] = r.n;
    out["labelings"] = r.labelings.size();
    if (detail) {
      ordered_json trace = ordered_json::array();
      for (const auto& b : r.trace) trace.push_back(b.size());
      out["block_sizes"] = trace;
      ordered_json labs = ordered_json::array();
      for (const auto& lab : r.labelings) {
        ordered_json l;
        l["orientation"] = lab.orientation == sg::Orientation::kForward ? "forward" : "reversed";
        l["assignment"] = lab.assignment;
        labs.push_back(std::move(l));
      }
      out["assignments"] = labs;
    }
    *out_json = dup_string(out.dump());
    return SG_OK;
  });
}

int sg_chromatic(const sg_graph* g, int exact, double budget_seconds, char** out_json) {
  return guarded([&] {
    require(g && out_json, "sg_chromatic: null argument");
    const sg::Graph& gr = g->graph();
    ordered_json out;
    sg::Coloring witness;
    int status = SG_OK;
    if (exact) {
      sg::ChromaticOptions opts;
      if (budget_seconds > 0) opts.time_budget_seconds = budget_seconds;
      const auto r = g->shift ? sg::exact_chromatic(*g->shift, opts) : sg::exact_chromatic(gr, opts);
      out["exact"] = r.exact;
      if (r.exact) out["chi"] = r.chi;
      out["lower_bound"] = r.lower_bound;
      out["upper_bound"] = r.upper_bound;
      out["proof"] = proof_name(r.proof);
      if (r.proof == sg::ProofKind::kPrefixExhausted) out["proof_ground"] = r.proof_ground;
      witness = r.witness;
      if (!r.exact) {
        status = set_error(SG_EBUDGET_EXCEEDED, "chromatic: time budget exhausted; bounds reported");
      }
    } else {
      witness = sg::greedy_chromatic(gr, sg::GreedyOrder::kDegreeDesc);
      out["exact"] = false;
      out["lower_bound"] = sg::max_clique(gr).size();
      out["upper_bound"] = witness.t;
      out["proof"] = proof_name(sg::ProofKind::kNone);
    }
    ordered_json w = ordered_json::object();
    for (std::size_t v = 0; v < witness.colors.size(); ++v) w[std::to_string(v)] = witness.colors[v];
    out["witness"] = w;
    if (g->shift) {
      const auto ab = sg::as_sigma(g->shift->type());
      if (ab && ab->b == 1 && sg::is_proper(gr, witness)) {
        out["injective"] = sg::injection_certificate(*g->shift, witness).injective;
        if (ab->a == 1) {
          const auto tree = sg::partition_tree(*g->shift, witness);
          out["partition_tree"] = {{"nodes", tree.nodes.size()},
                                   {"height", tree.height()},
                                   {"branch_colors_distinct", !tree.repeated_branch_color().has_value()}};
        }
      }
    }
    *out_json = dup_string(out.dump());
    return status;
  });
}

int sg_aut(const sg_graph* g, int compare, char** out_json) {
  return guarded([&] {
    require(g && out_json, "sg_aut: null argument");
    ordered_json out;
    auto classes_json = [](const sg::AutByClasses& c) {
      return ordered_json{{"classes", c.class_part.to_string()},
                          {"class_part_decimal", big(c.class_part.order)},
                          {"quotient_nodes", c.quotient_nodes},
                          {"quotient_aut_decimal", big(c.quotient_aut_order)}};
    };
    if (g->shift) {
      sg::AutOptions opts;
      if (!compare) opts.brute_vertex_cap = 0;
      const auto cmp = sg::compare_aut(g->shift->n(), g->shift->type(), opts);
      out["order_decimal"] = big(cmp.computed.order);
      out["factored"] = classes_json(cmp.computed);
      if (cmp.predicted) {
        out["predicted"] = {{"group", cmp.predicted->to_string()},
                            {"order_decimal", big(cmp.predicted->order)},
                            {"formula", cmp.formula}};
      } else {
        out["predicted"] = nullptr;
      }
      if (cmp.brute) out["brute_decimal"] = big(*cmp.brute);
      out["verdict"] = sg::verdict_name(cmp.verdict);
      if (!cmp.note.empty()) out["note"] = cmp.note;
    } else {
      const auto c = sg::aut_order_via_classes(*g->plain);
      out["order_decimal"] = big(c.order);
      out["factored"] = classes_json(c);
      out["predicted"] = nullptr;
      if (compare && g->plain->num_vertices() <= sg::AutOptions{}.brute_vertex_cap) {
        out["brute_decimal"] = big(sg::brute_aut_order(*g->plain));
      }
      out["verdict"] = sg::verdict_name(sg::Verdict::kNoFormula);
    }
    *out_json = dup_string(out.dump());
    return SG_OK;
  });
}

int sg_selftest(int quick, int* passed, char** out_json) {
  return guarded([&] {
    require(passed && out_json, "sg_selftest: null argument");
    sg::SelftestOptions opts;
    opts.quick = quick != 0;
    opts.corrupt_adjacency = g_corrupt_selftest;
    const auto rep = sg::run_selftest(opts);
    ordered_json suites = ordered_json::array();
    for (const auto& s : rep.suites) {
      ordered_json j{{"name", s.name}, {"passed", s.passed}, {"checks", s.checks}};
      if (!s.passed) j["failure"] = s.failure;
      suites.push_back(std::move(j));
    }
    *passed = rep.passed() ? 1 : 0;
    *out_json = dup_string(ordered_json{{"passed", rep.passed()}, {"suites", suites}}.dump());
    return SG_OK;
  });
}

void sg_selftest_set_corruption(int enabled) { g_corrupt_selftest = enabled != 0; }

}  // extern "C"
