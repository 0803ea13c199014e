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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Time limits are wall-clock and pinned below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "shiftgraph/automorphism.hpp"
#include "shiftgraph/coloring.hpp"
#include "shiftgraph/combinatorics.hpp"
#include "shiftgraph/graph.hpp"
#include "shiftgraph/random.hpp"
#include "shiftgraph/reconstruct.hpp"
#include "shiftgraph/structure.hpp"

namespace sg = shiftgraph;
using sg::Ordinal;
using sg::ShiftGraph;
using sg::TypePattern;
using sg::VertexId;

namespace {

constexpr double kLimitTypesSeconds = 1e-3;
constexpr double kLimitDegreeSeconds = 30.0;
constexpr double kLimitBipartiteSeconds = 10.0;
constexpr double kLimitReconstructSeconds = 120.0;
constexpr double kLimitChromaticN16Seconds = 600.0;
constexpr double kLimitAutFormulaSeconds = 300.0;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

ShiftGraph build(unsigned n, const std::string& type) { return ShiftGraph::build(n, TypePattern::parse(type)); }

// A criterion body records its first failure in `why`.
struct Result {
  bool ok = true;
  std::string why;
  std::string info;
  void fail(const std::string& msg) {
    if (ok) why = msg;
    ok = false;
  }
};

int g_failures = 0;

void report(int id, const char* title, const std::function<void(Result&)>& body) {
  Result r;
  const auto t0 = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  const double secs = since(t0);
  std::printf("%s criterion %2d: %s (%.3f s)%s%s%s%s\n", r.ok ? "PASS" : "FAIL", id, title, secs,
              r.info.empty() ? "" : " ", r.info.c_str(), r.ok ? "" : " -- ", r.why.c_str());
  std::fflush(stdout);
  if (!r.ok) ++g_failures;
}

void c1_type_oracle(Result& r) {
  using V = std::vector<std::uint32_t>;
  const auto t0 = Clock::now();
  const auto a = sg::type_of_pair(V{1, 5, 6}, V{3, 5, 8}).render();
  const auto b = sg::type_of_pair(V{1, 3, 5}, V{2, 4, 6}).render();
  const double secs = since(t0);
  if (a != "12312") r.fail("t((1,5,6),(3,5,8)) = " + a);
  if (b != "121212") r.fail("t((1,3,5),(2,4,6)) = " + b);
  const auto g = build(5, "1221");
  if (!g.graph().adjacent(g.id_of(V{1, 4}), g.id_of(V{2, 3}))) r.fail("(1,4)-(2,3) should be an edge of G(5,1221)");
  if (g.graph().adjacent(g.id_of(V{1, 3}), g.id_of(V{2, 4}))) r.fail("(1,3)-(2,4) should not be an edge of G(5,1221)");
  if (secs >= kLimitTypesSeconds) r.fail("type computation took " + std::to_string(secs) + " s");
}

void c2_degree(Result& r) {
  const auto t0 = Clock::now();
  std::size_t checked = 0;
  for (std::size_t a = 1; a <= 3; ++a) {
    for (std::size_t b = 0; b <= 2; ++b) {
      if (a + b > 5) continue;
      for (unsigned n = static_cast<unsigned>(a + b); n <= 10; ++n) {
        const auto g = ShiftGraph::build(n, sg::sigma(a, b));
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
          std::vector<Ordinal> x;
          for (auto e : g.vertex(v)) x.push_back(Ordinal::finite(e));
          const auto closed = sg::degree_closed_form(Ordinal::finite(n), a, b, x);
          ++checked;
          if (closed != sg::Count::finite(g.graph().degree(v))) {
            r.fail("sigma(" + std::to_string(a) + "," + std::to_string(b) + ") n=" + std::to_string(n) + " vertex " + g.label(v));
            return;
          }
        }
      }
    }
  }
  // The materialised degrees are themselves checked against mask enumeration
  // at the largest size of each family.
  for (std::size_t a = 1; a <= 3; ++a) {
    for (std::size_t b = 0; b <= 2 && a + b <= 5; ++b) {
      const auto type = sg::sigma(a, b).render();
      const auto ref = oracle::shift_graph(10, type);
      const auto g = build(10, type);
      for (VertexId v = 0; v < ref.size(); ++v) {
        if (ref.degree(v) != g.graph().degree(v)) r.fail(type + ": materialised degree differs from enumeration");
      }
    }
  }
  const double secs = since(t0);
  r.info = std::to_string(checked) + " vertices";
  if (secs >= kLimitDegreeSeconds) r.fail("took " + std::to_string(secs) + " s");
}

void c3_isolated(Result& r) {
  for (unsigned n = 2; n <= 12; ++n) {
    const auto c = sg::isolated_vertices(build(n, "132").graph()).size();
    if (c != 1) r.fail("G(" + std::to_string(n) + ",132) has " + std::to_string(c) + " isolated vertices");
  }
  for (unsigned n = 5; n <= 12; ++n) {
    const auto c = sg::isolated_vertices(build(n, "11322").graph()).size();
    if (c != 4 * (n - 3)) r.fail("G(" + std::to_string(n) + ",11322) has " + std::to_string(c) + " isolated vertices");
  }
}

void c4_bipartite(Result& r) {
  const auto t0 = Clock::now();
  std::uint64_t pairs = 0;
  for (unsigned n = 2; n <= 9; ++n) {
    const auto rep = sg::check_bipartite_form(build(n, "132"));
    pairs += rep.pairs_checked;
    if (!rep.violations.empty()) r.fail("n=" + std::to_string(n) + ": " + std::to_string(rep.violations.size()) + " violations");
  }
  const double secs = since(t0);
  r.info = std::to_string(pairs) + " pairs";
  if (secs >= kLimitBipartiteSeconds) r.fail("took " + std::to_string(secs) + " s");
}

void c5_census(Result& r) {
  for (std::uint64_t k = 0; k <= 6; ++k) {
    const auto c = sg::finite_degree_census(Ordinal::omega() + k, 1, 1, sg::CensusScope::kVertices);
    for (std::uint64_t j = 0; j <= 20; ++j) {
      const std::uint64_t want = k == 0 ? 0 : (j + 1 < k ? j + 1 : k);
      if (c.at(j) != sg::Count::finite(want)) {
        r.fail("k=" + std::to_string(k) + " degree " + std::to_string(j) + ": " + c.at(j).to_string());
        return;
      }
    }
    const auto inferred = sg::infer_k(c);
    if (inferred != k) r.fail("infer_k gave " + std::to_string(inferred) + " for k=" + std::to_string(k));
  }
}

void c6_reconstruct(Result& r) {
  const auto t0 = Clock::now();
  std::size_t runs = 0;
  for (const std::string type : {"132", "1332", "11322"}) {
    for (unsigned n = 5; n <= 9; ++n) {
      const auto g = build(n, type);
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto h = g.graph().relabeled(sg::seeded_permutation(g.num_vertices(), seed));
        const auto rep = sg::reconstruct(h, TypePattern::parse(type));
        ++runs;
        const std::string where = type + " n=" + std::to_string(n) + " seed=" + std::to_string(seed);
        if (rep.n != n) r.fail(where + ": recovered n=" + std::to_string(rep.n));
        if (rep.labelings.empty()) r.fail(where + ": no labeling");
        if (type == "132" && rep.labelings.size() != 2) r.fail(where + ": " + std::to_string(rep.labelings.size()) + " labelings");
        // Independent edge check through the mask oracle's type words.
        const auto sw = oracle::swapped(type);
        for (const auto& lab : rep.labelings) {
          std::set<std::vector<sg::Element>> image(lab.assignment.begin(), lab.assignment.end());
          if (image.size() != h.num_vertices()) r.fail(where + ": assignment not injective");
          for (VertexId u = 0; u < h.num_vertices(); ++u) {
            for (VertexId v = u + 1; v < h.num_vertices(); ++v) {
              const auto w = oracle::type_word(lab.assignment[u], lab.assignment[v]);
              if ((w == type || w == sw) != h.adjacent(u, v)) {
                r.fail(where + ": labeling is not an isomorphism");
                goto next;
              }
            }
          }
        next:;
        }
        if (!r.ok) return;
      }
    }
  }
  const double secs = since(t0);
  r.info = std::to_string(runs) + " shuffles";
  if (secs >= kLimitReconstructSeconds) r.fail("took " + std::to_string(secs) + " s");
}

unsigned ceil_log2(unsigned n) {
  unsigned t = 0;
  while ((1u << t) < n) ++t;
  return t;
}

bool proper(const sg::Graph& g, const std::vector<std::uint32_t>& c, std::uint32_t t) {
  for (auto x : c) {
    if (x >= t) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (c[u] == c[v]) return false;
  }
  return true;
}

std::vector<sg::Coloring> g_solver_colourings;
std::vector<unsigned> g_solver_n;

void c7_chromatic(Result& r) {
  std::ostringstream info;
  for (unsigned n = 2; n <= 16; ++n) {
    const auto g = build(n, "132");
    const auto t0 = Clock::now();
    const auto res = sg::exact_chromatic(g);
    const double secs = since(t0);
    const unsigned want = ceil_log2(n);
    const std::string where = "n=" + std::to_string(n);
    if (!res.exact) {
      r.fail(where + ": solver did not finish");
      continue;
    }
    if (res.chi != want) r.fail(where + ": chi=" + std::to_string(res.chi));
    if (!proper(g.graph(), res.witness.colors, res.chi)) r.fail(where + ": witness not proper");
    // Injection lower bound: chi - 1 colours give 2^(chi-1) < n colour sets.
    if (res.chi >= 1 && (1u << (res.chi - 1)) >= n) r.fail(where + ": chi-1 colours would not force a collision");
    unsigned t = 0;
    const auto upper = oracle::binary_set_coloring(n, t);
    if (t != std::max(1u, want) || !proper(g.graph(), upper, t)) r.fail(where + ": binary-set colouring check failed");
    if (n == 16) {
      info << "n=16 in " << secs << " s";
      if (secs >= kLimitChromaticN16Seconds) r.fail("n=16 took " + std::to_string(secs) + " s");
    }
    g_solver_colourings.push_back(res.witness);
    g_solver_n.push_back(n);
  }
  r.info = info.str();
}

void c8_certificates(Result& r) {
  if (g_solver_colourings.empty()) r.fail("no solver colourings (criterion 7 did not run)");
  for (std::size_t i = 0; i < g_solver_colourings.size(); ++i) {
    const unsigned n = g_solver_n[i];
    const auto g = build(n, "132");
    const auto& c = g_solver_colourings[i];
    if (!sg::injection_certificate(g, c).injective) r.fail("n=" + std::to_string(n) + ": f not injective");
    if (sg::partition_tree(g, c).repeated_branch_color()) r.fail("n=" + std::to_string(n) + ": repeated colour on a branch");
  }
  // Infeasibility for every t with 2^t < n. G(m,132) is induced in G(n,132)
  // for m <= n, so the smallest m = 2^t + 1 settles all larger n; n <= 10 is
  // also checked directly.
  for (std::uint32_t t = 1; (1u << t) < 16; ++t) {
    const unsigned m = (1u << t) + 1;
    if (sg::t_colorable(build(m, "132").graph(), t, 600.0, nullptr) != sg::Colorability::kNotColorable) {
      r.fail("t=" + std::to_string(t) + " not refuted on G(" + std::to_string(m) + ",132)");
    }
  }
  for (unsigned n = 3; n <= 10; ++n) {
    for (std::uint32_t t = 1; (1u << t) < n; ++t) {
      if (sg::t_colorable(build(n, "132").graph(), t, 600.0, nullptr) != sg::Colorability::kNotColorable) {
        r.fail("t=" + std::to_string(t) + " not refuted on G(" + std::to_string(n) + ",132)");
      }
    }
  }
}

void c9_aut_consistency(Result& r) {
  std::size_t cases = 0;
  for (const std::string type : {"132", "1122", "11322"}) {
    for (unsigned n = oracle::width_of(type); n <= 7; ++n) {
      const auto g = build(n, type);
      const auto a = sg::aut_order_via_classes(g.graph()).order;
      const auto b = sg::brute_aut_order(g.graph());
      ++cases;
      if (a != b) r.fail(type + " n=" + std::to_string(n) + ": " + a.str() + " vs " + b.str());
    }
  }
  r.info = std::to_string(cases) + " graphs";
}

void c10_aut_formula(Result& r) {
  const auto t0 = Clock::now();
  for (unsigned n : {5u, 6u, 7u, 8u, 9u, 10u}) {
    const auto c = sg::compare_aut(n, TypePattern::parse("11322"));
    const std::string where = "n=" + std::to_string(n);
    if (c.verdict != sg::Verdict::kMatch) r.fail(where + ": " + std::string(sg::verdict_name(c.verdict)) + " " + c.note);
    if (!c.predicted || c.predicted->order != c.computed.order) r.fail(where + ": big-integer orders differ");
    if (c.predicted && c.predicted->z2_multiplicity != (n == 7 ? 2u : 1u)) r.fail(where + ": wrong variant");
  }
  const double secs = since(t0);
  if (secs >= kLimitAutFormulaSeconds) r.fail("took " + std::to_string(secs) + " s");

  // Report mode; the computed order is authoritative and a mismatch is a
  // finding, not a failure of this criterion.
  auto info = [](unsigned n, const char* type) {
    const auto c = sg::compare_aut(n, TypePattern::parse(type));
    std::printf("INFO criterion 10 report: G(%u,%s) verdict=%s quotient_aut=%s%s%s\n", n, type,
                std::string(sg::verdict_name(c.verdict)).c_str(), c.computed.quotient_aut_order.str().c_str(),
                c.note.empty() ? "" : " note: ", c.note.c_str());
  };
  info(12, "1113222");
  info(16, "111132222");
  info(17, "111132222");
}

void c11_trivial(Result& r) {
  for (unsigned n = 1; n <= 8; ++n) {
    const auto k = build(n, "12");
    if (k.graph().num_edges() != sg::binom(n, 2)) r.fail("G(" + std::to_string(n) + ",12) not complete");
    const auto e1 = build(n, "3");
    if (e1.num_vertices() != n || e1.graph().num_edges() != 0) r.fail("G(" + std::to_string(n) + ",3) wrong");
    if (n >= 2) {
      const auto e2 = build(n, "33");
      if (e2.num_vertices() != sg::binom(n, 2) || e2.graph().num_edges() != 0) r.fail("G(" + std::to_string(n) + ",33) wrong");
    }
  }
}

}  // namespace

int main() {
  report(1, "type oracle examples", c1_type_oracle);
  report(2, "degree closed form vs enumeration", c2_degree);
  report(3, "isolated-point counts", c3_isolated);
  report(4, "complete bipartite form of common neighbourhoods", c4_bipartite);
  report(5, "symbolic census over w+k and infer_k", c5_census);
  report(6, "reconstruction round trip", c6_reconstruct);
  report(7, "chromatic number of G(n,132)", c7_chromatic);
  report(8, "injection and partition-tree certificates", c8_certificates);
  report(9, "automorphism order: classes vs backtracking", c9_aut_consistency);
  report(10, "automorphism closed form for 11322", c10_aut_formula);
  report(11, "trivial families", c11_trivial);
  std::printf("%s: %d of 11 criteria failed\n", g_failures ? "FAIL" : "PASS", g_failures);
  return g_failures ? 1 : 0;
}
