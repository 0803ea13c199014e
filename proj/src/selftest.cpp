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

#include "shiftgraph/selftest.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "shiftgraph/automorphism.hpp"
#include "shiftgraph/coloring.hpp"
#include "shiftgraph/combinatorics.hpp"
#include "shiftgraph/error.hpp"
#include "shiftgraph/graph.hpp"
#include "shiftgraph/random.hpp"
#include "shiftgraph/reconstruct.hpp"
#include "shiftgraph/structure.hpp"

namespace shiftgraph {

bool SelftestReport::passed() const {
  for (const auto& s : suites) {
    if (!s.passed) return false;
  }
  return true;
}

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.failure = what;
    }
  }

  SuiteResult& result() { return result_; }

 private:
  SuiteResult result_;
};

using Body = std::function<void(Suite&)>;

SuiteResult run_suite(const std::string& name, const Body& body) {
  Suite s(name);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(s);
  } catch (const std::exception& e) {
    s.check(false, std::string("exception: ") + e.what());
  }
  s.result().seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return s.result();
}

std::string tag(const char* type, std::uint32_t n) {
  return std::string(type) + " n=" + std::to_string(n);
}

Graph flip_one_adjacency(const Graph& g) {
  auto edges = g.edges();
  if (!edges.empty()) {
    edges.erase(edges.begin());
  } else if (g.num_vertices() >= 2) {
    edges.emplace_back(0, 1);
  }
  return Graph::from_edges(g.num_vertices(), edges);
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& options) {
  const bool quick = options.quick;
  SelftestReport report;

  report.suites.push_back(run_suite("types", [](Suite& s) {
    s.check(type_of_pair(std::vector<int>{1, 5, 6}, std::vector<int>{3, 5, 8}).render() == "12312", "example 12312");
    s.check(type_of_pair(std::vector<int>{1, 3, 5}, std::vector<int>{2, 4, 6}).render() == "121212", "example 121212");
    const auto g = ShiftGraph::build(5, TypePattern::parse("1221"));
    s.check(g.graph().adjacent(g.id_of(std::vector<Element>{1, 4}), g.id_of(std::vector<Element>{2, 3})), "1221 edge");
    s.check(!g.graph().adjacent(g.id_of(std::vector<Element>{1, 3}), g.id_of(std::vector<Element>{2, 4})), "1221 non-edge");
  }));

  report.suites.push_back(run_suite("degree", [quick](Suite& s) {
    const std::uint32_t max_n = quick ? 7 : 10;
    for (std::size_t a = 1; a <= 3; ++a) {
      for (std::size_t b = 0; b <= 2; ++b) {
        for (std::uint32_t n = static_cast<std::uint32_t>(a + b); n <= max_n; ++n) {
          const auto g = ShiftGraph::build(n, sigma(a, b));
          for (VertexId v = 0; v < g.num_vertices(); ++v) {
            std::vector<Ordinal> ov;
            for (Element e : g.vertex(v)) ov.push_back(Ordinal::finite(e));
            const Count d = degree_closed_form(Ordinal::finite(n), a, b, ov);
            s.check(d == Count::finite(g.graph().degree(v)), tag(sigma(a, b).render().c_str(), n) + " " + g.label(v));
          }
        }
      }
    }
  }));

  report.suites.push_back(run_suite("isolated", [quick](Suite& s) {
    const std::uint32_t max_n = quick ? 9 : 12;
    for (std::uint32_t n = 2; n <= max_n; ++n) {
      s.check(isolated_vertices(ShiftGraph::build(n, sigma(1, 1)).graph()).size() == 1, tag("132", n));
    }
    for (std::uint32_t n = 5; n <= max_n; ++n) {
      s.check(isolated_vertices(ShiftGraph::build(n, sigma(2, 1)).graph()).size() == 4 * (n - 3), tag("11322", n));
    }
  }));

  report.suites.push_back(run_suite("bipartite_form", [quick](Suite& s) {
    for (std::uint32_t n = 2; n <= (quick ? 7u : 9u); ++n) {
      s.check(check_bipartite_form(ShiftGraph::build(n, sigma(1, 1))).violations.empty(), tag("132", n));
    }
  }));

  report.suites.push_back(run_suite("census", [](Suite& s) {
    for (std::uint64_t k = 0; k <= 6; ++k) {
      const auto alpha = Ordinal::omega() + k;
      const auto c = finite_degree_census(alpha, 1, 1, CensusScope::kVertices);
      for (std::uint64_t j = 0; j < k + 3; ++j) {
        const std::uint64_t expect = j + 1 < k ? j + 1 : k;
        s.check(c.at(j) == Count::finite(expect), "w+" + std::to_string(k) + " degree " + std::to_string(j));
      }
      s.check(infer_k(c) == k, "infer_k w+" + std::to_string(k));
    }
  }));

  report.suites.push_back(run_suite("reconstruction", [&options, quick](Suite& s) {
    const std::uint32_t max_n = quick ? 7 : 9;
    const int shuffles = quick ? 3 : 10;
    for (const char* t : {"132", "1332", "11322"}) {
      const auto type = TypePattern::parse(t);
      for (std::uint32_t n = 5; n <= max_n; ++n) {
        const auto sg = ShiftGraph::build(n, type);
        for (int seed = 0; seed < shuffles; ++seed) {
          Graph g = sg.graph().relabeled(seeded_permutation(sg.num_vertices(), static_cast<std::uint64_t>(seed)));
          if (options.corrupt_adjacency) g = flip_one_adjacency(g);
          const std::string where = tag(t, n) + " seed=" + std::to_string(seed);
          try {
            const auto r = reconstruct(g, type);
            s.check(r.n == n && !r.labelings.empty(), where);
            for (const auto& lab : r.labelings) s.check(validate_labeling(g, sg, lab), where + " validation");
            if (type == sigma(1, 1)) s.check(r.labelings.size() == 2, where + " two labelings");
          } catch (const Error& e) {
            s.check(false, where + ": " + e.what());
          }
        }
      }
    }
  }));

  report.suites.push_back(run_suite("chromatic", [quick](Suite& s) {
    const std::uint32_t max_n = quick ? 10 : 13;
    for (std::uint32_t n = 2; n <= max_n; ++n) {
      const auto sg = ShiftGraph::build(n, sigma(1, 1));
      const auto r = exact_chromatic(sg);
      std::uint32_t expect = 0;
      while ((std::uint64_t{1} << expect) < n) ++expect;
      s.check(r.exact && r.chi == expect, tag("132", n) + " chi");
      s.check(is_proper(sg.graph(), r.witness), tag("132", n) + " proper");
      s.check(injection_certificate(sg, r.witness).injective, tag("132", n) + " injective");
      s.check(!partition_tree(sg, r.witness).repeated_branch_color(), tag("132", n) + " tree");
    }
  }));

  report.suites.push_back(run_suite("automorphism", [quick](Suite& s) {
    const std::uint32_t max_n = quick ? 6 : 7;
    for (const char* t : {"132", "1122", "11322"}) {
      const auto type = TypePattern::parse(t);
      for (std::uint32_t n = static_cast<std::uint32_t>(type.width()); n <= max_n; ++n) {
        const auto g = ShiftGraph::build(n, type);
        s.check(aut_order_via_classes(g.graph()).order == brute_aut_order(g.graph()), tag(t, n));
      }
    }
    for (std::uint32_t n : {5u, 6u, 7u, 8u}) {
      s.check(compare_aut(n, sigma(2, 1)).verdict == Verdict::kMatch, tag("11322", n) + " formula");
    }
  }));

  report.suites.push_back(run_suite("trivial_families", [](Suite& s) {
    for (std::uint32_t n = 1; n <= 8; ++n) {
      const auto k = ShiftGraph::build(n, TypePattern::parse("12"));
      s.check(k.graph().num_edges() == binom(n, 2), tag("12", n));
      const auto e1 = ShiftGraph::build(n, TypePattern::parse("3"));
      s.check(e1.num_vertices() == n && e1.graph().num_edges() == 0, tag("3", n));
      if (n >= 2) {
        const auto e2 = ShiftGraph::build(n, TypePattern::parse("33"));
        s.check(e2.num_vertices() == binom(n, 2) && e2.graph().num_edges() == 0, tag("33", n));
      }
    }
  }));

  return report;
}

}  // namespace shiftgraph
