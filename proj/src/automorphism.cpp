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

#include "shiftgraph/automorphism.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "shiftgraph/error.hpp"

namespace shiftgraph {

BigInt factorial(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

void GroupDescriptor::add_sym(std::uint64_t degree, std::uint64_t multiplicity) {
  if (degree == 0 || multiplicity == 0) return;  // trivial; S1 is kept as the formulas list it
  sym_factors.push_back({degree, multiplicity});
  order *= boost::multiprecision::pow(factorial(degree), static_cast<unsigned>(multiplicity));
}

void GroupDescriptor::add_z2(std::uint64_t count) {
  z2_multiplicity += count;
  for (std::uint64_t i = 0; i < count; ++i) order *= 2;
}

std::string GroupDescriptor::to_string() const {
  std::vector<std::string> parts;
  for (std::uint64_t i = 0; i < z2_multiplicity; ++i) parts.emplace_back("Z2");
  for (const auto& f : sym_factors) {
    if (f.multiplicity == 0) continue;
    const std::string s = "S" + std::to_string(f.degree);
    parts.push_back(f.multiplicity == 1 ? s : "(" + s + ")^" + std::to_string(f.multiplicity));
  }
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

// ---------------------------------------------------------------------------
// Individualisation-refinement on a coloured graph

namespace {

using Colours = std::vector<std::uint32_t>;

// One round of colour refinement applied to both colourings with a shared
// naming of signatures. False when the two sides stop looking alike.
bool refine_pair(const Graph& g, Colours& left, Colours& right) {
  const std::size_t nv = g.num_vertices();
  for (;;) {
    auto signatures = [&](const Colours& c) {
      std::vector<std::vector<std::uint32_t>> sig(nv);
      for (std::size_t v = 0; v < nv; ++v) {
        auto& s = sig[v];
        s.reserve(g.degree(static_cast<VertexId>(v)) + 1);
        for (VertexId u : g.neighbors(static_cast<VertexId>(v))) s.push_back(c[u]);
        std::sort(s.begin(), s.end());
        s.insert(s.begin(), c[v]);
      }
      return sig;
    };
    auto sl = signatures(left);
    auto sr = signatures(right);
    auto sorted_l = sl;
    auto sorted_r = sr;
    std::sort(sorted_l.begin(), sorted_l.end());
    std::sort(sorted_r.begin(), sorted_r.end());
    if (sorted_l != sorted_r) return false;
    sorted_l.erase(std::unique(sorted_l.begin(), sorted_l.end()), sorted_l.end());
    std::size_t before = 0;
    {
      Colours tmp = left;
      std::sort(tmp.begin(), tmp.end());
      before = static_cast<std::size_t>(std::unique(tmp.begin(), tmp.end()) - tmp.begin());
    }
    auto rename = [&](const std::vector<std::vector<std::uint32_t>>& sig, Colours& c) {
      for (std::size_t v = 0; v < nv; ++v) {
        c[v] = static_cast<std::uint32_t>(std::lower_bound(sorted_l.begin(), sorted_l.end(), sig[v]) - sorted_l.begin());
      }
    };
    rename(sl, left);
    rename(sr, right);
    if (sorted_l.size() == before) return true;
  }
}

// Smallest colour with more than one vertex, or nullopt when discrete.
std::optional<std::uint32_t> first_split_cell(const Colours& c) {
  std::map<std::uint32_t, std::size_t> sizes;
  for (auto x : c) ++sizes[x];
  for (const auto& [col, size] : sizes) {
    if (size > 1) return col;
  }
  return std::nullopt;
}

Colours individualise(Colours c, VertexId v) {
  c[v] = static_cast<std::uint32_t>(c.size());
  return c;
}

bool is_automorphism(const Graph& g, const std::vector<VertexId>& map) {
  for (const auto& [u, v] : g.edges()) {
    if (!g.adjacent(map[u], map[v])) return false;
  }
  return true;
}

// Is there an automorphism carrying colouring `left` onto `right`?
bool exists_iso(const Graph& g, Colours left, Colours right) {
  if (!refine_pair(g, left, right)) return false;
  const auto cell = first_split_cell(left);
  const std::size_t nv = g.num_vertices();
  if (!cell) {
    std::vector<VertexId> by_colour(nv);
    for (std::size_t v = 0; v < nv; ++v) by_colour[right[v]] = static_cast<VertexId>(v);
    std::vector<VertexId> map(nv);
    for (std::size_t v = 0; v < nv; ++v) map[v] = by_colour[left[v]];
    return is_automorphism(g, map);
  }
  VertexId x = 0;
  while (left[x] != *cell) ++x;
  for (std::size_t y = 0; y < nv; ++y) {
    if (right[y] != *cell) continue;
    if (exists_iso(g, individualise(left, x), individualise(right, static_cast<VertexId>(y)))) return true;
  }
  return false;
}

BigInt count_automorphisms(const Graph& g, Colours colours) {
  Colours copy = colours;
  refine_pair(g, colours, copy);
  const auto cell = first_split_cell(colours);
  if (!cell) return 1;
  const std::size_t nv = g.num_vertices();
  VertexId v = 0;
  while (colours[v] != *cell) ++v;
  std::uint64_t orbit = 1;
  const Colours fixed_v = individualise(colours, v);
  for (std::size_t w = v + 1; w < nv; ++w) {
    if (colours[w] != *cell) continue;
    if (exists_iso(g, fixed_v, individualise(colours, static_cast<VertexId>(w)))) ++orbit;
  }
  return orbit * count_automorphisms(g, fixed_v);
}

}  // namespace

BigInt coloured_aut_order(const Graph& g, const std::vector<std::uint64_t>& colours) {
  if (colours.size() != g.num_vertices()) fail(ErrorCode::kInvalidArgument, "aut: colour vector size mismatch");
  std::vector<std::uint64_t> distinct = colours;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Colours c(colours.size());
  for (std::size_t v = 0; v < colours.size(); ++v) {
    c[v] = static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), colours[v]) - distinct.begin());
  }
  return count_automorphisms(g, std::move(c));
}

AutByClasses aut_order_via_classes(const Graph& g, const AutOptions& options) {
  const auto partition = equivalence_classes(g);
  if (partition.classes.size() > options.max_quotient_nodes) {
    fail(ErrorCode::kBudgetExceeded, "aut: quotient has " + std::to_string(partition.classes.size()) + " nodes");
  }
  const auto q = quotient(g, partition);
  AutByClasses out;
  std::map<std::uint64_t, std::uint64_t> by_size;
  for (auto s : q.sizes) {
    if (s > 1) ++by_size[s];
  }
  for (const auto& [size, mult] : by_size) out.class_part.add_sym(size, mult);
  out.quotient_aut_order = coloured_aut_order(q.graph, q.sizes);
  out.quotient_nodes = q.graph.num_vertices();
  out.order = out.class_part.order * out.quotient_aut_order;
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracle

namespace {

class ExtensionSearch {
 public:
  explicit ExtensionSearch(const Graph& g) : g_(g), nv_(g.num_vertices()) {
    for (std::size_t v = 0; v < nv_; ++v) rows_.push_back(g.neighbor_set(static_cast<VertexId>(v)));
  }

  // Is there an automorphism extending the forced pairs?
  bool extends(const std::vector<std::pair<VertexId, VertexId>>& forced) {
    std::vector<DynBitset> domain(nv_, DynBitset(nv_));
    for (std::size_t u = 0; u < nv_; ++u) {
      for (std::size_t y = 0; y < nv_; ++y) {
        if (g_.degree(static_cast<VertexId>(u)) == g_.degree(static_cast<VertexId>(y))) domain[u].set(y);
      }
    }
    std::vector<bool> mapped(nv_, false);
    std::vector<VertexId> image(nv_, 0);
    for (const auto& [x, y] : forced) {
      if (mapped[x] || !domain[x].test(y)) return false;
      if (!assign(domain, mapped, image, x, y)) return false;
    }
    return search(domain, mapped, image);
  }

 private:
  bool assign(std::vector<DynBitset>& domain, std::vector<bool>& mapped, std::vector<VertexId>& image,
              VertexId x, VertexId y) {
    mapped[x] = true;
    image[x] = y;
    for (std::size_t u = 0; u < nv_; ++u) {
      if (mapped[u]) continue;
      if (rows_[x].test(u)) domain[u] &= rows_[y]; else domain[u].subtract(rows_[y]);
      domain[u].reset(y);
      if (domain[u].none()) return false;
    }
    return true;
  }

  bool search(const std::vector<DynBitset>& domain, const std::vector<bool>& mapped,
              const std::vector<VertexId>& image) {
    std::size_t best = nv_, best_size = 0;
    for (std::size_t u = 0; u < nv_; ++u) {
      if (mapped[u]) continue;
      const std::size_t s = domain[u].count();
      if (best == nv_ || s < best_size) { best = u; best_size = s; }
    }
    if (best == nv_) return true;
    const DynBitset& options = domain[best];
    for (std::size_t y = options.first(); y < nv_; y = options.next(y + 1)) {
      auto d = domain;
      auto m = mapped;
      auto im = image;
      if (assign(d, m, im, static_cast<VertexId>(best), static_cast<VertexId>(y)) && search(d, m, im)) return true;
    }
    return false;
  }

  const Graph& g_;
  std::size_t nv_;
  std::vector<DynBitset> rows_;
};

}  // namespace

BigInt brute_aut_order(const Graph& g, const AutOptions& options) {
  const std::size_t nv = g.num_vertices();
  if (nv > options.brute_vertex_cap) {
    fail(ErrorCode::kBudgetExceeded, "brute_aut_order: " + std::to_string(nv) + " vertices exceed the oracle cap");
  }
  ExtensionSearch search(g);
  BigInt order = 1;
  std::vector<std::pair<VertexId, VertexId>> fixed;
  for (std::size_t v = 0; v < nv; ++v) {
    std::uint64_t orbit = 0;
    for (std::size_t w = 0; w < nv; ++w) {
      auto forced = fixed;
      forced.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(w));
      if (search.extends(forced)) ++orbit;
    }
    order *= orbit;
    fixed.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(v));
  }
  return order;
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

std::uint64_t choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r.convert_to<std::uint64_t>();
}

GroupDescriptor thm_11322(std::int64_t n) {
  GroupDescriptor g;
  g.add_z2(n == 7 ? 2 : 1);
  g.add_sym(static_cast<std::uint64_t>(4 * (n - 3)));
  for (std::int64_t j = 1; j <= n - 5; ++j) g.add_sym(static_cast<std::uint64_t>(2 * j + 1), 2);
  for (std::int64_t j = 1; j <= n - 6; ++j) g.add_sym(static_cast<std::uint64_t>(n - 5 - j), static_cast<std::uint64_t>(j));
  return g;
}

GroupDescriptor thm_1113222(std::int64_t n) {
  GroupDescriptor g;
  g.add_z2();
  g.add_sym(choose(n - 2, 2) + 2 * choose(n - 3, 2) + 3 * choose(n - 4, 2) + 2 * choose(n - 5, 2) + choose(n - 6, 2));
  for (std::int64_t j = 4; j <= n - 4; ++j) {
    g.add_sym(choose(n - j - 1, 2) + choose(n - j - 2, 2) + choose(n - j - 3, 2), 2);
  }
  for (std::int64_t j = 1; j <= n - 8; ++j) g.add_sym(choose(n - 7 - j, 3), static_cast<std::uint64_t>(j));
  return g;
}

GroupDescriptor thm_sigma_a1(std::int64_t n, std::int64_t a) {
  GroupDescriptor g;
  g.add_z2();
  std::uint64_t first = static_cast<std::uint64_t>(a) * choose(n - a - 1, a - 1);
  for (std::int64_t k = 1; k <= a - 1; ++k) {
    first += static_cast<std::uint64_t>(k) * (choose(n - k - 1, a - 1) + choose(n - 2 * a + k - 1, a - 1));
  }
  g.add_sym(first);
  for (std::int64_t j = a + 1; j <= n - a - 1; ++j) {
    std::uint64_t s = 0;
    for (std::int64_t k = 0; k <= a - 1; ++k) s += choose(n - j - k - 1, a - 1);
    g.add_sym(s, 2);
  }
  for (std::int64_t j = 1; j <= n - 2 * (a + 1); ++j) g.add_sym(choose(n - 2 * a - j - 1, 3), static_cast<std::uint64_t>(j));
  return g;
}

struct Formula {
  GroupDescriptor group;
  std::string name;
};

Formula predict(std::uint32_t n_in, const TypePattern& type, const PredictionOptions& options) {
  const auto ab = as_sigma(type);
  const auto n = static_cast<std::int64_t>(n_in);
  if (!ab || ab->a == 0 || ab->b == 0) fail(ErrorCode::kUnsupported, "predicted_order: no formula for type " + type.render());
  const auto a = static_cast<std::int64_t>(ab->a);
  const auto b = static_cast<std::int64_t>(ab->b);
  auto out_of_range = [&](const std::string& what) {
    fail(ErrorCode::kOutOfStatedRange, "predicted_order: " + what + " not stated for n = " + std::to_string(n));
  };
  if (a == 1) {
    if (n < b + 2) out_of_range("order-two group");
    GroupDescriptor g;
    g.add_z2();
    return {g, "sigma(1,b): order two"};
  }
  if (a == 2 && b == 1) {
    if (n < 5) out_of_range("11322 product");
    return {thm_11322(n), n == 7 ? "11322 product, n = 7 variant" : "11322 product"};
  }
  if (a == 3 && b == 1 && n >= 12) return {thm_1113222(n), "1113222 product"};
  if (a >= 3 && b == 1) {
    const std::int64_t min_n = options.sigma_a1_min_n ? options.sigma_a1_min_n : 3 * a + 4;
    if (n < min_n) out_of_range("sigma(a,1) product");
    return {thm_sigma_a1(n, a), "sigma(a,1) product"};
  }
  fail(ErrorCode::kUnsupported, "predicted_order: no formula for type " + type.render());
}

}  // namespace

GroupDescriptor predicted_order(std::uint32_t n, const TypePattern& type, const PredictionOptions& options) {
  return predict(n, type, options).group;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kMatch: return "MATCH";
    case Verdict::kDiscrepancy: return "DISCREPANCY";
    case Verdict::kNoFormula: return "NO_FORMULA";
  }
  return "NO_FORMULA";
}

AutComparison compare_aut(std::uint32_t n, const TypePattern& type, const AutOptions& options,
                          const PredictionOptions& prediction) {
  AutComparison cmp;
  cmp.n = n;
  cmp.type = type;
  const ShiftGraph sg = ShiftGraph::build(n, type);
  cmp.computed = aut_order_via_classes(sg.graph(), options);
  if (sg.num_vertices() <= options.brute_vertex_cap) cmp.brute = brute_aut_order(sg.graph(), options);
  try {
    Formula f = predict(n, type, prediction);
    cmp.predicted = std::move(f.group);
    cmp.formula = std::move(f.name);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kUnsupported && e.code() != ErrorCode::kOutOfStatedRange) throw;
    cmp.note = e.what();
    cmp.verdict = Verdict::kNoFormula;
  }
  if (cmp.brute && *cmp.brute != cmp.computed.order) {
    cmp.verdict = Verdict::kDiscrepancy;
    cmp.note = "class-based order disagrees with the backtracking oracle";
    return cmp;
  }
  if (cmp.predicted) {
    if (cmp.predicted->order == cmp.computed.order) {
      cmp.verdict = Verdict::kMatch;
    } else {
      cmp.verdict = Verdict::kDiscrepancy;
      cmp.note = "closed form differs from the computed order";
    }
  }
  return cmp;
}

}  // namespace shiftgraph
