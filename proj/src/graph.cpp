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

#include "shiftgraph/graph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "shiftgraph/combinatorics.hpp"
#include "shiftgraph/error.hpp"

namespace shiftgraph {

// ---------------------------------------------------------------------------
// Graph

Graph Graph::from_edges(std::size_t num_vertices, std::span<const Edge> edges,
                        std::size_t dense_cap) {
  if (num_vertices > std::numeric_limits<VertexId>::max()) {
    fail(ErrorCode::kBudgetExceeded, "graph: too many vertices");
  }
  std::vector<std::vector<VertexId>> adj(num_vertices);
  for (const auto& [u, v] : edges) {
    if (u >= num_vertices || v >= num_vertices) {
      fail(ErrorCode::kInvalidArgument, "graph: edge endpoint out of range");
    }
    if (u == v) fail(ErrorCode::kInvalidArgument, "graph: self-loop");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return from_adjacency(std::move(adj), dense_cap);
}

Graph Graph::from_adjacency(std::vector<std::vector<VertexId>> adjacency,
                            std::size_t dense_cap) {
  Graph g;
  const std::size_t nv = adjacency.size();
  g.offsets_.assign(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    auto& row = adjacency[v];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    for (VertexId u : row) {
      if (u >= nv) fail(ErrorCode::kInvalidArgument, "graph: neighbor out of range");
      if (u == v) fail(ErrorCode::kInvalidArgument, "graph: self-loop");
    }
    g.offsets_[v + 1] = g.offsets_[v] + row.size();
  }
  g.neighbors_.reserve(g.offsets_[nv]);
  for (auto& row : adjacency) {
    g.neighbors_.insert(g.neighbors_.end(), row.begin(), row.end());
    std::vector<VertexId>().swap(row);
  }
  for (std::size_t v = 0; v < nv; ++v) {
    for (VertexId u : g.neighbors(static_cast<VertexId>(v))) {
      auto back = g.neighbors(u);
      if (!std::binary_search(back.begin(), back.end(), static_cast<VertexId>(v))) {
        fail(ErrorCode::kInvalidArgument, "graph: adjacency is not symmetric");
      }
    }
  }
  g.build_dense(dense_cap);
  return g;
}

void Graph::build_dense(std::size_t dense_cap) {
  rows_.clear();
  const std::size_t nv = num_vertices();
  if (nv == 0 || nv > dense_cap) return;
  rows_.assign(nv, DynBitset(nv));
  for (std::size_t v = 0; v < nv; ++v) {
    for (VertexId u : neighbors(static_cast<VertexId>(v))) rows_[v].set(u);
  }
}

bool Graph::adjacent(VertexId u, VertexId v) const noexcept {
  if (!rows_.empty()) return rows_[u].test(v);
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

DynBitset Graph::neighbor_set(VertexId v) const {
  if (!rows_.empty()) return rows_[v];
  DynBitset s(num_vertices());
  for (VertexId u : neighbors(v)) s.set(u);
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (std::size_t v = 0; v < num_vertices(); ++v) {
    for (VertexId u : neighbors(static_cast<VertexId>(v))) {
      if (v < u) out.emplace_back(static_cast<VertexId>(v), u);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const VertexId> keep) const {
  constexpr VertexId kAbsent = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> index(num_vertices(), kAbsent);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= num_vertices()) fail(ErrorCode::kInvalidArgument, "induced: vertex out of range");
    if (index[keep[i]] != kAbsent) fail(ErrorCode::kInvalidArgument, "induced: repeated vertex");
    index[keep[i]] = static_cast<VertexId>(i);
  }
  std::vector<std::vector<VertexId>> adj(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (VertexId u : neighbors(keep[i])) {
      if (index[u] != kAbsent) adj[i].push_back(index[u]);
    }
  }
  return from_adjacency(std::move(adj), has_dense_rows() ? num_vertices() : kDefaultDenseCap);
}

Graph Graph::relabeled(std::span<const VertexId> perm) const {
  const std::size_t nv = num_vertices();
  if (perm.size() != nv) fail(ErrorCode::kInvalidArgument, "relabeled: permutation size mismatch");
  std::vector<bool> seen(nv, false);
  for (VertexId p : perm) {
    if (p >= nv || seen[p]) fail(ErrorCode::kInvalidArgument, "relabeled: not a permutation");
    seen[p] = true;
  }
  std::vector<std::vector<VertexId>> adj(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    for (VertexId u : neighbors(static_cast<VertexId>(v))) adj[perm[v]].push_back(perm[u]);
  }
  return from_adjacency(std::move(adj), has_dense_rows() ? nv : kDefaultDenseCap);
}

// ---------------------------------------------------------------------------
// Neighbor enumeration for a fixed type

namespace {

// For each mark of the type, the gap it falls in: gap g lies between the
// (g-1)-th and g-th element of x (0-based), gap 0 below x[0], gap k above
// x[k-1].
struct TypeLayout {
  std::vector<Mark> marks;
  std::vector<std::size_t> gap_of_two;   // for each 2 in word order
  std::vector<std::size_t> twos_in_gap;  // size k+1
  std::size_t width = 0;
};

TypeLayout layout_of(const TypePattern& type) {
  TypeLayout t;
  t.marks = type.marks();
  t.width = type.width();
  t.twos_in_gap.assign(t.width + 1, 0);
  std::size_t xs = 0;
  for (Mark m : t.marks) {
    if (m == Mark::kTwo) {
      t.gap_of_two.push_back(xs);
      ++t.twos_in_gap[xs];
    } else {
      ++xs;
    }
  }
  return t;
}

// Exclusive bounds of gap g inside [n].
inline std::int64_t gap_lo(std::span<const Element> x, std::size_t g) {
  return g == 0 ? -1 : static_cast<std::int64_t>(x[g - 1]);
}
inline std::int64_t gap_hi(std::span<const Element> x, std::size_t g, std::uint32_t n) {
  return g == x.size() ? static_cast<std::int64_t>(n) : static_cast<std::int64_t>(x[g]);
}

std::uint64_t count_neighbors(const TypeLayout& t, std::span<const Element> x, std::uint32_t n) {
  std::uint64_t total = 1;
  for (std::size_t g = 0; g <= t.width; ++g) {
    if (t.twos_in_gap[g] == 0) continue;
    const std::int64_t room = gap_hi(x, g, n) - gap_lo(x, g) - 1;
    if (room < static_cast<std::int64_t>(t.twos_in_gap[g])) return 0;
    const std::uint64_t c = binom_saturating(static_cast<std::uint64_t>(room), t.twos_in_gap[g]);
    if (c != 0 && total > std::numeric_limits<std::uint64_t>::max() / c) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= c;
  }
  return total;
}

// Calls emit(y) for every y with type_of_pair(x, y) == type; y is sorted.
template <typename Emit>
void for_each_typed_neighbor(const TypeLayout& t, std::span<const Element> x, std::uint32_t n,
                             Emit&& emit) {
  const std::size_t twos = t.gap_of_two.size();
  std::vector<Element> chosen(twos);
  std::vector<Element> y(t.width);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == twos) {
      std::size_t xi = 0, ti = 0, yi = 0;
      for (Mark m : t.marks) {
        if (m == Mark::kOne) {
          ++xi;
        } else if (m == Mark::kThree) {
          y[yi++] = x[xi++];
        } else {
          y[yi++] = chosen[ti++];
        }
      }
      emit(std::span<const Element>(y));
      return;
    }
    const std::size_t g = t.gap_of_two[i];
    std::int64_t lo = gap_lo(x, g);
    if (i > 0 && t.gap_of_two[i - 1] == g) lo = chosen[i - 1];
    const std::int64_t hi = gap_hi(x, g, n);
    std::size_t remaining_in_gap = 0;
    for (std::size_t j = i + 1; j < twos && t.gap_of_two[j] == g; ++j) ++remaining_in_gap;
    for (std::int64_t val = lo + 1; val + static_cast<std::int64_t>(remaining_in_gap) < hi; ++val) {
      chosen[i] = static_cast<Element>(val);
      rec(i + 1);
    }
  };
  rec(0);
}

bool all_threes(const TypePattern& type) {
  return std::all_of(type.marks().begin(), type.marks().end(),
                     [](Mark m) { return m == Mark::kThree; });
}

}  // namespace

std::uint64_t count_typed_neighbors(std::span<const Element> x, std::uint32_t n,
                                    const TypePattern& type) {
  (void)rank(x, n);
  if (x.size() != type.width()) fail(ErrorCode::kWidthMismatch, "vertex width differs from type width");
  return count_neighbors(layout_of(type), x, n);
}

// ---------------------------------------------------------------------------
// ShiftGraph

std::uint64_t rank(std::span<const Element> vertex, std::uint32_t n) {
  for (Element e : vertex) {
    if (e >= n) fail(ErrorCode::kOutOfRange, "rank: element outside [n]");
  }
  return colex_rank(vertex);
}

std::vector<Element> unrank(std::uint64_t index, std::uint32_t n, std::uint32_t k) {
  return colex_unrank(index, n, k);
}

ShiftGraph ShiftGraph::build(std::uint32_t n, const TypePattern& type, const BuildOptions& options) {
  const std::size_t k = type.width();
  if (k > n) fail(ErrorCode::kWidthTooLarge, "build: type width exceeds ground size");
  const std::uint64_t nv = binom_saturating(n, k);
  if (nv > options.max_vertices || nv > std::numeric_limits<VertexId>::max()) {
    fail(ErrorCode::kBudgetExceeded, "build: vertex count " + std::to_string(nv) +
                                         " exceeds budget " + std::to_string(options.max_vertices));
  }
  ShiftGraph sg(n, type);
  sg.elements_.resize(nv * k);
  if (nv > 0) {
    std::vector<Element> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = static_cast<Element>(i);
    for (std::uint64_t id = 0; id < nv; ++id) {
      std::copy(cur.begin(), cur.end(), sg.elements_.begin() + static_cast<std::ptrdiff_t>(id * k));
      colex_next(cur, n);
    }
  }

  const TypeLayout layout = layout_of(type);
  const bool loopy = all_threes(type);
  if (!loopy) {
    std::uint64_t arcs = 0;
    for (std::uint64_t id = 0; id < nv; ++id) {
      const std::uint64_t c = count_neighbors(layout, sg.vertex(static_cast<VertexId>(id)), n);
      arcs += 2 * c;
      if (c > options.max_adjacency || arcs > options.max_adjacency) {
        fail(ErrorCode::kBudgetExceeded,
             "build: adjacency entries exceed budget " + std::to_string(options.max_adjacency));
      }
    }
  }

  std::vector<std::vector<VertexId>> adj(nv);
  if (!loopy) {
    for (std::uint64_t id = 0; id < nv; ++id) {
      const auto x = sg.vertex(static_cast<VertexId>(id));
      for_each_typed_neighbor(layout, x, n, [&](std::span<const Element> y) {
        const auto other = static_cast<VertexId>(colex_rank(y));
        adj[id].push_back(other);
        adj[other].push_back(static_cast<VertexId>(id));
      });
    }
  }
  sg.graph_ = Graph::from_adjacency(std::move(adj), options.dense_cap);
  return sg;
}

VertexId ShiftGraph::id_of(std::span<const Element> subset) const {
  if (subset.size() != width()) fail(ErrorCode::kWidthMismatch, "id_of: wrong vertex width");
  return static_cast<VertexId>(rank(subset, n_));
}

std::string ShiftGraph::label(VertexId id) const {
  std::ostringstream os;
  os << '(';
  const auto v = vertex(id);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// Symbolic degrees

Count degree_closed_form(const Ordinal& alpha, std::size_t a, std::size_t b,
                         std::span<const Ordinal> v) {
  if (a == 0) fail(ErrorCode::kUnsupported, "degree_closed_form: a must be at least 1");
  if (v.size() != a + b) fail(ErrorCode::kWidthMismatch, "degree_closed_form: vertex width is not a+b");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] < alpha)) fail(ErrorCode::kElementOutOfGround, "degree_closed_form: element not below ground");
    if (i > 0 && !(v[i - 1] < v[i])) fail(ErrorCode::kNotSorted, "degree_closed_form: vertex not increasing");
  }
  return binomial(below_count(v.front()), a) + binomial(tail_count(alpha, v.back()), a);
}

Count DegreeCensus::at(std::uint64_t degree) const {
  if (degree >= tail_from) {
    if (!tail) fail(ErrorCode::kOutOfRange, "census: degree beyond computed horizon");
    return *tail;
  }
  auto it = entries.find(degree);
  return it == entries.end() ? Count::finite(0) : it->second;
}

void DegreeCensus::normalize() {
  for (auto it = entries.begin(); it != entries.end();) {
    it = (it->second == Count::finite(0)) ? entries.erase(it) : std::next(it);
  }
  if (!tail) return;
  while (tail_from > 0 && at(tail_from - 1) == *tail) {
    --tail_from;
    entries.erase(tail_from);
  }
}

CensusScope default_census_scope(const Ordinal& alpha, std::size_t a, std::size_t b) {
  return (!alpha.is_finite() && a + b >= 3) ? CensusScope::kClasses : CensusScope::kVertices;
}

namespace {

void bump(std::map<std::uint64_t, Count>& m, std::uint64_t d, Count c) {
  auto [it, inserted] = m.emplace(d, c);
  if (!inserted) it->second = it->second + c;
}

// All n >= 0 with C(n, a) == value (a >= 1).
std::vector<std::uint64_t> binomial_preimage(std::uint64_t value, std::size_t a) {
  std::vector<std::uint64_t> out;
  if (value == 0) {
    for (std::uint64_t n = 0; n < a; ++n) out.push_back(n);
    return out;
  }
  // C(n, a) is strictly increasing for n >= a - 1.
  std::uint64_t lo = a, hi = a;
  while (binom_saturating(hi, a) < value) hi *= 2;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (binom_saturating(mid, a) < value) lo = mid + 1; else hi = mid;
  }
  if (binom_saturating(lo, a) == value) out.push_back(lo);
  return out;
}

}  // namespace

DegreeCensus finite_degree_census(const Ordinal& alpha, std::size_t a, std::size_t b,
                                  CensusScope scope) {
  if (a == 0) fail(ErrorCode::kUnsupported, "finite_degree_census: a must be at least 1");
  DegreeCensus c;
  c.scope = scope;
  c.a = a;
  c.b = b;
  const std::size_t w = a + b;

  if (alpha.is_finite()) {
    c.finite_ground = true;
    const std::uint64_t n = alpha.finite_part();
    std::uint64_t max_degree = 0;
    for (std::uint64_t f = 0; f < n; ++f) {
      const std::uint64_t l_end = (w == 1) ? f + 1 : n;
      for (std::uint64_t l = (w == 1 ? f : f + 1); l < l_end; ++l) {
        const std::uint64_t mult = (w == 1) ? 1 : binom_saturating(l - f - 1, w - 2);
        if (mult == 0) continue;
        const std::uint64_t d = binom(f, a) + binom(n - 1 - l, a);
        bump(c.entries, d, Count::finite(scope == CensusScope::kVertices ? mult : 1));
        max_degree = std::max(max_degree, d);
      }
    }
    c.tail_from = c.entries.empty() ? 0 : max_degree + 1;
    c.tail = Count::finite(0);
    c.normalize();
    return c;
  }

  // alpha = lambda + k with lambda infinite: a vertex has finite degree iff its
  // first coordinate is some finite f and its last is lambda + (k - 1 - m),
  // giving degree C(f, a) + C(m, a). Middle coordinates range over an
  // infinite set once the width is at least 3.
  const std::uint64_t k = alpha.finite_part();
  if (w == 1 || k == 0) {
    c.tail_from = 0;
    c.tail = Count::finite(0);
    return c;
  }
  const Count mult = (scope == CensusScope::kVertices && w >= 3) ? Count::infinite() : Count::finite(1);
  if (a == 1) {
    for (std::uint64_t d = 0; d < k; ++d) {
      bump(c.entries, d, Count::finite(std::min(d + 1, k)) * mult);
    }
    c.tail_from = k;
    c.tail = Count::finite(k) * mult;
    c.normalize();
    return c;
  }
  const std::uint64_t horizon = binom(k + a, a);
  for (std::uint64_t m = 0; m < k; ++m) {
    const std::uint64_t base = binom(m, a);
    for (std::uint64_t d = base; d < horizon; ++d) {
      const auto pre = binomial_preimage(d - base, a);
      if (!pre.empty()) bump(c.entries, d, Count::finite(pre.size()) * mult);
    }
  }
  c.tail_from = horizon;
  return c;
}

DegreeCensus degree_census(const Graph& graph) {
  DegreeCensus c;
  c.finite_ground = true;
  std::uint64_t max_degree = 0;
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
    const std::uint64_t d = graph.degree(static_cast<VertexId>(v));
    bump(c.entries, d, Count::finite(1));
    max_degree = std::max(max_degree, d);
  }
  c.tail_from = c.entries.empty() ? 0 : max_degree + 1;
  c.tail = Count::finite(0);
  return c;
}

namespace {

void require_usable(const DegreeCensus& census) {
  if (census.a == 0) fail(ErrorCode::kUnsupported, "infer_k: census carries no type parameters");
  if (census.a + census.b == 1) {
    fail(ErrorCode::kAmbiguousCensus, "infer_k: width-1 graphs have no finite-degree vertices");
  }
  for (const auto& [d, cnt] : census.entries) {
    if (cnt.is_infinite()) {
      fail(ErrorCode::kAmbiguousCensus,
           "infer_k: degree " + std::to_string(d) + " has infinitely many vertices; use class scope");
    }
  }
  if (census.tail && census.tail->is_infinite()) {
    fail(ErrorCode::kAmbiguousCensus, "infer_k: infinite tail count; use class scope");
  }
}

}  // namespace

std::uint64_t infer_k_by_deconvolution(const DegreeCensus& census) {
  if (census.finite_ground) fail(ErrorCode::kUnsupported, "infer_k: census of a finite ground");
  require_usable(census);
  const std::size_t a = census.a;
  // count = R * M where R(e) = #{f : C(f, a) = e} and M(e) = #{m < k : C(m, a) = e}.
  const std::uint64_t limit = census.tail ? census.tail_from + 2 : census.tail_from;
  if (limit == 0) return 0;
  auto R = [a](std::uint64_t e) -> std::uint64_t { return binomial_preimage(e, a).size(); };
  std::vector<std::uint64_t> M(limit, 0);
  for (std::uint64_t e = 0; e < limit; ++e) {
    std::int64_t rest = static_cast<std::int64_t>(census.at(e).value());
    for (std::uint64_t e2 = 0; e2 < e; ++e2) {
      if (M[e2]) rest -= static_cast<std::int64_t>(M[e2] * R(e - e2));
    }
    const auto r0 = static_cast<std::int64_t>(R(0));
    if (rest < 0 || rest % r0 != 0) {
      fail(ErrorCode::kAmbiguousCensus, "infer_k: census is not a shift-graph degree census");
    }
    M[e] = static_cast<std::uint64_t>(rest / r0);
  }
  std::uint64_t k = 0;
  for (auto m : M) k += m;
  if (k > 0 && binom_saturating(k - 1, a) >= limit) {
    fail(ErrorCode::kAmbiguousCensus, "infer_k: census horizon too short to determine k");
  }
  for (std::uint64_t e = 0; e < limit; ++e) {
    std::uint64_t expect = 0;
    for (std::uint64_t m = 0; m < k; ++m) expect += (binom(m, a) == e);
    if (M[e] != expect) fail(ErrorCode::kAmbiguousCensus, "infer_k: no stabilizing pattern");
  }
  return k;
}

namespace {

bool same_counts(const DegreeCensus& x, const DegreeCensus& y) {
  return x.entries == y.entries && x.tail_from == y.tail_from && x.tail == y.tail;
}

// A finite ground is all finite part: find the N whose census this is.
std::uint64_t infer_finite_ground(const DegreeCensus& census) {
  const std::size_t w = census.a + census.b;
  std::uint64_t total = 0;
  for (const auto& [d, cnt] : census.entries) total += cnt.value();
  for (std::uint64_t n = 0; n <= total + w; ++n) {
    DegreeCensus c = finite_degree_census(Ordinal::finite(n), census.a, census.b, census.scope);
    c.normalize();
    DegreeCensus given = census;
    given.normalize();
    if (same_counts(c, given)) return n;
  }
  fail(ErrorCode::kAmbiguousCensus, "infer_k: finite census matches no ground size");
}

}  // namespace

std::uint64_t infer_k(const DegreeCensus& census) {
  if (census.a == 0) fail(ErrorCode::kUnsupported, "infer_k: census carries no type parameters");
  if (census.finite_ground) return infer_finite_ground(census);
  require_usable(census);
  if (census.a >= 2) return infer_k_by_deconvolution(census);
  if (!census.tail) fail(ErrorCode::kAmbiguousCensus, "infer_k: census has no stable tail");
  // Largest finite count attained at some degree; zero when none is.
  std::uint64_t k = census.tail->value();
  for (const auto& [d, cnt] : census.entries) k = std::max(k, cnt.value());
  return k;
}

}  // namespace shiftgraph
