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

#include "shiftgraph/structure.hpp"

#include <algorithm>
#include <map>

#include "shiftgraph/error.hpp"

namespace shiftgraph {

std::vector<VertexId> isolated_vertices(const Graph& g) {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(static_cast<VertexId>(v)) == 0) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

std::vector<VertexId> common_neighbors(const Graph& g, VertexId u, VertexId v) {
  if (u == v) fail(ErrorCode::kInvalidArgument, "common_neighbors: u == v");
  if (u >= g.num_vertices() || v >= g.num_vertices()) {
    fail(ErrorCode::kInvalidArgument, "common_neighbors: vertex out of range");
  }
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EquivalencePartition equivalence_classes(const Graph& g) {
  EquivalencePartition p;
  p.class_of.resize(g.num_vertices());
  std::map<std::vector<VertexId>, std::uint32_t> seen;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const auto row = g.neighbors(static_cast<VertexId>(v));
    auto [it, inserted] = seen.emplace(std::vector<VertexId>(row.begin(), row.end()),
                                       static_cast<std::uint32_t>(p.classes.size()));
    if (inserted) p.classes.emplace_back();
    p.classes[it->second].push_back(static_cast<VertexId>(v));
    p.class_of[v] = it->second;
  }
  return p;
}

QuotientGraph quotient(const Graph& g, const EquivalencePartition& partition) {
  if (partition.class_of.size() != g.num_vertices()) {
    fail(ErrorCode::kInvalidArgument, "quotient: partition does not match graph");
  }
  QuotientGraph q;
  std::vector<std::vector<VertexId>> adj(partition.classes.size());
  for (std::size_t c = 0; c < partition.classes.size(); ++c) {
    const auto& cls = partition.classes[c];
    q.sizes.push_back(cls.size());
    for (VertexId u : g.neighbors(cls.front())) {
      const VertexId d = partition.class_of[u];
      if (adj[c].empty() || adj[c].back() != d) adj[c].push_back(d);
    }
  }
  q.graph = Graph::from_adjacency(std::move(adj));
  return q;
}

namespace {

class CocliqueSearch {
 public:
  CocliqueSearch(std::vector<DynBitset> adj, std::vector<DynBitset> compat, std::uint64_t max_examined)
      : adj_(std::move(adj)), compat_(std::move(compat)), max_examined_(max_examined) {}

  std::vector<std::vector<std::size_t>> run() {
    const std::size_t r = adj_.size();
    DynBitset all(r);
    all.set_all();
    expand(DynBitset(r), all, DynBitset(r), DynBitset(r));
    return std::move(found_);
  }

 private:
  // current: chosen set; cand/excl: Bron-Kerbosch P and X over the
  // compatibility graph; covered: current plus its neighbours.
  void expand(const DynBitset& current, const DynBitset& cand, const DynBitset& excl,
              const DynBitset& covered) {
    if (++examined_ > max_examined_) {
      fail(ErrorCode::kBudgetExceeded, "co-clique search exceeded its budget");
    }
    const std::size_t r = adj_.size();
    // A vertex outside the final set needs a neighbour in it.
    DynBitset uncovered(r);
    uncovered.set_all();
    uncovered.subtract(covered);
    for (std::size_t u = uncovered.first(); u < r; u = uncovered.next(u + 1)) {
      if (!cand.test(u) && !adj_[u].intersects(cand)) return;
    }
    if (cand.none()) {
      if (uncovered.none()) found_.push_back(current.to_vector());
      return;
    }
    std::size_t pivot = r, best = 0;
    const DynBitset pool = cand | excl;
    for (std::size_t u = pool.first(); u < r; u = pool.next(u + 1)) {
      const std::size_t c = (cand & compat_[u]).count();
      if (pivot == r || c > best) { pivot = u; best = c; }
    }
    DynBitset todo = minus(cand, compat_[pivot]);
    DynBitset p = cand;
    DynBitset x = excl;
    for (std::size_t v = todo.first(); v < r; v = todo.next(v + 1)) {
      DynBitset next_current = current;
      next_current.set(v);
      DynBitset next_covered = covered | adj_[v];
      next_covered.set(v);
      expand(next_current, p & compat_[v], x & compat_[v], next_covered);
      p.reset(v);
      x.set(v);
    }
  }

  std::vector<DynBitset> adj_;
  std::vector<DynBitset> compat_;
  std::uint64_t max_examined_;
  std::uint64_t examined_ = 0;
  std::vector<std::vector<std::size_t>> found_;
};

}  // namespace

std::vector<std::vector<VertexId>> max_cocliques_with_side_condition(
    const Graph& g, std::span<const VertexId> region_in, SideCondition condition,
    const CocliqueOptions& options) {
  std::vector<VertexId> region(region_in.begin(), region_in.end());
  std::sort(region.begin(), region.end());
  if (std::adjacent_find(region.begin(), region.end()) != region.end()) {
    fail(ErrorCode::kInvalidArgument, "co-cliques: repeated vertex in region");
  }
  if (!region.empty() && region.back() >= g.num_vertices()) {
    fail(ErrorCode::kInvalidArgument, "co-cliques: region vertex out of range");
  }
  const std::size_t r = region.size();
  if (r == 0) return {};

  std::vector<std::size_t> local(g.num_vertices(), r);
  for (std::size_t i = 0; i < r; ++i) local[region[i]] = i;
  std::vector<DynBitset> adj(r, DynBitset(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (VertexId u : g.neighbors(region[i])) {
      if (local[u] < r) adj[i].set(local[u]);
    }
  }
  std::vector<DynBitset> compat(r, DynBitset(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (adj[i].test(j)) continue;
      bool ok = !adj[i].intersects(adj[j]);
      if (!ok && condition == SideCondition::kEqualOrDisjoint) ok = adj[i] == adj[j];
      if (ok) {
        compat[i].set(j);
        compat[j].set(i);
      }
    }
  }

  CocliqueSearch search(std::move(adj), std::move(compat), options.max_examined);
  std::vector<std::vector<VertexId>> out;
  for (const auto& set : search.run()) {
    std::vector<VertexId> ids;
    ids.reserve(set.size());
    for (std::size_t i : set) ids.push_back(region[i]);
    out.push_back(std::move(ids));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BipartiteFormReport check_bipartite_form(const ShiftGraph& sg) {
  if (!(sg.type() == sigma(1, 1))) fail(ErrorCode::kWrongType, "check_bipartite_form: type must be 132");
  const Graph& g = sg.graph();
  BipartiteFormReport report;
  const std::size_t nv = g.num_vertices();
  for (std::size_t u = 0; u < nv; ++u) {
    for (std::size_t v = u + 1; v < nv; ++v) {
      const auto cn = common_neighbors(g, static_cast<VertexId>(u), static_cast<VertexId>(v));
      if (cn.size() < 2) continue;
      ++report.pairs_checked;
      const auto x = sg.vertex(static_cast<VertexId>(u));
      const auto y = sg.vertex(static_cast<VertexId>(v));
      if (x[0] != y[0] && x[1] != y[1]) report.violations.emplace_back(u, v);
    }
  }
  const std::uint32_t n = sg.n();
  for (Element c = 1; c + 1 < n; ++c) {
    BipartiteWitness w;
    w.center = c;
    for (Element a = 0; a < c; ++a) w.left.push_back(sg.id_of(std::vector<Element>{a, c}));
    for (Element b = c + 1; b < n; ++b) w.right.push_back(sg.id_of(std::vector<Element>{c, b}));
    bool ok = true;
    for (VertexId l : w.left) {
      for (VertexId r : w.right) ok = ok && g.adjacent(l, r);
    }
    for (const auto* side : {&w.left, &w.right}) {
      for (std::size_t i = 0; i < side->size(); ++i) {
        for (std::size_t j = i + 1; j < side->size(); ++j) ok = ok && !g.adjacent((*side)[i], (*side)[j]);
      }
    }
    if (!ok) report.violations.emplace_back(w.left.front(), w.right.front());
    report.stars.push_back(std::move(w));
  }
  return report;
}

}  // namespace shiftgraph
