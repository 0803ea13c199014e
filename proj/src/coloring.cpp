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

#include "shiftgraph/coloring.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <numeric>

#include "shiftgraph/combinatorics.hpp"
#include "shiftgraph/error.hpp"
#include "shiftgraph/types.hpp"

namespace shiftgraph {

namespace {

constexpr Color kUncolored = std::numeric_limits<Color>::max();

using Clock = std::chrono::steady_clock;

struct Timeout {};

class DsaturSearch {
 public:
  DsaturSearch(const Graph& g, std::uint32_t t, Clock::time_point deadline)
      : g_(g), t_(t), deadline_(deadline), nv_(g.num_vertices()),
        color_(nv_, kUncolored), count_(nv_ * t, 0), sat_(nv_, 0), free_degree_(nv_) {
    for (std::size_t v = 0; v < nv_; ++v) free_degree_[v] = static_cast<std::uint32_t>(g.degree(static_cast<VertexId>(v)));
  }

  bool run() { return nv_ == 0 || (t_ > 0 && extend(0, 0)); }
  std::vector<Color> colors() const { return color_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  VertexId pick() const {
    VertexId best = 0;
    bool have = false;
    for (std::size_t v = 0; v < nv_; ++v) {
      if (color_[v] != kUncolored) continue;
      if (!have || sat_[v] > sat_[best] || (sat_[v] == sat_[best] && free_degree_[v] > free_degree_[best])) {
        best = static_cast<VertexId>(v);
        have = true;
      }
    }
    return best;
  }

  // Returns false if some uncoloured neighbour is left with no colour.
  bool assign(VertexId v, Color c) {
    color_[v] = c;
    bool alive = true;
    for (VertexId u : g_.neighbors(v)) {
      --free_degree_[u];
      if (count_[u * t_ + c]++ == 0) {
        ++sat_[u];
        if (color_[u] == kUncolored && sat_[u] == t_) alive = false;
      }
    }
    return alive;
  }

  void unassign(VertexId v, Color c) {
    color_[v] = kUncolored;
    for (VertexId u : g_.neighbors(v)) {
      ++free_degree_[u];
      if (--count_[u * t_ + c] == 0) --sat_[u];
    }
  }

  // `used` colours 0..used-1 appear so far; a fresh colour is always `used`.
  bool extend(std::size_t colored, std::uint32_t used) {
    if (colored == nv_) return true;
    if ((++nodes_ & 0xFFF) == 0 && Clock::now() > deadline_) throw Timeout{};
    const VertexId v = pick();
    const std::uint32_t limit = std::min(t_, used + 1);
    for (Color c = 0; c < limit; ++c) {
      if (count_[v * t_ + c] > 0) continue;
      const bool alive = assign(v, c);
      if (alive && extend(colored + 1, std::max(used, c + 1))) return true;
      unassign(v, c);
    }
    return false;
  }

  const Graph& g_;
  std::uint32_t t_;
  Clock::time_point deadline_;
  std::size_t nv_;
  std::vector<Color> color_;
  std::vector<std::uint32_t> count_;
  std::vector<std::uint32_t> sat_;
  std::vector<std::uint32_t> free_degree_;  // uncoloured neighbours
  std::uint64_t nodes_ = 0;
};

Clock::time_point deadline_after(double seconds) {
  const auto capped = std::min(seconds, 1e7);
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(capped));
}

std::uint32_t colors_used(const std::vector<Color>& colors) {
  std::uint32_t t = 0;
  for (Color c : colors) t = std::max(t, c + 1);
  return t;
}

}  // namespace

bool is_proper(const Graph& g, const Coloring& c) {
  if (c.colors.size() != g.num_vertices()) return false;
  for (Color x : c.colors) {
    if (x >= c.t) return false;
  }
  for (const auto& [u, v] : g.edges()) {
    if (c.colors[u] == c.colors[v]) return false;
  }
  return true;
}

Coloring greedy_chromatic(const Graph& g, GreedyOrder order) {
  const std::size_t nv = g.num_vertices();
  std::vector<VertexId> seq(nv);
  std::iota(seq.begin(), seq.end(), 0);
  if (order == GreedyOrder::kDegreeDesc) {
    std::stable_sort(seq.begin(), seq.end(), [&](VertexId x, VertexId y) { return g.degree(x) > g.degree(y); });
  }
  Coloring out;
  out.colors.assign(nv, kUncolored);
  std::vector<bool> taken;
  for (VertexId v : seq) {
    taken.assign(g.degree(v) + 1, false);
    for (VertexId u : g.neighbors(v)) {
      const Color c = out.colors[u];
      if (c != kUncolored && c < taken.size()) taken[c] = true;
    }
    Color c = 0;
    while (taken[c]) ++c;
    out.colors[v] = c;
  }
  out.t = colors_used(out.colors);
  return out;
}

std::vector<VertexId> max_clique(const Graph& g) {
  const std::size_t nv = g.num_vertices();
  std::vector<DynBitset> adj(nv, DynBitset(nv));
  for (std::size_t v = 0; v < nv; ++v) adj[v] = g.neighbor_set(static_cast<VertexId>(v));
  std::vector<VertexId> best, cur;
  // Simple branch and bound with the candidate-count bound.
  auto rec = [&](auto&& self, DynBitset cand) -> void {
    if (cur.size() > best.size()) best = cur;
    while (cand.any()) {
      if (cur.size() + cand.count() <= best.size()) return;
      const std::size_t v = cand.first();
      cand.reset(v);
      cur.push_back(static_cast<VertexId>(v));
      self(self, cand & adj[v]);
      cur.pop_back();
    }
  };
  DynBitset all(nv);
  all.set_all();
  rec(rec, all);
  return best;
}

Colorability t_colorable(const Graph& g, std::uint32_t t, double time_budget_seconds, Coloring* out,
                         std::uint64_t* nodes) {
  DsaturSearch search(g, t, deadline_after(time_budget_seconds));
  Colorability result;
  try {
    result = search.run() ? Colorability::kColorable : Colorability::kNotColorable;
  } catch (const Timeout&) {
    result = Colorability::kUnknown;
  }
  if (nodes) *nodes += search.nodes();
  if (result == Colorability::kColorable && out) {
    out->colors = search.colors();
    out->t = t;
  }
  return result;
}

namespace {

// Candidate prefixes are (vertex count, ground size) pairs to try before the
// full graph; empty for plain graphs.
ChromaticResult solve(const Graph& g, const ChromaticOptions& options,
                      const std::vector<std::pair<std::size_t, std::uint32_t>>& prefixes) {
  ChromaticResult r;
  const auto deadline = deadline_after(options.time_budget_seconds);
  auto remaining = [&] {
    return std::chrono::duration<double>(deadline - Clock::now()).count();
  };
  const std::size_t nv = g.num_vertices();
  Coloring best = greedy_chromatic(g, GreedyOrder::kDegreeDesc);
  Coloring dsat;
  if (t_colorable(g, static_cast<std::uint32_t>(std::max<std::size_t>(nv, 1)), remaining(), &dsat, &r.nodes) ==
          Colorability::kColorable) {
    dsat.t = colors_used(dsat.colors);
    if (dsat.t < best.t) best = dsat;
  }
  r.witness = best;
  r.upper_bound = best.t;
  const auto clique = max_clique(g);
  r.lower_bound = static_cast<std::uint32_t>(clique.size());
  if (r.lower_bound == r.upper_bound) {
    r.exact = true;
    r.chi = r.upper_bound;
    r.proof = ProofKind::kCliqueBound;
    return r;
  }
  for (std::uint32_t t = r.lower_bound; t < r.upper_bound; ++t) {
    bool refuted = false;
    for (const auto& [size, m] : prefixes) {
      if (size > options.proof_vertex_cap) break;
      std::vector<VertexId> keep(size);
      std::iota(keep.begin(), keep.end(), 0);
      const Colorability pc = t_colorable(g.induced(keep), t, remaining(), nullptr, &r.nodes);
      if (pc == Colorability::kUnknown) return r;
      if (pc == Colorability::kNotColorable) {
        refuted = true;
        r.lower_bound = t + 1;
        r.proof = ProofKind::kPrefixExhausted;
        r.proof_ground = m;
        break;
      }
    }
    if (refuted) continue;
    Coloring found;
    const Colorability full = t_colorable(g, t, remaining(), &found, &r.nodes);
    if (full == Colorability::kUnknown) return r;
    if (full == Colorability::kNotColorable) {
      r.lower_bound = t + 1;
      r.proof = ProofKind::kExhausted;
      r.proof_ground = 0;
      continue;
    }
    r.witness = found;
    r.upper_bound = t;
    break;
  }
  r.exact = r.lower_bound == r.upper_bound;
  if (r.exact) {
    r.chi = r.upper_bound;
    if (r.chi == clique.size()) r.proof = ProofKind::kCliqueBound;
  }
  return r;
}

}  // namespace

ChromaticResult exact_chromatic(const Graph& g, const ChromaticOptions& options) {
  return solve(g, options, {});
}

ChromaticResult exact_chromatic(const ShiftGraph& sg, const ChromaticOptions& options) {
  std::vector<std::pair<std::size_t, std::uint32_t>> prefixes;
  for (std::uint32_t m = sg.width(); m < sg.n(); ++m) {
    prefixes.emplace_back(static_cast<std::size_t>(binom(m, sg.width())), m);
  }
  return solve(sg.graph(), options, prefixes);
}

InjectionCertificate injection_certificate(const ShiftGraph& sg, const Coloring& c) {
  const auto ab = as_sigma(sg.type());
  if (!ab || ab->b != 1) fail(ErrorCode::kWrongType, "injection_certificate: type must be sigma(a, 1)");
  if (c.colors.size() != sg.num_vertices()) {
    fail(ErrorCode::kInvalidArgument, "injection_certificate: colouring size mismatch");
  }
  const std::size_t a = ab->a;
  const std::uint32_t n = sg.n();
  InjectionCertificate cert;
  if (n < a) return cert;
  auto block_vertex = [&](Element x, Element y) {
    std::vector<Element> v(a + 1);
    for (std::size_t i = 0; i < a; ++i) v[i] = x + static_cast<Element>(i);
    v[a] = y;
    return sg.id_of(v);
  };
  for (Element x = 0; x + a <= n; ++x) {
    std::vector<Color> f;
    for (Element y = x + static_cast<Element>(a); y < n; ++y) f.push_back(c.colors[block_vertex(x, y)]);
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    cert.sets.push_back(std::move(f));
  }
  const std::size_t count = cert.sets.size();
  for (std::size_t x = 0; x < count && cert.injective; ++x) {
    for (std::size_t x2 = x + a; x2 < count; ++x2) {
      if (cert.sets[x] != cert.sets[x2]) continue;
      cert.injective = false;
      cert.collision = {static_cast<Element>(x), static_cast<Element>(x2)};
      // (x..x+a-1, x2) has a colour that f(x2) must also contain.
      const VertexId u = block_vertex(static_cast<Element>(x), static_cast<Element>(x2));
      for (Element y = static_cast<Element>(x2 + a); y < n; ++y) {
        const VertexId v = block_vertex(static_cast<Element>(x2), y);
        if (c.colors[v] == c.colors[u]) {
          cert.monochromatic_edge = Edge{u, v};
          break;
        }
      }
      break;
    }
  }
  return cert;
}

std::size_t PartitionTree::height() const {
  std::size_t h = 0;
  for (const auto& node : nodes) h = std::max(h, node.depth);
  return h;
}

std::optional<std::pair<std::size_t, std::size_t>> PartitionTree::repeated_branch_color() const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!nodes[i].edge_color) continue;
    for (auto p = nodes[i].parent; p; p = nodes[*p].parent) {
      if (nodes[*p].edge_color == nodes[i].edge_color) return std::make_pair(*p, i);
    }
  }
  return std::nullopt;
}

PartitionTree partition_tree(const ShiftGraph& sg, const Coloring& c) {
  if (!(sg.type() == sigma(1, 1))) fail(ErrorCode::kWrongType, "partition_tree: type must be 132");
  if (c.colors.size() != sg.num_vertices()) {
    fail(ErrorCode::kInvalidArgument, "partition_tree: colouring size mismatch");
  }
  PartitionTree tree;
  const std::uint32_t n = sg.n();
  if (n == 0) return tree;
  PartitionTreeNode root;
  root.pivot = 0;
  for (Element t = 1; t < n; ++t) root.residual.push_back(t);
  tree.nodes.push_back(std::move(root));
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const Element pivot = tree.nodes[i].pivot;
    std::map<Color, std::vector<Element>> parts;
    for (Element t : tree.nodes[i].residual) {
      parts[c.colors[sg.id_of(std::vector<Element>{pivot, t})]].push_back(t);
    }
    // Children ordered by their pivots.
    std::vector<std::pair<Color, std::vector<Element>>> ordered(parts.begin(), parts.end());
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& x, const auto& y) { return x.second.front() < y.second.front(); });
    for (auto& [color, part] : ordered) {
      PartitionTreeNode child;
      child.pivot = part.front();
      child.residual.assign(part.begin() + 1, part.end());
      child.edge_color = color;
      child.parent = i;
      child.depth = tree.nodes[i].depth + 1;
      tree.nodes[i].children.push_back(tree.nodes.size());
      tree.nodes.push_back(std::move(child));
    }
  }
  return tree;
}

}  // namespace shiftgraph
