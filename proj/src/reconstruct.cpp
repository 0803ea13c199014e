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

#include "shiftgraph/reconstruct.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "shiftgraph/combinatorics.hpp"
#include "shiftgraph/error.hpp"

namespace shiftgraph {

namespace {

using Block = std::vector<VertexId>;
using Sequence = std::vector<Block>;

struct Params {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t w = 0;
  std::uint32_t n = 0;
  SideCondition condition = SideCondition::kDisjointNeighborSets;
  std::size_t expected_blocks = 0;
};

Params params_for(const Graph& g, const TypePattern& type) {
  const auto ab = as_sigma(type);
  if (!ab || ab->a == 0 || ab->b == 0) {
    fail(ErrorCode::kUnsupported, "reconstruct: type must be sigma(a, b) with a, b >= 1");
  }
  Params p;
  p.a = ab->a;
  p.b = ab->b;
  p.w = p.a + p.b;
  const std::uint64_t nv = g.num_vertices();
  std::optional<std::uint32_t> n;
  for (std::uint64_t m = p.w; binom_saturating(m, p.w) <= nv; ++m) {
    if (binom_saturating(m, p.w) == nv) {
      n = static_cast<std::uint32_t>(m);
      break;
    }
  }
  if (!n) {
    fail(ErrorCode::kWidthMismatch,
         "reconstruct: " + std::to_string(nv) + " is not C(n, " + std::to_string(p.w) + ") for any n");
  }
  p.n = *n;
  p.condition = p.a == 1 ? SideCondition::kDisjointNeighborSets : SideCondition::kEqualOrDisjoint;
  // First coordinates run over 0..n-w; those below a share block 0.
  const std::size_t spread = p.n - p.w + 1;
  p.expected_blocks = 1 + (spread > p.a ? spread - p.a : 0);
  return p;
}

bool contains(const Block& sorted, VertexId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::size_t overlap(const Block& x, const Block& y) {
  std::size_t c = 0;
  for (VertexId v : x) c += contains(y, v);
  return c;
}

// Members of `block` with the fewest neighbours outside `residual`: inside a
// chunk of a consecutive first coordinates, the removed neighbours grow with
// the first coordinate.
Block refine_to_lowest(const Graph& g, const Block& block, const std::vector<bool>& in_residual) {
  std::vector<std::size_t> outside(block.size(), 0);
  std::size_t best = SIZE_MAX;
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (VertexId u : g.neighbors(block[i])) outside[i] += !in_residual[u];
    best = std::min(best, outside[i]);
  }
  Block out;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (outside[i] == best) out.push_back(block[i]);
  }
  return out;
}

class SequenceSearch {
 public:
  SequenceSearch(const Graph& g, const Params& p, const ReconstructOptions& options)
      : g_(g), p_(p), options_(options) {}

  // Block sequences starting at `start`, steering away from the mirror
  // candidate `avoid`, in preference order.
  std::vector<Sequence> run(const Block& start, const Block& avoid) {
    found_.clear();
    avoid_ = avoid;
    std::vector<bool> in_residual(g_.num_vertices(), true);
    for (VertexId v : start) in_residual[v] = false;
    Sequence seq{start};
    dfs(seq, in_residual, g_.num_vertices() - start.size());
    return std::move(found_);
  }

 private:
  void dfs(Sequence& seq, std::vector<bool>& in_residual, std::size_t remaining) {
    if (found_.size() >= options_.max_sequences) return;
    if (remaining == 0) {
      if (seq.size() == p_.expected_blocks) found_.push_back(seq);
      return;
    }
    if (seq.size() >= p_.expected_blocks) return;
    Block residual;
    for (std::size_t v = 0; v < in_residual.size(); ++v) {
      if (in_residual[v]) residual.push_back(static_cast<VertexId>(v));
    }
    auto cands = max_cocliques_with_side_condition(g_, residual, p_.condition, options_.coclique);
    if (p_.a >= 2) {
      for (auto& c : cands) c = refine_to_lowest(g_, c, in_residual);
      std::sort(cands.begin(), cands.end());
      cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    }
    Block mirror;
    std::copy_if(avoid_.begin(), avoid_.end(), std::back_inserter(mirror),
                 [&](VertexId v) { return in_residual[v]; });
    std::stable_sort(cands.begin(), cands.end(), [&](const Block& x, const Block& y) {
      const bool xm = x == mirror, ym = y == mirror;
      if (xm != ym) return ym;
      return overlap(x, mirror) < overlap(y, mirror);
    });
    for (const auto& c : cands) {
      seq.push_back(c);
      for (VertexId v : c) in_residual[v] = false;
      dfs(seq, in_residual, remaining - c.size());
      for (VertexId v : c) in_residual[v] = true;
      seq.pop_back();
      if (found_.size() >= options_.max_sequences) return;
    }
  }

  const Graph& g_;
  const Params& p_;
  const ReconstructOptions& options_;
  Block avoid_;
  std::vector<Sequence> found_;
};

struct Interval {
  std::int64_t lo;
  std::int64_t hi;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

// Coordinates from the block index of each vertex in the sequence that
// fixes first coordinates (`firsts`) and the one that fixes last coordinates
// (`lasts`). Returns nullopt when the constraints are inconsistent.
std::optional<std::vector<std::vector<Element>>> decode(const Graph& g, const Params& p,
                                                        const Sequence& firsts, const Sequence& lasts) {
  const std::size_t nv = g.num_vertices();
  const auto n = static_cast<std::int64_t>(p.n);
  const auto a = static_cast<std::int64_t>(p.a);
  const std::size_t w = p.w;
  constexpr std::size_t kNone = SIZE_MAX;
  std::vector<std::size_t> fidx(nv, kNone), lidx(nv, kNone);
  for (std::size_t i = 0; i < firsts.size(); ++i) {
    for (VertexId v : firsts[i]) {
      if (fidx[v] != kNone) return std::nullopt;
      fidx[v] = i;
    }
  }
  for (std::size_t i = 0; i < lasts.size(); ++i) {
    for (VertexId v : lasts[i]) {
      if (lidx[v] != kNone) return std::nullopt;
      lidx[v] = i;
    }
  }
  std::vector<std::vector<Interval>> box(nv, std::vector<Interval>(w));
  for (std::size_t v = 0; v < nv; ++v) {
    if (fidx[v] == kNone || lidx[v] == kNone) return std::nullopt;
    for (std::size_t q = 0; q < w; ++q) {
      box[v][q] = {static_cast<std::int64_t>(q), n - static_cast<std::int64_t>(w - q)};
    }
    auto clamp = [](Interval& iv, std::int64_t lo, std::int64_t hi) {
      iv.lo = std::max(iv.lo, lo);
      iv.hi = std::min(iv.hi, hi);
    };
    const auto fi = static_cast<std::int64_t>(fidx[v]);
    const auto li = static_cast<std::int64_t>(lidx[v]);
    if (fi == 0) clamp(box[v][0], 0, a - 1); else clamp(box[v][0], a + fi - 1, a + fi - 1);
    if (li == 0) clamp(box[v][w - 1], n - a, n - 1); else clamp(box[v][w - 1], n - a - li, n - a - li);
  }

  // Up-edges: u's first b coordinates are v's last b.
  std::vector<Edge> up;
  for (const auto& [x, y] : g.edges()) {
    if (fidx[x] == fidx[y]) return std::nullopt;
    if (fidx[x] > fidx[y]) up.emplace_back(x, y); else up.emplace_back(y, x);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    auto meet = [&](Interval& x, Interval& y) {
      const Interval m{std::max(x.lo, y.lo), std::min(x.hi, y.hi)};
      if (m != x || m != y) changed = true;
      x = y = m;
    };
    for (const auto& [u, v] : up) {
      for (std::size_t j = 0; j < p.b; ++j) meet(box[u][j], box[v][p.a + j]);
    }
    for (std::size_t v = 0; v < nv; ++v) {
      auto& bx = box[v];
      for (std::size_t q = 1; q < w; ++q) {
        if (bx[q].lo < bx[q - 1].lo + 1) { bx[q].lo = bx[q - 1].lo + 1; changed = true; }
      }
      for (std::size_t q = w - 1; q-- > 0;) {
        if (bx[q].hi > bx[q + 1].hi - 1) { bx[q].hi = bx[q + 1].hi - 1; changed = true; }
      }
      for (const auto& iv : bx) {
        if (iv.lo > iv.hi) return std::nullopt;
      }
    }
  }

  // Vertices with the same box are handed the subsets inside it in
  // lexicographic order.
  std::map<std::vector<Interval>, std::vector<VertexId>> groups;
  for (std::size_t v = 0; v < nv; ++v) groups[box[v]].push_back(static_cast<VertexId>(v));
  std::vector<bool> used(nv, false);
  std::vector<std::vector<Element>> out(nv);
  for (const auto& [bx, members] : groups) {
    std::size_t next = 0;
    std::vector<Element> cur(w);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t q, std::int64_t floor) {
      if (next == members.size()) return;
      if (q == w) {
        const auto id = colex_rank(cur);
        if (!used[id]) {
          used[id] = true;
          out[members[next++]] = cur;
        }
        return;
      }
      for (std::int64_t x = std::max(bx[q].lo, floor); x <= bx[q].hi; ++x) {
        cur[q] = static_cast<Element>(x);
        rec(q + 1, x + 1);
        if (next == members.size()) return;
      }
    };
    rec(0, 0);
    if (next != members.size()) return std::nullopt;
  }
  return out;
}

}  // namespace

std::vector<Element> reverse_subset(std::span<const Element> subset, std::uint32_t n) {
  std::vector<Element> out;
  out.reserve(subset.size());
  for (auto it = subset.rbegin(); it != subset.rend(); ++it) {
    if (*it >= n) fail(ErrorCode::kOutOfRange, "reverse_subset: element outside [n]");
    out.push_back(n - 1 - *it);
  }
  return out;
}

bool validate_labeling(const Graph& g, const ShiftGraph& canonical, const Labeling& labeling) {
  const std::size_t nv = g.num_vertices();
  if (canonical.num_vertices() != nv || labeling.assignment.size() != nv) return false;
  std::vector<VertexId> perm(nv);
  std::vector<bool> hit(nv, false);
  for (std::size_t v = 0; v < nv; ++v) {
    const auto& s = labeling.assignment[v];
    if (s.size() != canonical.width()) return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] >= canonical.n() || (i > 0 && s[i - 1] >= s[i])) return false;
    }
    const VertexId id = canonical.id_of(s);
    if (hit[id]) return false;
    hit[id] = true;
    perm[v] = id;
  }
  if (g.num_edges() != canonical.graph().num_edges()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (!canonical.graph().adjacent(perm[u], perm[v])) return false;
  }
  return true;
}

namespace {

struct Attempt {
  Sequence forward;
  std::vector<Labeling> labelings;
};

std::optional<Attempt> try_orientation_pair(const Graph& g, const Params& p, const ShiftGraph& canonical,
                                            const Block& fwd_start, const Block& rev_start,
                                            const ReconstructOptions& options) {
  SequenceSearch search(g, p, options);
  const auto fwd = search.run(fwd_start, rev_start);
  if (fwd.empty()) return std::nullopt;
  const auto rev = search.run(rev_start, fwd_start);
  if (rev.empty()) return std::nullopt;
  for (const auto& fs : fwd) {
    for (const auto& rs : rev) {
      Attempt at;
      at.forward = fs;
      for (const auto orient : {Orientation::kForward, Orientation::kReversed}) {
        const bool f = orient == Orientation::kForward;
        auto assignment = decode(g, p, f ? fs : rs, f ? rs : fs);
        if (!assignment) continue;
        Labeling lab{std::move(*assignment), orient};
        if (validate_labeling(g, canonical, lab)) at.labelings.push_back(std::move(lab));
      }
      if (!at.labelings.empty()) return at;
    }
  }
  return std::nullopt;
}

// Ordered (forward, reversed) seeds; forward holds the smallest vertex the
// two seeds do not share.
std::vector<std::pair<Block, Block>> seed_pairs(const std::vector<Block>& cands) {
  std::vector<std::pair<Block, Block>> out;
  if (cands.size() == 1) out.emplace_back(cands[0], cands[0]);
  for (std::size_t i = 0; i < cands.size(); ++i) {
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      const Block& x = cands[i];
      const Block& y = cands[j];
      Block diff;
      std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(diff));
      if (diff.empty() || contains(x, diff.front())) out.emplace_back(x, y); else out.emplace_back(y, x);
    }
  }
  return out;
}

std::vector<Block> initial_candidates(const Graph& g, const Params& p, const ReconstructOptions& options) {
  Block all(g.num_vertices());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<VertexId>(v);
  return max_cocliques_with_side_condition(g, all, p.condition, options.coclique);
}

}  // namespace

std::vector<std::vector<VertexId>> extract_bar_sequence(const Graph& g, const TypePattern& type,
                                                        const ReconstructOptions& options) {
  Params p;
  try {
    p = params_for(g, type);
  } catch (const Error& e) {
    // Extraction has a single failure mode for inputs that cannot be shift graphs.
    if (e.code() != ErrorCode::kWidthMismatch) throw;
    fail(ErrorCode::kNotAShiftGraph, std::string("extract_bar_sequence: ") + e.what());
  }
  SequenceSearch search(g, p, options);
  for (const auto& [fwd, rev] : seed_pairs(initial_candidates(g, p, options))) {
    const auto seqs = search.run(fwd, rev);
    if (!seqs.empty()) return seqs.front();
  }
  fail(ErrorCode::kNotAShiftGraph, "extract_bar_sequence: no consistent block sequence");
}

ReconstructionReport reconstruct(const Graph& g, const TypePattern& type, const ReconstructOptions& options) {
  const Params p = params_for(g, type);
  const ShiftGraph canonical = ShiftGraph::build(p.n, type);
  for (const auto& [fwd, rev] : seed_pairs(initial_candidates(g, p, options))) {
    auto at = try_orientation_pair(g, p, canonical, fwd, rev, options);
    if (!at) continue;
    ReconstructionReport report;
    report.n = p.n;
    report.pattern = type;
    report.labelings = std::move(at->labelings);
    report.trace = std::move(at->forward);
    return report;
  }
  fail(ErrorCode::kNotAShiftGraph, "reconstruct: no labelling reproduces the adjacency");
}

SymbolicAlpha infer_alpha_symbolic(const Ordinal& alpha, std::size_t a, std::size_t b) {
  if (a == 0) fail(ErrorCode::kUnsupported, "infer_alpha_symbolic: a must be at least 1");
  SymbolicAlpha out;
  out.scope = default_census_scope(alpha, a, b);
  out.census = finite_degree_census(alpha, a, b, out.scope);
  out.k = infer_k(out.census);
  out.alpha = decompose(alpha).limit_part + out.k;
  return out;
}

}  // namespace shiftgraph
