#include "gridlock/conditions.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace gridlock {

const char* to_string(ConditionId id) {
  switch (id) {
    case ConditionId::star: return "star";
    case ConditionId::path: return "path";
    case ConditionId::cycle: return "cycle";
    case ConditionId::pan: return "pan";
    case ConditionId::adjacent_cycles: return "adjacent_cycles";
    case ConditionId::reinforced_cycle: return "reinforced_cycle";
    case ConditionId::reinforced_pan: return "reinforced_pan";
    case ConditionId::reinforced_adjacent_cycles: return "reinforced_adjacent_cycles";
  }
  return "?";
}

const ConditionOutcome& ConditionReport::outcome(ConditionId id) const {
  return outcomes[static_cast<std::size_t>(id)];
}

bool ConditionReport::all_pass() const {
  for (const auto& o : outcomes)
    if (!o.pass || o.capped) return false;
  return true;
}

bool ConditionReport::fconvexity_bundle_pass() const {
  for (ConditionId id : {ConditionId::star, ConditionId::path, ConditionId::cycle,
                         ConditionId::pan, ConditionId::adjacent_cycles}) {
    const auto& o = outcome(id);
    if (!o.pass || o.capped) return false;
  }
  return true;
}

bool ConditionReport::cycle_free_bundle_pass() const {
  for (ConditionId id : {ConditionId::star, ConditionId::path}) {
    const auto& o = outcome(id);
    if (!o.pass || o.capped) return false;
  }
  return true;
}

namespace {

struct Collector {
  ConditionOutcome& out;
  const CheckOptions& opts;

  bool full() const {
    if (opts.first_witness_only && !out.violations.empty()) return true;
    return out.violations.size() >= opts.max_violations;
  }
  void add(Violation v) {
    out.pass = false;
    if (full()) {
      out.truncated = true;
      return;
    }
    out.violations.push_back(std::move(v));
  }
};

std::string edge_str(const WeightedGraph& g, int idx) {
  const Edge& e = g.edge(idx);
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}=" + e.weight.to_string();
}

std::string seq_str(const std::vector<int>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += "-";
    s += std::to_string(vs[i]);
  }
  return s;
}

// True iff the endpoint sets touch or some graph edge joins them.
bool linked_sets(const WeightedGraph& g, mask_t xs, mask_t ys) {
  if (xs & ys) return true;
  mask_t scan = xs;
  while (scan) {
    int v = lowest_vertex(scan);
    scan &= scan - 1;
    if (g.neighbors(v) & ys) return true;
  }
  return false;
}

// Cyclic labeling of a cycle: position p in [1, m] maps to a vertex.
struct Labeling {
  const std::vector<int>* vertices;
  int rot;
  bool reflect;

  int vertex_at(int p) const {
    int m = static_cast<int>(vertices->size());
    int off = reflect ? (rot - (p - 1)) % m : (rot + (p - 1)) % m;
    if (off < 0) off += m;
    return (*vertices)[off];
  }
};

Rational edge_weight_at(const WeightedGraph& g, const Labeling& lab, int p, int m) {
  int u = lab.vertex_at(p);
  int v = lab.vertex_at(p == m ? 1 : p + 1);
  return g.weight(u, v);
}

// ---------------------------------------------------------------------------
// Star condition: at every vertex, any three incident edges have their two
// largest weights equal.

std::optional<Violation> star_violation(const WeightedGraph& g, const Star& s) {
  Rational a = g.edge(s.e1).weight;
  Rational b = g.edge(s.e2).weight;
  Rational c = g.edge(s.e3).weight;
  Rational lo = std::min({a, b, c});
  Rational hi = std::max({a, b, c});
  Rational mid = a + b + c - lo - hi;
  if (mid == hi) return std::nullopt;
  Violation v;
  v.condition = ConditionId::star;
  v.detail = "star at " + std::to_string(s.center) + ": edges " + edge_str(g, s.e1) + ", " +
             edge_str(g, s.e2) + ", " + edge_str(g, s.e3) + " have unequal two largest weights";
  v.witness = StarWitness{s.center, {s.e1, s.e2, s.e3}};
  return v;
}

ConditionOutcome star_impl(const WeightedGraph& g, const std::vector<Star>& stars,
                           const CheckOptions& opts) {
  ConditionOutcome out;
  out.id = ConditionId::star;
  Collector col{out, opts};
  for (const Star& s : stars) {
    if (col.full()) {
      out.truncated = true;
      break;
    }
    if (auto v = star_violation(g, s)) col.add(std::move(*v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Path condition: no interior edge of a simple path outweighs both some
// earlier and some later edge.

std::optional<Violation> path_violation(const WeightedGraph& g, const Path& p) {
  int m = p.edge_count();
  std::vector<Rational> w(m);
  for (int i = 0; i < m; ++i) w[i] = g.edge(p.edges[i]).weight;
  // prefix/suffix argmin
  std::vector<int> pre(m), suf(m);
  for (int i = 0; i < m; ++i) pre[i] = (i == 0 || w[i] < w[pre[i - 1]]) ? i : pre[i - 1];
  for (int i = m - 1; i >= 0; --i)
    suf[i] = (i == m - 1 || w[i] < w[suf[i + 1]]) ? i : suf[i + 1];
  for (int j = 1; j + 1 < m; ++j) {
    int i = pre[j - 1];
    int k = suf[j + 1];
    if (w[j] > w[i] && w[j] > w[k]) {
      Violation v;
      v.condition = ConditionId::path;
      v.detail = "path " + seq_str(p.vertices) + ": interior edge " + edge_str(g, p.edges[j]) +
                 " outweighs " + edge_str(g, p.edges[i]) + " and " + edge_str(g, p.edges[k]);
      v.witness = PathWitness{p.vertices, i, j, k};
      return v;
    }
  }
  return std::nullopt;
}

ConditionOutcome path_impl(const WeightedGraph& g, const std::vector<Path>& paths,
                           const CheckOptions& opts) {
  ConditionOutcome out;
  out.id = ConditionId::path;
  Collector col{out, opts};
  for (const Path& p : paths) {
    if (col.full()) {
      out.truncated = true;
      break;
    }
    if (auto v = path_violation(g, p)) col.add(std::move(*v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cycle condition: some labeling puts all weight below the maximum on the two
// edges meeting at vertex 2, with chords at 2 weighing exactly w_2 and every
// other edge or chord weighing the maximum.

bool cycle_labeling_ok(const WeightedGraph& g, const Cycle& c, const Labeling& lab) {
  int m = c.length();
  const Rational& mhat = c.max_weight;
  for (int p = 3; p <= m; ++p)
    if (edge_weight_at(g, lab, p, m) != mhat) return false;
  Rational w1 = edge_weight_at(g, lab, 1, m);
  Rational w2 = edge_weight_at(g, lab, 2, m);
  if (w2 < w1) return false;
  int v2 = lab.vertex_at(2);
  for (int idx : c.chords) {
    const Edge& e = g.edge(idx);
    if (e.incident(v2)) {
      if (e.weight != w2) return false;
    } else {
      if (e.weight != mhat) return false;
    }
  }
  return true;
}

std::optional<Violation> cycle_violation(const WeightedGraph& g, const Cycle& c) {
  int m = c.length();
  for (int rot = 0; rot < m; ++rot)
    for (bool refl : {false, true})
      if (cycle_labeling_ok(g, c, Labeling{&c.vertices, rot, refl})) return std::nullopt;
  Violation v;
  v.condition = ConditionId::cycle;
  std::string ws;
  for (std::size_t i = 0; i < c.cycle_edges.size(); ++i) {
    if (i) ws += ", ";
    ws += edge_str(g, c.cycle_edges[i]);
  }
  v.detail = "cycle " + seq_str(c.vertices) + ": edges " + ws + " (max " +
             c.max_weight.to_string() + ", " + std::to_string(c.chords.size()) +
             " chords) admit no valid labeling";
  v.witness = CycleWitness{c.vertices};
  return v;
}

ConditionOutcome cycle_impl(const WeightedGraph& g, const std::vector<Cycle>& cycles,
                            const CheckOptions& opts) {
  ConditionOutcome out;
  out.id = ConditionId::cycle;
  Collector col{out, opts};
  for (const Cycle& c : cycles) {
    if (col.full()) {
      out.truncated = true;
      break;
    }
    if (auto v = cycle_violation(g, c)) col.add(std::move(*v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pan condition: a cycle carrying a path with a cheap-enough edge must be
// constant, or have exactly two equal sub-maximum edges meeting at the attach
// vertex; a strictly cheaper path edge additionally forces the short-cut edge
// across the attach vertex at maximum weight.

std::optional<Violation> pan_violation(const WeightedGraph& g, const Pan& pan) {
  const Cycle& c = pan.cycle;
  const Rational& mhat = c.max_weight;

  Rational sigma_c = g.edge(c.cycle_edges[0]).weight;
  for (int e : c.cycle_edges) sigma_c = std::min(sigma_c, g.edge(e).weight);
  Rational q = g.edge(pan.path_edges[0]).weight;
  for (int e : pan.path_edges) q = std::min(q, g.edge(e).weight);
  if (q > sigma_c) return std::nullopt;  // premise absent

  auto fail = [&](const std::string& why) {
    Violation v;
    v.condition = ConditionId::pan;
    v.detail = "pan (cycle " + seq_str(c.vertices) + ", path " + seq_str(pan.path_vertices) +
               ", cheapest path edge " + q.to_string() + "): " + why;
    v.witness = PanWitness{c.vertices, pan.path_vertices};
    return v;
  };

  std::vector<int> cheap;
  for (int e : c.cycle_edges)
    if (g.edge(e).weight < mhat) cheap.push_back(e);
  if (cheap.empty()) return std::nullopt;  // constant cycle at the maximum

  if (cheap.size() != 2)
    return fail("cycle has " + std::to_string(cheap.size()) +
                " sub-maximum edges; needs zero or an adjacent equal pair");
  const Edge& f1 = g.edge(cheap[0]);
  const Edge& f2 = g.edge(cheap[1]);
  if (f1.weight != f2.weight)
    return fail("the two sub-maximum cycle edges " + edge_str(g, cheap[0]) + ", " +
                edge_str(g, cheap[1]) + " differ in weight");
  mask_t shared = f1.ends() & f2.ends();
  if (!shared) return fail("the two sub-maximum cycle edges share no vertex");
  int x = lowest_vertex(shared);
  if (x != pan.attach)
    return fail("the sub-maximum pair meets at " + std::to_string(x) +
                " but the path attaches at " + std::to_string(pan.attach));
  if (q < f1.weight) {
    int n1 = f1.other(x);
    int n2 = f2.other(x);
    int idx = g.edge_index(n1, n2);
    if (idx < 0 || g.edge(idx).weight != mhat)
      return fail("path edge cheaper than the sub-maximum pair, but edge {" +
                  std::to_string(n1) + "," + std::to_string(n2) +
                  "} at maximum weight is missing");
  }
  return std::nullopt;
}

ConditionOutcome pan_impl(const WeightedGraph& g, const std::vector<Pan>& pans,
                          const CheckOptions& opts) {
  ConditionOutcome out;
  out.id = ConditionId::pan;
  Collector col{out, opts};
  for (const Pan& p : pans) {
    if (col.full()) {
      out.truncated = true;
      break;
    }
    if (auto v = pan_violation(g, p)) col.add(std::move(*v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Adjacent cycles condition.

struct PairContext {
  std::vector<int> common;          // shared cycle edges
  std::vector<int> only_first;      // cycle edges of C not in C'
  std::vector<int> only_second;
  bool premise = false;
};

PairContext pair_context(const WeightedGraph& g, const Cycle& c1, const Cycle& c2) {
  PairContext ctx;
  std::vector<int> e1 = c1.cycle_edges;
  std::vector<int> e2 = c2.cycle_edges;
  std::sort(e1.begin(), e1.end());
  std::sort(e2.begin(), e2.end());
  std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(),
                        std::back_inserter(ctx.common));
  std::set_difference(e1.begin(), e1.end(), e2.begin(), e2.end(),
                      std::back_inserter(ctx.only_first));
  std::set_difference(e2.begin(), e2.end(), e1.begin(), e1.end(),
                      std::back_inserter(ctx.only_second));

  // Premises: private vertices on both sides; no maximum-weight chord on
  // either cycle; at most one sub-maximum chord on one of them; no shared
  // chord.
  if (!(c1.vertex_mask & ~c2.vertex_mask) || !(c2.vertex_mask & ~c1.vertex_mask)) return ctx;
  int nm1 = 0, nm2 = 0;
  for (int idx : c1.chords) {
    if (g.edge(idx).weight == c1.max_weight) return ctx;
    ++nm1;
  }
  for (int idx : c2.chords) {
    if (g.edge(idx).weight == c2.max_weight) return ctx;
    ++nm2;
  }
  if (std::min(nm1, nm2) > 1) return ctx;
  std::vector<int> shared_chords;
  std::set_intersection(c1.chords.begin(), c1.chords.end(), c2.chords.begin(), c2.chords.end(),
                        std::back_inserter(shared_chords));
  if (!shared_chords.empty()) return ctx;
  ctx.premise = true;
  return ctx;
}

std::optional<Violation> adjacent_violation(const WeightedGraph& g, const Cycle& c1,
                                            const Cycle& c2) {
  PairContext ctx = pair_context(g, c1, c2);
  if (!ctx.premise) return std::nullopt;

  auto fail = [&](const std::string& why) {
    Violation v;
    v.condition = ConditionId::adjacent_cycles;
    v.detail = "adjacent cycles " + seq_str(c1.vertices) + " / " + seq_str(c2.vertices) + ": " +
               why;
    v.witness = CyclePairWitness{c1.vertices, c2.vertices};
    return v;
  };

  std::vector<int> common_nonmax;
  for (int idx : ctx.common) {
    const Rational& w = g.edge(idx).weight;
    if (w < c1.max_weight && w < c2.max_weight) common_nonmax.push_back(idx);
  }
  if (common_nonmax.size() >= 2)
    return fail("two common sub-maximum edges " + edge_str(g, common_nonmax[0]) + ", " +
                edge_str(g, common_nonmax[1]));
  if (common_nonmax.size() == 1) {
    int e1 = common_nonmax[0];
    const Rational& w1 = g.edge(e1).weight;
    mask_t ends1 = g.edge(e1).ends();
    bool small = c1.length() == 3 || c2.length() == 3;
    for (int e2 : ctx.only_first) {
      if (g.edge(e2).weight >= c1.max_weight) continue;
      if (!(g.edge(e2).ends() & ends1)) continue;
      for (int e2p : ctx.only_second) {
        if (g.edge(e2p).weight >= c2.max_weight) continue;
        if (!(g.edge(e2p).ends() & ends1)) continue;
        if (!(g.edge(e2p).ends() & g.edge(e2).ends())) continue;
        const Rational& w2 = g.edge(e2).weight;
        const Rational& w2p = g.edge(e2p).weight;
        bool ok = small ? ((w1 == w2 && w2 >= w2p) || (w1 == w2p && w2p >= w2))
                        : (w1 == w2 && w2 == w2p);
        if (ok) return std::nullopt;
      }
    }
    return fail("unique common sub-maximum edge " + edge_str(g, e1) +
                " has no adjacent sub-maximum partners with matching weights");
  }
  return std::nullopt;
}

ConditionOutcome adjacent_impl(const WeightedGraph& g, const std::vector<Cycle>& cycles,
                               const std::vector<std::pair<int, int>>& pairs,
                               const CheckOptions& opts) {
  ConditionOutcome out;
  out.id = ConditionId::adjacent_cycles;
  Collector col{out, opts};
  for (auto [i, j] : pairs) {
    if (col.full()) {
      out.truncated = true;
      break;
    }
    if (auto v = adjacent_violation(g, cycles[i], cycles[j])) col.add(std::move(*v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reinforced cycle condition. Quantifies over every labeling whose edges at
// positions 3..m all sit at the maximum; the "resp. w_2" half of the first
// clause is produced by the mirrored labeling, so only the w_1 half is coded.

void reinforced_cycle_check(const WeightedGraph& g, const Cycle& c, Collector& col) {
  int m = c.length();
  if (m < 4) return;
  const Rational& mhat = c.max_weight;
  // (offending edge, mode, target) already reported for this cycle
  std::set<std::tuple<int, int, int>> seen;

  for (int rot = 0; rot < m; ++rot) {
    for (bool refl : {false, true}) {
      Labeling lab{&c.vertices, rot, refl};
      bool tail_max = true;
      for (int p = 3; p <= m && tail_max; ++p)
        if (edge_weight_at(g, lab, p, m) != mhat) tail_max = false;
      if (!tail_max) continue;
      Rational w1 = edge_weight_at(g, lab, 1, m);
      Rational w2 = edge_weight_at(g, lab, 2, m);
      int v1 = lab.vertex_at(1);
      int v2 = lab.vertex_at(2);
      mask_t e1_ends = bit(v1) | bit(v2);

      auto offend = [&](int p_lo, int p_hi, int mode, mask_t target, int target_id) {
        for (int p = p_lo; p <= p_hi; ++p) {
          int j = lab.vertex_at(p);
          mask_t nb = g.neighbors(j);
          while (nb) {
            int w = lowest_vertex(nb);
            nb &= nb - 1;
            int eidx = g.edge_index(j, w);
            if (linked_sets(g, g.edge(eidx).ends(), target)) continue;
            if (!seen.insert({eidx, mode, target_id}).second) continue;
            Violation v;
            v.condition = ConditionId::reinforced_cycle;
            v.detail = "cycle " + seq_str(c.vertices) + ": edge " + edge_str(g, eidx) +
                       " at interior vertex " + std::to_string(j) +
                       (mode == 0 ? " is not linked to the sub-maximum edge {" +
                                        std::to_string(v1) + "," + std::to_string(v2) + "}"
                                  : " is not linked to vertex " + std::to_string(v2));
            v.witness = CycleWitness{c.vertices};
            col.add(std::move(v));
            if (col.full()) {
              col.out.truncated = true;
              return;
            }
          }
        }
      };

      if (w1 < mhat) {
        offend(4, m - 1, 0, e1_ends, g.edge_index(v1, v2));
        if (col.full()) return;
      }
      if (w1 < mhat && w2 < mhat) {
        offend(4, m, 1, bit(v2), v2);
        if (col.full()) return;
      }
    }
  }
}

ConditionOutcome reinforced_cycle_impl(const WeightedGraph& g, const std::vector<Cycle>& cycles,
                                       const CheckOptions& opts) {
  ConditionOutcome out;
  out.id = ConditionId::reinforced_cycle;
  Collector col{out, opts};
  for (const Cycle& c : cycles) {
    if (col.full()) {
      out.truncated = true;
      break;
    }
    reinforced_cycle_check(g, c, col);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reinforced pan condition.

void reinforced_pan_check(const WeightedGraph& g, const Pan& pan, Collector& col) {
  const Cycle& c = pan.cycle;
  int m = c.length();
  if (m < 4) return;
  const Rational& mhat = c.max_weight;
  Rational q = g.edge(pan.path_edges[0]).weight;
  for (int e : pan.path_edges) q = std::min(q, g.edge(e).weight);
  if (!(q < mhat)) return;

  mask_t path_mask = 0;
  for (int v : pan.path_vertices) path_mask |= bit(v);

  for (int rot = 0; rot < m; ++rot) {
    for (bool refl : {false, true}) {
      Labeling lab{&c.vertices, rot, refl};
      if (lab.vertex_at(2) != pan.attach) continue;
      bool tail_max = true;
      for (int p = 3; p <= m && tail_max; ++p)
        if (edge_weight_at(g, lab, p, m) != mhat) tail_max = false;
      if (!tail_max) continue;
      Rational w1 = edge_weight_at(g, lab, 1, m);
      Rational w2 = edge_weight_at(g, lab, 2, m);
      if (w2 < w1) continue;

      if (q < w1) {
        for (int p = 4; p <= m; ++p) {
          int j = lab.vertex_at(p);
          if (!(g.neighbors(j) & path_mask)) {
            Violation v;
            v.condition = ConditionId::reinforced_pan;
            v.detail = "pan (cycle " + seq_str(c.vertices) + ", path " +
                       seq_str(pan.path_vertices) + "): vertex " + std::to_string(j) +
                       " has no edge into the path";
            v.witness = PanWitness{c.vertices, pan.path_vertices};
            col.add(std::move(v));
            if (col.full()) {
              col.out.truncated = true;
              return;
            }
          } else if (w1 < mhat && !g.has_edge(j, pan.attach)) {
            Violation v;
            v.condition = ConditionId::reinforced_pan;
            v.detail = "pan (cycle " + seq_str(c.vertices) + ", path " +
                       seq_str(pan.path_vertices) + "): vertex " + std::to_string(j) +
                       " is not linked to the attach vertex " + std::to_string(pan.attach);
            v.witness = PanWitness{c.vertices, pan.path_vertices};
            col.add(std::move(v));
            if (col.full()) {
              col.out.truncated = true;
              return;
            }
          }
        }
      }
      return;  // any further valid labeling imposes the same obligations
    }
  }
}

ConditionOutcome reinforced_pan_impl(const WeightedGraph& g, const std::vector<Pan>& pans,
                                     const CheckOptions& opts) {
  ConditionOutcome out;
  out.id = ConditionId::reinforced_pan;
  Collector col{out, opts};
  for (const Pan& p : pans) {
    if (col.full()) {
      out.truncated = true;
      break;
    }
    reinforced_pan_check(g, p, col);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reinforced adjacent cycles condition. Two shapes demand an edge between the
// private vertex sets: C4 pairs with both shared edges sub-maximum, and C5
// pairs glued along a three-edge path whose middle edge is the unique common
// sub-maximum edge (with neither interior vertex adjacent to both apexes).

std::optional<Violation> reinforced_adjacent_violation(const WeightedGraph& g, const Cycle& c1,
                                                       const Cycle& c2) {
  std::vector<int> e1 = c1.cycle_edges;
  std::vector<int> e2 = c2.cycle_edges;
  std::sort(e1.begin(), e1.end());
  std::sort(e2.begin(), e2.end());
  std::vector<int> common;
  std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(common));

  auto nonmax_both = [&](int idx) {
    const Rational& w = g.edge(idx).weight;
    return w < c1.max_weight && w < c2.max_weight;
  };
  auto max_both = [&](int idx) {
    const Rational& w = g.edge(idx).weight;
    return w == c1.max_weight && w == c2.max_weight;
  };
  auto fail = [&](const std::string& why) {
    Violation v;
    v.condition = ConditionId::reinforced_adjacent_cycles;
    v.detail = "adjacent cycles " + seq_str(c1.vertices) + " / " + seq_str(c2.vertices) + ": " +
               why;
    v.witness = CyclePairWitness{c1.vertices, c2.vertices};
    return v;
  };

  if (c1.length() == 4 && c2.length() == 4 && common.size() == 2 && nonmax_both(common[0]) &&
      nonmax_both(common[1])) {
    mask_t only1 = c1.vertex_mask & ~c2.vertex_mask;
    mask_t only2 = c2.vertex_mask & ~c1.vertex_mask;
    bool linked = false;
    mask_t scan = only1;
    while (scan && !linked) {
      int v = lowest_vertex(scan);
      scan &= scan - 1;
      if (g.neighbors(v) & only2) linked = true;
    }
    if (!linked)
      return fail("both shared edges are sub-maximum but no edge joins the private vertices");
    return std::nullopt;
  }

  if (c1.length() == 5 && c2.length() == 5 && common.size() == 3) {
    // The three shared edges must chain into a path; order them by walking.
    mask_t deg1 = 0, deg2plus = 0;
    for (int idx : common) {
      mask_t ends = g.edge(idx).ends();
      deg2plus |= deg1 & ends;
      deg1 |= ends;
    }
    mask_t endpoints = deg1 & ~deg2plus;
    if (popcount(endpoints) != 2 || popcount(deg2plus) != 2) return std::nullopt;
    // Middle edge: both endpoints interior.
    int mid = -1;
    for (int idx : common)
      if ((g.edge(idx).ends() & deg2plus) == g.edge(idx).ends()) mid = idx;
    if (mid < 0) return std::nullopt;
    if (!nonmax_both(mid)) return std::nullopt;
    for (int idx : common)
      if (idx != mid && !max_both(idx)) return std::nullopt;

    mask_t only1 = c1.vertex_mask & ~c2.vertex_mask;
    mask_t only2 = c2.vertex_mask & ~c1.vertex_mask;
    if (popcount(only1) != 1 || popcount(only2) != 1) return std::nullopt;
    int y1 = lowest_vertex(only1);
    int y2 = lowest_vertex(only2);
    int x1 = g.edge(mid).u;
    int x2 = g.edge(mid).v;
    bool both_at_x1 = g.has_edge(y1, x1) && g.has_edge(y2, x1);
    bool both_at_x2 = g.has_edge(y1, x2) && g.has_edge(y2, x2);
    if (both_at_x1 || both_at_x2) return std::nullopt;
    if (!g.has_edge(y1, y2))
      return fail("shared three-edge path has a sub-maximum middle edge " + edge_str(g, mid) +
                  " but the private vertices " + std::to_string(y1) + ", " + std::to_string(y2) +
                  " are not joined");
    return std::nullopt;
  }

  return std::nullopt;
}

ConditionOutcome reinforced_adjacent_impl(const WeightedGraph& g,
                                          const std::vector<Cycle>& cycles,
                                          const std::vector<std::pair<int, int>>& pairs,
                                          const CheckOptions& opts) {
  ConditionOutcome out;
  out.id = ConditionId::reinforced_adjacent_cycles;
  Collector col{out, opts};
  for (auto [i, j] : pairs) {
    if (col.full()) {
      out.truncated = true;
      break;
    }
    if (auto v = reinforced_adjacent_violation(g, cycles[i], cycles[j])) col.add(std::move(*v));
  }
  return out;
}

}  // namespace

ConditionOutcome check_star(const WeightedGraph& g, const CheckOptions& opts) {
  return star_impl(g, enumerate_stars(g), opts);
}

ConditionOutcome check_path(const WeightedGraph& g, const CheckOptions& opts) {
  return path_impl(g, enumerate_paths(g, 3, opts.limits), opts);
}

ConditionOutcome check_cycle(const WeightedGraph& g, const CheckOptions& opts) {
  return cycle_impl(g, enumerate_cycles(g, opts.limits), opts);
}

ConditionOutcome check_pan(const WeightedGraph& g, const CheckOptions& opts) {
  return pan_impl(g, enumerate_pans(g, opts.limits), opts);
}

ConditionOutcome check_adjacent_cycles(const WeightedGraph& g, const CheckOptions& opts) {
  auto cycles = enumerate_cycles(g, opts.limits);
  auto pairs = adjacent_cycle_pairs(cycles, opts.limits);
  return adjacent_impl(g, cycles, pairs, opts);
}

ConditionOutcome check_reinforced_cycle(const WeightedGraph& g, const CheckOptions& opts) {
  return reinforced_cycle_impl(g, enumerate_cycles(g, opts.limits), opts);
}

ConditionOutcome check_reinforced_pan(const WeightedGraph& g, const CheckOptions& opts) {
  return reinforced_pan_impl(g, enumerate_pans(g, opts.limits), opts);
}

ConditionOutcome check_reinforced_adjacent_cycles(const WeightedGraph& g,
                                                  const CheckOptions& opts) {
  auto cycles = enumerate_cycles(g, opts.limits);
  auto pairs = adjacent_cycle_pairs(cycles, opts.limits);
  return reinforced_adjacent_impl(g, cycles, pairs, opts);
}

ConditionReport check_all(const WeightedGraph& g, const CheckOptions& opts) {
  ConditionReport report;
  report.outcomes.resize(kAllConditions.size());

  auto capped = [&](ConditionId id, const std::string& msg) {
    ConditionOutcome out;
    out.id = id;
    out.pass = false;
    out.capped = true;
    out.cap_message = msg;
    report.outcomes[static_cast<std::size_t>(id)] = std::move(out);
    report.caps_hit = true;
  };
  auto place = [&](ConditionOutcome out) {
    report.outcomes[static_cast<std::size_t>(out.id)] = std::move(out);
  };

  auto stars = enumerate_stars(g);
  report.stats.stars = stars.size();
  place(star_impl(g, stars, opts));

  try {
    auto paths = enumerate_paths(g, 3, opts.limits);
    report.stats.paths = paths.size();
    place(path_impl(g, paths, opts));
  } catch (const resource_limit_error& e) {
    capped(ConditionId::path, e.what());
  }

  std::vector<Cycle> cycles;
  bool have_cycles = false;
  try {
    cycles = enumerate_cycles(g, opts.limits);
    report.stats.cycles = cycles.size();
    have_cycles = true;
  } catch (const resource_limit_error& e) {
    for (ConditionId id : {ConditionId::cycle, ConditionId::pan, ConditionId::adjacent_cycles,
                           ConditionId::reinforced_cycle, ConditionId::reinforced_pan,
                           ConditionId::reinforced_adjacent_cycles})
      capped(id, e.what());
  }

  if (have_cycles) {
    place(cycle_impl(g, cycles, opts));
    place(reinforced_cycle_impl(g, cycles, opts));

    try {
      auto pairs = adjacent_cycle_pairs(cycles, opts.limits);
      report.stats.cycle_pairs = pairs.size();
      place(adjacent_impl(g, cycles, pairs, opts));
      place(reinforced_adjacent_impl(g, cycles, pairs, opts));
    } catch (const resource_limit_error& e) {
      capped(ConditionId::adjacent_cycles, e.what());
      capped(ConditionId::reinforced_adjacent_cycles, e.what());
    }

    try {
      auto pans = enumerate_pans(g, opts.limits);
      report.stats.pans = pans.size();
      place(pan_impl(g, pans, opts));
      place(reinforced_pan_impl(g, pans, opts));
    } catch (const resource_limit_error& e) {
      capped(ConditionId::pan, e.what());
      capped(ConditionId::reinforced_pan, e.what());
    }
  }

  return report;
}

Cycle build_cycle(const WeightedGraph& g, const std::vector<int>& vertices) {
  int m = static_cast<int>(vertices.size());
  if (m < 3) throw std::invalid_argument("build_cycle: need at least 3 vertices");
  mask_t seen = 0;
  for (int v : vertices) {
    if (v < 0 || v >= g.vertex_count() || contains(seen, v))
      throw std::invalid_argument("build_cycle: vertices must be distinct and in range");
    seen |= bit(v);
  }
  Cycle c;
  c.vertices = vertices;
  c.vertex_mask = seen;
  for (int k = 0; k < m; ++k) {
    int idx = g.edge_index(vertices[k], vertices[(k + 1) % m]);
    if (idx < 0) throw std::invalid_argument("build_cycle: missing cycle edge");
    c.cycle_edges.push_back(idx);
  }
  std::vector<int> pos(g.vertex_count(), -1);
  for (int k = 0; k < m; ++k) pos[vertices[k]] = k;
  for (int k = 0; k < m; ++k) {
    mask_t others = g.neighbors(vertices[k]) & c.vertex_mask;
    while (others) {
      int w = lowest_vertex(others);
      others &= others - 1;
      if (w <= vertices[k]) continue;
      int dk = pos[w] - k;
      if (dk < 0) dk += m;
      if (dk == 1 || dk == m - 1) continue;
      c.chords.push_back(g.edge_index(vertices[k], w));
    }
  }
  std::sort(c.chords.begin(), c.chords.end());
  c.max_weight = g.edge(c.cycle_edges[0]).weight;
  for (int e : c.cycle_edges) c.max_weight = std::max(c.max_weight, g.edge(e).weight);
  for (int e : c.chords) c.max_weight = std::max(c.max_weight, g.edge(e).weight);
  return c;
}

bool violation_replays(const WeightedGraph& g, const Violation& violation) {
  switch (violation.condition) {
    case ConditionId::star: {
      const auto& w = std::get<StarWitness>(violation.witness);
      return star_violation(g, Star{w.center, w.edges[0], w.edges[1], w.edges[2]}).has_value();
    }
    case ConditionId::path: {
      const auto& w = std::get<PathWitness>(violation.witness);
      auto weight_at = [&](int p) {
        return g.weight(w.vertices[p], w.vertices[p + 1]);
      };
      return weight_at(w.j) > weight_at(w.i) && weight_at(w.j) > weight_at(w.k);
    }
    case ConditionId::cycle: {
      const auto& w = std::get<CycleWitness>(violation.witness);
      return cycle_violation(g, build_cycle(g, w.vertices)).has_value();
    }
    case ConditionId::pan:
    case ConditionId::reinforced_pan: {
      const auto& w = std::get<PanWitness>(violation.witness);
      Pan pan;
      pan.cycle = build_cycle(g, w.cycle_vertices);
      pan.path_vertices = w.path_vertices;
      pan.attach = w.path_vertices.front();
      for (std::size_t i = 0; i + 1 < w.path_vertices.size(); ++i)
        pan.path_edges.push_back(g.edge_index(w.path_vertices[i], w.path_vertices[i + 1]));
      if (violation.condition == ConditionId::pan) return pan_violation(g, pan).has_value();
      ConditionOutcome out;
      out.id = ConditionId::reinforced_pan;
      CheckOptions opts;
      Collector col{out, opts};
      reinforced_pan_check(g, pan, col);
      return !out.pass;
    }
    case ConditionId::adjacent_cycles: {
      const auto& w = std::get<CyclePairWitness>(violation.witness);
      return adjacent_violation(g, build_cycle(g, w.first), build_cycle(g, w.second)).has_value();
    }
    case ConditionId::reinforced_cycle: {
      const auto& w = std::get<CycleWitness>(violation.witness);
      ConditionOutcome out;
      out.id = ConditionId::reinforced_cycle;
      CheckOptions opts;
      Collector col{out, opts};
      reinforced_cycle_check(g, build_cycle(g, w.vertices), col);
      return !out.pass;
    }
    case ConditionId::reinforced_adjacent_cycles: {
      const auto& w = std::get<CyclePairWitness>(violation.witness);
      return reinforced_adjacent_violation(g, build_cycle(g, w.first), build_cycle(g, w.second))
          .has_value();
    }
  }
  return false;
}

}  // namespace gridlock
