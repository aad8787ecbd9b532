#include "gridlock/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace gridlock {

const char* to_string(CorrespondenceKind kind) {
  switch (kind) {
    case CorrespondenceKind::components: return "components";
    case CorrespondenceKind::pmin: return "pmin";
    case CorrespondenceKind::tpmin: return "tpmin";
  }
  return "?";
}

Partition make_partition(mask_t carrier, std::vector<mask_t> blocks) {
  Partition p;
  p.carrier = carrier;
  p.blocks = std::move(blocks);
  mask_t seen = 0;
  for (mask_t b : p.blocks) {
    if (b == 0) throw std::invalid_argument("partition: empty block");
    if (seen & b) throw std::invalid_argument("partition: overlapping blocks");
    seen |= b;
  }
  if (seen != carrier) throw std::invalid_argument("partition: blocks must cover the carrier");
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](mask_t a, mask_t b) { return lowest_vertex(a) < lowest_vertex(b); });
  return p;
}

Partition p_components(const WeightedGraph& g, mask_t a) {
  Partition p;
  p.carrier = a;
  p.blocks = connected_components(g, a);
  return p;
}

namespace {

// Components of (A, E(A) minus Sigma(A)) appended onto out.
void pmin_blocks(const WeightedGraph& g, mask_t a, std::vector<mask_t>& out) {
  std::optional<Rational> s = sigma(g, a);
  if (!s) {
    // No internal edge: every member stands alone.
    mask_t rest = a;
    while (rest) {
      out.push_back(bit(lowest_vertex(rest)));
      rest &= rest - 1;
    }
    return;
  }
  // Adjacency restricted to A using only edges strictly above the minimum.
  std::vector<mask_t> adj(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    if ((e.ends() & a) != e.ends()) continue;
    if (e.weight == *s) continue;
    adj[e.u] |= bit(e.v);
    adj[e.v] |= bit(e.u);
  }
  mask_t remaining = a;
  while (remaining) {
    mask_t comp = bit(lowest_vertex(remaining));
    for (;;) {
      mask_t grown = comp;
      mask_t scan = comp;
      while (scan) {
        int v = lowest_vertex(scan);
        scan &= scan - 1;
        grown |= adj[v];
      }
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(comp);
    remaining &= ~comp;
  }
}

}  // namespace

Partition p_min(const WeightedGraph& g, mask_t a) {
  Partition p;
  p.carrier = a;
  pmin_blocks(g, a, p.blocks);
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](mask_t x, mask_t y) { return lowest_vertex(x) < lowest_vertex(y); });
  return p;
}

Partition tilde_p_min(const WeightedGraph& g, mask_t a) {
  Partition p;
  p.carrier = a;
  for (mask_t comp : connected_components(g, a)) pmin_blocks(g, comp, p.blocks);
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](mask_t x, mask_t y) { return lowest_vertex(x) < lowest_vertex(y); });
  return p;
}

Partition apply_correspondence(const WeightedGraph& g, CorrespondenceKind kind, mask_t a) {
  switch (kind) {
    case CorrespondenceKind::components: return p_components(g, a);
    case CorrespondenceKind::pmin: return p_min(g, a);
    case CorrespondenceKind::tpmin: return tilde_p_min(g, a);
  }
  throw std::logic_error("unknown correspondence");
}

Partition restrict_partition(const Partition& p, mask_t a) {
  if (a & ~p.carrier) throw std::domain_error("restrict_partition: A must lie in the carrier");
  Partition out;
  out.carrier = a;
  for (mask_t b : p.blocks) {
    mask_t cut = b & a;
    if (cut) out.blocks.push_back(cut);
  }
  // Blocks inherit the sorted-by-lowest-member order.
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](mask_t x, mask_t y) { return lowest_vertex(x) < lowest_vertex(y); });
  return out;
}

bool is_refinement(const Partition& p, const Partition& q) {
  if (p.carrier != q.carrier) throw std::domain_error("is_refinement: carrier mismatch");
  for (mask_t b : p.blocks) {
    bool inside = false;
    for (mask_t c : q.blocks) {
      if ((b & c) == b) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

Partition intersection_partition(const Partition& p, const Partition& q) {
  Partition out;
  out.carrier = p.carrier & q.carrier;
  for (mask_t a : p.blocks)
    for (mask_t b : q.blocks) {
      mask_t cut = a & b;
      if (cut) out.blocks.push_back(cut);
    }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](mask_t x, mask_t y) { return lowest_vertex(x) < lowest_vertex(y); });
  return out;
}

}  // namespace gridlock
