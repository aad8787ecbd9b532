#pragma once

#include <vector>

#include "gridlock/graph.hpp"

namespace gridlock {

enum class CorrespondenceKind { components, pmin, tpmin };

const char* to_string(CorrespondenceKind kind);

// Disjoint nonempty blocks covering the carrier. The empty coalition is the
// empty partition (no blocks). Blocks are kept sorted by smallest member, so
// equality is plain structural equality.
struct Partition {
  mask_t carrier = 0;
  std::vector<mask_t> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  friend bool operator==(const Partition& a, const Partition& b) {
    return a.carrier == b.carrier && a.blocks == b.blocks;
  }
};

Partition make_partition(mask_t carrier, std::vector<mask_t> blocks);

// Connected components of G_A.
Partition p_components(const WeightedGraph& g, mask_t a);

// Connected components of (A, E(A) minus its minimum-weight edges);
// singletons when E(A) is empty.
Partition p_min(const WeightedGraph& g, mask_t a);

// p_min applied within each connected component of G_A.
Partition tilde_p_min(const WeightedGraph& g, mask_t a);

Partition apply_correspondence(const WeightedGraph& g, CorrespondenceKind kind, mask_t a);

// { F intersect A : F in P, nonempty }. Requires A subseteq carrier.
Partition restrict_partition(const Partition& p, mask_t a);

// True iff every block of p lies inside some block of q. Carriers must match.
bool is_refinement(const Partition& p, const Partition& q);

// All pairwise nonempty block intersections; carrier is the intersection of
// the carriers.
Partition intersection_partition(const Partition& p, const Partition& q);

}  // namespace gridlock
