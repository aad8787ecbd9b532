#pragma once

#include <optional>

#include "gridlock/game.hpp"

namespace gridlock {

// A weakly union-closed family of nonempty coalitions: either all nonempty
// subsets, or the connected subsets of a graph. The connected variant
// precomputes a membership table, so construct once and reuse.
class Family {
 public:
  static Family all_nonempty(int n);
  static Family connected(const WeightedGraph& g);

  bool contains(mask_t a) const {
    if (a == 0) return false;
    return table_.empty() ? true : table_[a] != 0;
  }
  int player_count() const { return n_; }
  bool is_connected_family() const { return !table_.empty(); }

 private:
  Family(int n, std::vector<std::uint8_t> table) : n_(n), table_(std::move(table)) {}
  int n_;
  std::vector<std::uint8_t> table_;  // empty means "all nonempty subsets"
};

struct PairWitness {
  mask_t a = 0;
  mask_t b = 0;
};

struct CheckResult {
  bool holds = true;
  std::optional<PairWitness> witness;  // first violating pair in scan order
};

// Marginal-contribution triple: derivative of player at `small` exceeds the
// derivative at `large`, small subseteq large.
struct DerivativeWitness {
  int player = 0;
  mask_t small = 0;
  mask_t large = 0;
};

struct DerivativeCheckResult {
  bool holds = true;
  std::optional<DerivativeWitness> witness;
};

// v(A|B) >= v(A) + v(B) over all disjoint pairs; witness is a violating pair.
CheckResult is_superadditive(const Game& v);

// Supermodularity. The scan uses the local exchange form
// v(A|i) + v(A|j) <= v(A|i|j) + v(A); the reported witness is the genuine
// pair (A|i, A|j) with delta < 0.
CheckResult is_convex(const Game& v);

// Delta v(A,B) >= 0 over A, B in the family with A & B in the family.
CheckResult is_f_convex(const Game& v, const Family& fam);

// Derivative form over the connected family: for every player i and
// connected A subseteq B avoiding i with A|{i} connected, the marginal
// contribution at B dominates the one at A. Equivalent verdict to
// is_f_convex with the connected family; kept independent as a cross-check.
DerivativeCheckResult is_f_convex_derivative(const Game& v, const WeightedGraph& g);

// v(A|B) + sum_i v(A & B_i) >= v(A) + sum_i v(B_i) for a partition
// {B_i} of B. Preconditions: A, every B_i, and every A & B_i lie in the
// family (throws std::domain_error otherwise). Holds whenever v is F-convex.
bool partition_supermodular_inequality(const Game& v, mask_t a, mask_t b,
                                       const Partition& parts_of_b, const Family& fam);

}  // namespace gridlock
