#include "gridlock/convexity.hpp"

namespace gridlock {

namespace {

void require_desk_scale(const Game& v, const char* who) {
  if (v.player_count() > kMaxTablePlayers)
    throw resource_limit_error(std::string(who) + ": player count exceeds exhaustive-check cap");
}

}  // namespace

Family Family::all_nonempty(int n) { return Family(n, {}); }

Family Family::connected(const WeightedGraph& g) {
  int n = g.vertex_count();
  if (n > kMaxTablePlayers)
    throw resource_limit_error("connected family: player count exceeds table cap");
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  for (mask_t a = 1; a < table.size(); ++a) table[a] = is_connected_subset(g, a) ? 1 : 0;
  return Family(n, std::move(table));
}

CheckResult is_superadditive(const Game& v) {
  require_desk_scale(v, "is_superadditive");
  mask_t full = full_mask(v.player_count());
  for (mask_t a = 1; a <= full; ++a) {
    Rational va = v.value(a);
    mask_t rest = full & ~a;
    for (mask_t b = 1; b <= rest; ++b) {
      if ((b & rest) != b) continue;
      if (v.value(a | b) < va + v.value(b)) return {false, PairWitness{a, b}};
    }
  }
  return {true, std::nullopt};
}

CheckResult is_convex(const Game& v) {
  require_desk_scale(v, "is_convex");
  int n = v.player_count();
  mask_t full = full_mask(n);
  for (mask_t a = 0; a < full; ++a) {
    mask_t outside = full & ~a;
    Rational vbase = v.value(a);
    for (int i = 0; i < n; ++i) {
      if (!contains(outside, i)) continue;
      mask_t ai = a | bit(i);
      Rational vi = v.value(ai);
      for (int j = i + 1; j < n; ++j) {
        if (!contains(outside, j)) continue;
        mask_t aj = a | bit(j);
        if (vi + v.value(aj) > v.value(ai | aj) + vbase) return {false, PairWitness{ai, aj}};
      }
    }
  }
  return {true, std::nullopt};
}

CheckResult is_f_convex(const Game& v, const Family& fam) {
  require_desk_scale(v, "is_f_convex");
  mask_t full = full_mask(v.player_count());
  for (mask_t a = 1; a <= full; ++a) {
    if (!fam.contains(a)) continue;
    Rational va = v.value(a);
    for (mask_t b = a + 1; b <= full; ++b) {
      if (!fam.contains(b)) continue;
      mask_t cut = a & b;
      if (cut == a || cut == b) continue;  // nested pairs are trivial
      if (!fam.contains(cut)) continue;
      if (v.value(a | b) + v.value(cut) < va + v.value(b)) return {false, PairWitness{a, b}};
    }
  }
  return {true, std::nullopt};
}

DerivativeCheckResult is_f_convex_derivative(const Game& v, const WeightedGraph& g) {
  int n = g.vertex_count();
  if (v.player_count() != n)
    throw std::invalid_argument("is_f_convex_derivative: game and graph sizes differ");
  require_desk_scale(v, "is_f_convex_derivative");
  Family fam = Family::connected(g);
  for (int i = 0; i < n; ++i) {
    mask_t ground = full_mask(n) & ~bit(i);
    // All A subseteq B subseteq N minus {i}: enumerate B, then submasks A.
    for (mask_t b = ground; b; b = (b - 1) & ground) {
      if (!fam.contains(b)) continue;
      Rational db = derivative(v, b, i);
      for (mask_t a = b; a; a = (a - 1) & b) {
        if (!fam.contains(a) || !fam.contains(a | bit(i))) continue;
        if (db < derivative(v, a, i)) return {false, DerivativeWitness{i, a, b}};
      }
    }
  }
  return {true, std::nullopt};
}

bool partition_supermodular_inequality(const Game& v, mask_t a, mask_t b,
                                       const Partition& parts_of_b, const Family& fam) {
  if (parts_of_b.carrier != b)
    throw std::domain_error("partition inequality: parts must partition B");
  if (!fam.contains(a)) throw std::domain_error("partition inequality: A outside family");
  Rational lhs = v.value(a | b);
  Rational rhs = v.value(a);
  for (mask_t block : parts_of_b.blocks) {
    if (!fam.contains(block) || !fam.contains(a & block))
      throw std::domain_error("partition inequality: block or A&block outside family");
    lhs += v.value(a & block);
    rhs += v.value(block);
  }
  return lhs >= rhs;
}

}  // namespace gridlock
