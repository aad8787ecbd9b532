#include "gridlock/game.hpp"

#include <random>

namespace gridlock {

bool is_zero_normalized(const Game& v) {
  for (int i = 0; i < v.player_count(); ++i)
    if (!v.value(bit(i)).is_zero()) return false;
  return true;
}

TableGame restricted_game(const WeightedGraph& g, CorrespondenceKind kind, const Game& v) {
  if (v.player_count() != g.vertex_count())
    throw std::invalid_argument("restricted_game: game and graph sizes differ");
  int n = g.vertex_count();
  if (n > kMaxTablePlayers)
    throw resource_limit_error("restricted_game: player count exceeds dense-table cap");
  std::vector<Rational> table(std::size_t{1} << n);
  for (mask_t a = 1; a < table.size(); ++a) {
    Rational sum = 0;
    for (mask_t block : apply_correspondence(g, kind, a).blocks) sum += v.value(block);
    table[a] = sum;
  }
  return TableGame(n, std::move(table));
}

Rational hat_via_components(const WeightedGraph& g, const Game& v, mask_t a) {
  Rational sum = 0;
  for (mask_t comp : connected_components(g, a)) {
    for (mask_t block : p_min(g, comp).blocks) sum += v.value(block);
  }
  return sum;
}

namespace {

// Seeded draws go through the raw mt19937_64 stream, not
// std::uniform_int_distribution, so corpora are reproducible across
// standard library implementations.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t k) { return rng() % k; }

mask_t draw_nonempty_subset(std::mt19937_64& rng, int n) {
  mask_t full = full_mask(n);
  for (;;) {
    mask_t s = static_cast<mask_t>(rng()) & full;
    if (s) return s;
  }
}

}  // namespace

CombinationGame sample_convex_game(int n, std::uint64_t seed, int term_count) {
  if (term_count < 1) throw std::invalid_argument("sample_convex_game: need at least one term");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Rational, mask_t>> terms;
  terms.reserve(term_count);
  for (int t = 0; t < term_count; ++t) {
    Rational coeff(static_cast<std::int64_t>(draw_below(rng, 5)),
                   static_cast<std::int64_t>(draw_below(rng, 3)) + 1);
    terms.emplace_back(coeff, draw_nonempty_subset(rng, n));
  }
  return CombinationGame(n, std::move(terms));
}

TableGame sample_superadditive_game(int n, std::uint64_t seed) {
  if (n > kMaxTablePlayers)
    throw resource_limit_error("sample_superadditive_game: player count exceeds cap");
  std::mt19937_64 rng(seed);
  std::size_t size = std::size_t{1} << n;
  std::vector<Rational> base(size);
  for (mask_t a = 1; a < size; ++a) base[a] = static_cast<std::int64_t>(draw_below(rng, 10));
  // Superadditive cover: best split over all sub/complement pairs.
  std::vector<Rational> v(size);
  for (mask_t a = 1; a < size; ++a) {
    Rational best = base[a];
    for (mask_t s = (a - 1) & a; s; s = (s - 1) & a) {
      Rational split = v[s] + v[a & ~s];
      if (best < split) best = split;
    }
    v[a] = best;
  }
  return TableGame(n, std::move(v));
}

TableGame sample_table_game(int n, std::uint64_t seed, int range) {
  if (n > kMaxTablePlayers)
    throw resource_limit_error("sample_table_game: player count exceeds cap");
  std::mt19937_64 rng(seed);
  std::size_t size = std::size_t{1} << n;
  std::vector<Rational> table(size);
  for (mask_t a = 1; a < size; ++a)
    table[a] = static_cast<std::int64_t>(draw_below(rng, 2 * range + 1)) - range;
  return TableGame(n, std::move(table));
}

}  // namespace gridlock
