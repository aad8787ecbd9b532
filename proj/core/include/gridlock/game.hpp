#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "gridlock/errors.hpp"
#include "gridlock/partition.hpp"

namespace gridlock {

// Characteristic function v : 2^N -> Q with v(empty) = 0.
class Game {
 public:
  virtual ~Game() = default;
  int player_count() const { return n_; }
  virtual Rational value(mask_t coalition) const = 0;

 protected:
  explicit Game(int n) : n_(n) {
    if (n < 0 || n > kMaxPlayers) throw std::out_of_range("game: player count out of range");
  }

 private:
  int n_;
};

// Largest n for which dense 2^n tables are materialized.
inline constexpr int kMaxTablePlayers = 20;

class TableGame final : public Game {
 public:
  TableGame(int n, std::vector<Rational> table) : Game(n), table_(std::move(table)) {
    if (n > kMaxTablePlayers)
      throw resource_limit_error("table game: player count exceeds dense-table cap");
    if (table_.size() != (std::size_t{1} << n))
      throw std::invalid_argument("table game: table must have 2^n entries");
    if (!table_[0].is_zero()) throw std::invalid_argument("table game: v(empty) must be 0");
  }

  Rational value(mask_t a) const override { return table_[a]; }
  const std::vector<Rational>& table() const { return table_; }

 private:
  std::vector<Rational> table_;
};

// u_S: worth 1 exactly on coalitions containing S.
class UnanimityGame final : public Game {
 public:
  UnanimityGame(int n, mask_t s) : Game(n), s_(s) {
    if (s == 0) throw std::invalid_argument("unanimity game: S must be nonempty");
    if (s & ~full_mask(n)) throw std::out_of_range("unanimity game: S outside universe");
  }

  Rational value(mask_t a) const override { return (a & s_) == s_ ? 1 : 0; }
  mask_t required() const { return s_; }

 private:
  mask_t s_;
};

// Linear combination of unanimity games. Nonnegative coefficients give a
// supermodular (hence superadditive) game; general coefficients are allowed.
class CombinationGame final : public Game {
 public:
  CombinationGame(int n, std::vector<std::pair<Rational, mask_t>> terms)
      : Game(n), terms_(std::move(terms)) {
    for (auto& [coeff, s] : terms_) {
      (void)coeff;
      if (s == 0) throw std::invalid_argument("combination game: empty S in term");
      if (s & ~full_mask(n)) throw std::out_of_range("combination game: S outside universe");
    }
  }

  Rational value(mask_t a) const override {
    Rational sum = 0;
    for (const auto& [coeff, s] : terms_)
      if ((a & s) == s) sum += coeff;
    return sum;
  }
  const std::vector<std::pair<Rational, mask_t>>& terms() const { return terms_; }

 private:
  std::vector<std::pair<Rational, mask_t>> terms_;
};

// Delta v(A,B) = v(A|B) + v(A&B) - v(A) - v(B).
inline Rational delta(const Game& v, mask_t a, mask_t b) {
  return v.value(a | b) + v.value(a & b) - v.value(a) - v.value(b);
}

// Marginal contribution of player i at A. Requires i outside A.
inline Rational derivative(const Game& v, mask_t a, int i) {
  if (contains(a, i)) throw std::domain_error("derivative: i must lie outside A");
  return v.value(a | bit(i)) - v.value(a);
}

bool is_zero_normalized(const Game& v);

// Sum of v over the blocks of the correspondence at A, for every A.
TableGame restricted_game(const WeightedGraph& g, CorrespondenceKind kind, const Game& v);

// Sum of pmin-restricted values over the connected components of A; equal to
// the tpmin-restricted value by construction.
Rational hat_via_components(const WeightedGraph& g, const Game& v, mask_t a);

// Seeded sampler: nonnegative integer coefficients over random nonempty S.
// The result is convex and superadditive by construction. term_count >= 1.
CombinationGame sample_convex_game(int n, std::uint64_t seed, int term_count);

// Seeded sampler via the superadditive cover of a random nonnegative base:
// v(A) = max over partitions {P_1..P_k} of A of sum_i base(P_i). Superadditive
// by construction, generically not convex.
TableGame sample_superadditive_game(int n, std::uint64_t seed);

// Seeded uniform random table with v(empty) = 0 (integer values in
// [-range, range]). No structure guaranteed.
TableGame sample_table_game(int n, std::uint64_t seed, int range = 8);

}  // namespace gridlock
