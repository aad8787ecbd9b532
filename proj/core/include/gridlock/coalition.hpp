#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridlock {

// Vertex subsets are bitmasks over at most 32 players.
using mask_t = std::uint32_t;

inline constexpr int kMaxPlayers = 32;

inline int popcount(mask_t m) { return std::popcount(m); }
inline mask_t bit(int v) { return mask_t{1} << v; }
inline bool contains(mask_t m, int v) { return (m >> v) & 1u; }
inline mask_t full_mask(int n) {
  return n == kMaxPlayers ? ~mask_t{0} : (mask_t{1} << n) - 1;
}
inline int lowest_vertex(mask_t m) { return std::countr_zero(m); }

inline std::vector<int> mask_to_vertices(mask_t m) {
  std::vector<int> out;
  while (m) {
    int v = std::countr_zero(m);
    out.push_back(v);
    m &= m - 1;
  }
  return out;
}

inline mask_t vertices_to_mask(const std::vector<int>& vs, int n) {
  mask_t m = 0;
  for (int v : vs) {
    if (v < 0 || v >= n) throw std::out_of_range("vertex id out of range");
    m |= bit(v);
  }
  return m;
}

// A coalition: subset of the player universe [0, n).
struct Coalition {
  mask_t bits = 0;
  int n = 0;

  Coalition() = default;
  Coalition(mask_t bits, int n) : bits(bits), n(n) {
    if (n < 0 || n > kMaxPlayers) throw std::out_of_range("universe size out of range");
    if (bits & ~full_mask(n)) throw std::out_of_range("coalition member outside universe");
  }

  bool empty() const { return bits == 0; }
  int size() const { return popcount(bits); }
  bool has(int v) const { return contains(bits, v); }
  std::vector<int> members() const { return mask_to_vertices(bits); }

  friend bool operator==(const Coalition& a, const Coalition& b) {
    return a.bits == b.bits && a.n == b.n;
  }
  friend bool operator<(const Coalition& a, const Coalition& b) { return a.bits < b.bits; }
};

inline std::string mask_to_string(mask_t m) {
  std::string s = "{";
  bool first = true;
  for (int v : mask_to_vertices(m)) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

}  // namespace gridlock
