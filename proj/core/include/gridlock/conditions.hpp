#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "gridlock/enumerate.hpp"

namespace gridlock {

enum class ConditionId {
  star,
  path,
  cycle,
  pan,
  adjacent_cycles,
  reinforced_cycle,
  reinforced_pan,
  reinforced_adjacent_cycles,
};

inline constexpr std::array<ConditionId, 8> kAllConditions = {
    ConditionId::star,          ConditionId::path,
    ConditionId::cycle,         ConditionId::pan,
    ConditionId::adjacent_cycles, ConditionId::reinforced_cycle,
    ConditionId::reinforced_pan, ConditionId::reinforced_adjacent_cycles,
};

const char* to_string(ConditionId id);

// Structured witnesses; every violation re-verifies when replayed through
// violation_replays.
struct StarWitness {
  int center = 0;
  std::array<int, 3> edges{};  // edge indices
};
struct PathWitness {
  std::vector<int> vertices;
  int i = 0, j = 0, k = 0;  // 0-based edge positions, i < j < k
};
struct CycleWitness {
  std::vector<int> vertices;  // cycle order
};
struct PanWitness {
  std::vector<int> cycle_vertices;
  std::vector<int> path_vertices;  // starts at the attach vertex
};
struct CyclePairWitness {
  std::vector<int> first;
  std::vector<int> second;
};

using WitnessData =
    std::variant<StarWitness, PathWitness, CycleWitness, PanWitness, CyclePairWitness>;

struct Violation {
  ConditionId condition;
  std::string detail;  // human-readable, includes the offending weights
  WitnessData witness;
};

struct CheckOptions {
  bool first_witness_only = false;
  std::size_t max_violations = 100;
  EnumLimits limits;
};

struct ConditionOutcome {
  ConditionId id = ConditionId::star;
  bool pass = true;
  bool capped = false;  // enumeration hit its cap; pass is not meaningful
  std::string cap_message;
  bool truncated = false;  // more violations existed than were collected
  std::vector<Violation> violations;
};

struct EnumerationStats {
  std::size_t stars = 0;
  std::size_t paths = 0;
  std::size_t cycles = 0;
  std::size_t pans = 0;
  std::size_t cycle_pairs = 0;
};

struct ConditionReport {
  std::vector<ConditionOutcome> outcomes;  // fixed order of kAllConditions
  EnumerationStats stats;
  bool caps_hit = false;

  const ConditionOutcome& outcome(ConditionId id) const;
  bool all_pass() const;
  // The five conditions tied to inheritance over connected coalitions.
  bool fconvexity_bundle_pass() const;
  // The two conditions that alone decide cycle-free graphs.
  bool cycle_free_bundle_pass() const;
};

// Per-condition checkers. Enumeration caps propagate as resource_limit_error.
ConditionOutcome check_star(const WeightedGraph& g, const CheckOptions& opts = {});
ConditionOutcome check_path(const WeightedGraph& g, const CheckOptions& opts = {});
ConditionOutcome check_cycle(const WeightedGraph& g, const CheckOptions& opts = {});
ConditionOutcome check_pan(const WeightedGraph& g, const CheckOptions& opts = {});
ConditionOutcome check_adjacent_cycles(const WeightedGraph& g, const CheckOptions& opts = {});
ConditionOutcome check_reinforced_cycle(const WeightedGraph& g, const CheckOptions& opts = {});
ConditionOutcome check_reinforced_pan(const WeightedGraph& g, const CheckOptions& opts = {});
ConditionOutcome check_reinforced_adjacent_cycles(const WeightedGraph& g,
                                                  const CheckOptions& opts = {});

// Runs all eight; resource caps are caught per condition and recorded.
ConditionReport check_all(const WeightedGraph& g, const CheckOptions& opts = {});

// Re-derives the violation from its stored witness; true iff it still
// violates. Used to rule out stale witnesses.
bool violation_replays(const WeightedGraph& g, const Violation& violation);

// Rebuilds a Cycle (edges, chords, max weight) from a vertex sequence.
// Throws std::invalid_argument if the sequence is not a simple cycle of g.
Cycle build_cycle(const WeightedGraph& g, const std::vector<int>& vertices);

}  // namespace gridlock
