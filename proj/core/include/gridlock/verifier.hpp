#pragma once

#include <cstdint>
#include <optional>

#include "gridlock/conditions.hpp"
#include "gridlock/convexity.hpp"

namespace gridlock {

enum class InheritanceMode { convexity, fconvexity, superadditivity };

const char* to_string(InheritanceMode mode);

// Which underlying game produced a counterexample.
struct GameDescriptor {
  enum class Kind { unanimity, sampled_convex, sampled_superadditive };
  Kind kind = Kind::unanimity;
  mask_t s = 0;             // unanimity
  std::uint64_t seed = 0;   // sampled
  int term_count = 0;       // sampled convex
};

struct InheritanceCounterexample {
  GameDescriptor game;
  PairWitness pair;  // delta of the restricted game is negative (or the
                     // superadditivity inequality fails) on this pair
  std::optional<DerivativeWitness> derivative;  // marginal-contribution form
};

struct InheritanceVerdict {
  bool holds = true;
  long games_checked = 0;
  InheritanceMode mode = InheritanceMode::convexity;
  CorrespondenceKind kind = CorrespondenceKind::tpmin;
  std::optional<InheritanceCounterexample> counterexample;
};

// Exhaustive over unanimity games, smallest S first (by popcount, then mask).
// Unanimity games are decisive for inheritance of convexity under these
// correspondences; sampled games below are a safety net only.
InheritanceVerdict inheritance_convexity_unanimity(const WeightedGraph& g,
                                                   CorrespondenceKind kind);

InheritanceVerdict inheritance_fconvexity_unanimity(const WeightedGraph& g,
                                                    CorrespondenceKind kind);

InheritanceVerdict inheritance_convexity_sampled(const WeightedGraph& g, CorrespondenceKind kind,
                                                 int samples, std::uint64_t seed);

InheritanceVerdict inheritance_superadditivity_sampled(const WeightedGraph& g,
                                                       CorrespondenceKind kind, int samples,
                                                       std::uint64_t seed);

// The pmin- and tpmin-restricted games agree on connected coalitions, so
// their F-convexity verdicts must coincide for any underlying game.
bool equivalence_bar_hat_fconvexity(const WeightedGraph& g, const Game& v);

// Both sides of the refinement characterization, computed independently.
struct RefinementAgreement {
  bool refinement_all = true;      // P(A) refines P(B)|A for all A in B
  bool superadditive_all = true;   // every restricted unanimity game is superadditive
  bool agree = true;
};
RefinementAgreement refinement_superadditivity_agreement(const WeightedGraph& g,
                                                         CorrespondenceKind kind);

// Three independent characterizations of unanimity F-convexity inheritance.
struct ThreeWayAgreement {
  bool unanimity_fconvex = true;      // every restricted unanimity game is F-convex
  bool intersection_property = true;  // P(A&B) equals the pairwise block intersections
  bool restriction_stability = true;  // P(A)|A' == P(B)|A' over the stated triples
  bool agree = true;
};
ThreeWayAgreement fconvexity_criteria_agreement(const WeightedGraph& g, CorrespondenceKind kind);

// Exhaustive desk-scale check of three structural facts, each gated on the
// condition bundle it assumes. Failures indicate implementation bugs.
struct LemmaReport {
  bool pan_condition_holds = false;    // gate for the partition-restriction fact
  long restriction_instances = 0;      // P_min(A) == P_min(B)|A cases checked
  long restriction_failures = 0;
  long surplus_instances = 0;          // v(B)-bar(B) >= v(A)-bar(A) over unanimity games
  long surplus_failures = 0;
  bool star_path_hold = false;         // gate for the trichotomy fact
  long trichotomy_instances = 0;
  long trichotomy_failures = 0;
  bool star_path_cycle_hold = false;   // gate for the block-separation fact
  long separation_instances = 0;
  long separation_failures = 0;
  bool all_pass() const {
    return restriction_failures == 0 && surplus_failures == 0 && trichotomy_failures == 0 &&
           separation_failures == 0;
  }
};
LemmaReport structural_lemma_report(const WeightedGraph& g);

// The flagship operation: the eight-condition verdict against brute-force
// inheritance of convexity over unanimity games for tpmin, plus the
// five-condition bundle against F-convexity inheritance.
struct CrossValidation {
  ConditionReport report;
  bool conditions_verdict = false;  // all eight
  InheritanceVerdict bruteforce;    // convexity over unanimity games, tpmin
  bool bruteforce_verdict = false;
  bool agree = false;

  bool five_conditions_verdict = false;
  InheritanceVerdict fconvexity_bruteforce;
  bool fconvexity_agree = false;
  bool fconvexity_inconclusive = false;  // five conditions fail but no unanimity
                                         // F-convexity counterexample exists
};
CrossValidation cross_validate(const WeightedGraph& g, const CheckOptions& opts = {});

}  // namespace gridlock
