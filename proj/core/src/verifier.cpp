#include "gridlock/verifier.hpp"

#include <algorithm>

#include "gridlock/game.hpp"

namespace gridlock {

const char* to_string(InheritanceMode mode) {
  switch (mode) {
    case InheritanceMode::convexity: return "convexity";
    case InheritanceMode::fconvexity: return "fconvexity";
    case InheritanceMode::superadditivity: return "superadditivity";
  }
  return "?";
}

namespace {

void require_table_scale(const WeightedGraph& g, const char* who) {
  if (g.vertex_count() > kMaxTablePlayers)
    throw resource_limit_error(std::string(who) + ": vertex count exceeds dense-table cap");
}

// Blocks of the correspondence for every subset, indexed by mask.
std::vector<std::vector<mask_t>> partition_table(const WeightedGraph& g,
                                                 CorrespondenceKind kind) {
  std::vector<std::vector<mask_t>> table(std::size_t{1} << g.vertex_count());
  for (mask_t a = 1; a < table.size(); ++a)
    table[a] = apply_correspondence(g, kind, a).blocks;
  return table;
}

TableGame restricted_unanimity(const std::vector<std::vector<mask_t>>& parts, int n, mask_t s) {
  std::vector<Rational> table(std::size_t{1} << n);
  for (mask_t a = 1; a < table.size(); ++a) {
    std::int64_t count = 0;
    for (mask_t block : parts[a])
      if ((block & s) == s) ++count;
    table[a] = count;
  }
  return TableGame(n, std::move(table));
}

// All nonempty subsets ordered by popcount, then value: minimal
// counterexamples surface first.
std::vector<mask_t> subsets_by_size(int n) {
  std::vector<mask_t> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (mask_t a = 1; a <= full_mask(n); ++a) out.push_back(a);
  std::stable_sort(out.begin(), out.end(),
                   [](mask_t a, mask_t b) { return popcount(a) < popcount(b); });
  return out;
}

DerivativeWitness derivative_form(const PairWitness& pair) {
  // is_convex witnesses are exchange pairs (A|i, A|j): translate to the
  // marginal-contribution triple (j; A, A|i).
  mask_t base = pair.a & pair.b;
  int i = lowest_vertex(pair.a & ~base);
  int j = lowest_vertex(pair.b & ~base);
  (void)i;
  return DerivativeWitness{j, base, pair.a};
}

}  // namespace

InheritanceVerdict inheritance_convexity_unanimity(const WeightedGraph& g,
                                                   CorrespondenceKind kind) {
  require_table_scale(g, "inheritance_convexity_unanimity");
  InheritanceVerdict verdict;
  verdict.mode = InheritanceMode::convexity;
  verdict.kind = kind;
  int n = g.vertex_count();
  auto parts = partition_table(g, kind);
  for (mask_t s : subsets_by_size(n)) {
    TableGame restricted = restricted_unanimity(parts, n, s);
    CheckResult r = is_convex(restricted);
    ++verdict.games_checked;
    if (!r.holds) {
      verdict.holds = false;
      InheritanceCounterexample cex;
      cex.game = {GameDescriptor::Kind::unanimity, s, 0, 0};
      cex.pair = *r.witness;
      cex.derivative = derivative_form(*r.witness);
      verdict.counterexample = cex;
      return verdict;
    }
  }
  return verdict;
}

InheritanceVerdict inheritance_fconvexity_unanimity(const WeightedGraph& g,
                                                    CorrespondenceKind kind) {
  require_table_scale(g, "inheritance_fconvexity_unanimity");
  InheritanceVerdict verdict;
  verdict.mode = InheritanceMode::fconvexity;
  verdict.kind = kind;
  int n = g.vertex_count();
  auto parts = partition_table(g, kind);
  Family fam = Family::connected(g);
  for (mask_t s : subsets_by_size(n)) {
    TableGame restricted = restricted_unanimity(parts, n, s);
    CheckResult r = is_f_convex(restricted, fam);
    ++verdict.games_checked;
    if (!r.holds) {
      verdict.holds = false;
      InheritanceCounterexample cex;
      cex.game = {GameDescriptor::Kind::unanimity, s, 0, 0};
      cex.pair = *r.witness;
      verdict.counterexample = cex;
      return verdict;
    }
  }
  return verdict;
}

InheritanceVerdict inheritance_convexity_sampled(const WeightedGraph& g, CorrespondenceKind kind,
                                                 int samples, std::uint64_t seed) {
  require_table_scale(g, "inheritance_convexity_sampled");
  InheritanceVerdict verdict;
  verdict.mode = InheritanceMode::convexity;
  verdict.kind = kind;
  const int term_count = 2 * g.vertex_count() + 1;
  for (int t = 0; t < samples; ++t) {
    CombinationGame game = sample_convex_game(g.vertex_count(), seed + t, term_count);
    TableGame restricted = restricted_game(g, kind, game);
    CheckResult r = is_convex(restricted);
    ++verdict.games_checked;
    if (!r.holds) {
      verdict.holds = false;
      InheritanceCounterexample cex;
      cex.game = {GameDescriptor::Kind::sampled_convex, 0, seed + t, term_count};
      cex.pair = *r.witness;
      cex.derivative = derivative_form(*r.witness);
      verdict.counterexample = cex;
      return verdict;
    }
  }
  return verdict;
}

InheritanceVerdict inheritance_superadditivity_sampled(const WeightedGraph& g,
                                                       CorrespondenceKind kind, int samples,
                                                       std::uint64_t seed) {
  require_table_scale(g, "inheritance_superadditivity_sampled");
  InheritanceVerdict verdict;
  verdict.mode = InheritanceMode::superadditivity;
  verdict.kind = kind;
  for (int t = 0; t < samples; ++t) {
    TableGame game = sample_superadditive_game(g.vertex_count(), seed + t);
    TableGame restricted = restricted_game(g, kind, game);
    CheckResult r = is_superadditive(restricted);
    ++verdict.games_checked;
    if (!r.holds) {
      verdict.holds = false;
      InheritanceCounterexample cex;
      cex.game = {GameDescriptor::Kind::sampled_superadditive, 0, seed + t, 0};
      cex.pair = *r.witness;
      verdict.counterexample = cex;
      return verdict;
    }
  }
  return verdict;
}

bool equivalence_bar_hat_fconvexity(const WeightedGraph& g, const Game& v) {
  Family fam = Family::connected(g);
  TableGame bar = restricted_game(g, CorrespondenceKind::pmin, v);
  TableGame hat = restricted_game(g, CorrespondenceKind::tpmin, v);
  return is_f_convex(bar, fam).holds == is_f_convex(hat, fam).holds;
}

RefinementAgreement refinement_superadditivity_agreement(const WeightedGraph& g,
                                                         CorrespondenceKind kind) {
  require_table_scale(g, "refinement_superadditivity_agreement");
  RefinementAgreement out;
  int n = g.vertex_count();
  std::vector<Partition> parts(std::size_t{1} << n);
  for (mask_t a = 0; a < parts.size(); ++a) parts[a] = apply_correspondence(g, kind, a);

  for (mask_t b = 1; b < parts.size() && out.refinement_all; ++b) {
    for (mask_t a = b; a; a = (a - 1) & b) {
      if (!is_refinement(parts[a], restrict_partition(parts[b], a))) {
        out.refinement_all = false;
        break;
      }
    }
  }

  auto table = partition_table(g, kind);
  for (mask_t s = 1; s <= full_mask(n) && out.superadditive_all; ++s) {
    if (!is_superadditive(restricted_unanimity(table, n, s)).holds)
      out.superadditive_all = false;
  }
  out.agree = out.refinement_all == out.superadditive_all;
  return out;
}

ThreeWayAgreement fconvexity_criteria_agreement(const WeightedGraph& g,
                                                CorrespondenceKind kind) {
  require_table_scale(g, "fconvexity_criteria_agreement");
  ThreeWayAgreement out;
  int n = g.vertex_count();
  Family fam = Family::connected(g);
  auto table = partition_table(g, kind);

  for (mask_t s = 1; s <= full_mask(n) && out.unanimity_fconvex; ++s)
    if (!is_f_convex(restricted_unanimity(table, n, s), fam).holds)
      out.unanimity_fconvex = false;

  std::vector<Partition> parts(std::size_t{1} << n);
  for (mask_t a = 0; a < parts.size(); ++a) parts[a] = apply_correspondence(g, kind, a);

  for (mask_t a = 1; a <= full_mask(n) && out.intersection_property; ++a) {
    if (!fam.contains(a)) continue;
    for (mask_t b = 1; b <= full_mask(n); ++b) {
      if (!fam.contains(b) || !fam.contains(a & b)) continue;
      if (!(parts[a & b] == intersection_partition(parts[a], parts[b]))) {
        out.intersection_property = false;
        break;
      }
    }
  }

  for (int i = 0; i < n && out.restriction_stability; ++i) {
    mask_t ground = full_mask(n) & ~bit(i);
    for (mask_t b = ground; b && out.restriction_stability; b = (b - 1) & ground) {
      if (!fam.contains(b)) continue;
      for (mask_t a = b; a; a = (a - 1) & b) {
        if (!fam.contains(a) || !fam.contains(a | bit(i))) continue;
        bool ok = true;
        for (mask_t ap : restrict_partition(parts[a | bit(i)], a).blocks) {
          if (!(restrict_partition(parts[a], ap) == restrict_partition(parts[b], ap))) {
            ok = false;
            break;
          }
        }
        if (!ok) {
          out.restriction_stability = false;
          break;
        }
      }
    }
  }

  out.agree = out.unanimity_fconvex == out.intersection_property &&
              out.intersection_property == out.restriction_stability;
  return out;
}

LemmaReport structural_lemma_report(const WeightedGraph& g) {
  require_table_scale(g, "structural_lemma_report");
  LemmaReport report;
  int n = g.vertex_count();
  mask_t full = full_mask(n);
  Family fam = Family::connected(g);

  report.pan_condition_holds = check_pan(g).pass;
  report.star_path_hold = check_star(g).pass && check_path(g).pass;
  report.star_path_cycle_hold = report.star_path_hold && check_cycle(g).pass;

  // Full-graph component ids, for "edge connected to B".
  std::vector<int> comp_of(n, -1);
  {
    auto comps = connected_components(g, full);
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (int v : mask_to_vertices(comps[c])) comp_of[v] = static_cast<int>(c);
  }

  if (report.pan_condition_holds) {
    for (mask_t b = 1; b <= full; ++b) {
      if (!fam.contains(b)) continue;
      auto sb = sigma(g, b);
      if (!sb) continue;
      // Cycle-free induced subgraph, or a strictly cheaper edge connected to B.
      bool cycle_free =
          induced_edges(g, b).size() + connected_components(g, b).size() ==
          static_cast<std::size_t>(popcount(b));
      bool cheaper_nearby = false;
      if (!cycle_free) {
        for (const Edge& e : g.edges()) {
          if (!(e.weight < *sb)) continue;
          bool touches = false;
          for (int v : mask_to_vertices(b))
            if (comp_of[v] == comp_of[e.u]) {
              touches = true;
              break;
            }
          if (touches) {
            cheaper_nearby = true;
            break;
          }
        }
        if (!cheaper_nearby) continue;
      }
      Partition pb = p_min(g, b);
      for (mask_t a = b; a; a = (a - 1) & b) {
        if (popcount(a) < 2 || !fam.contains(a)) continue;
        auto sa = sigma(g, a);
        if (!sa || !(*sa == *sb)) continue;
        ++report.restriction_instances;
        if (!(p_min(g, a) == restrict_partition(pb, a))) ++report.restriction_failures;
      }
    }
    // Surplus monotonicity over unanimity games on the same qualifying pairs.
    auto parts = partition_table(g, CorrespondenceKind::pmin);
    for (mask_t s = 1; s <= full; ++s) {
      TableGame bar = restricted_unanimity(parts, n, s);
      UnanimityGame u(n, s);
      for (mask_t b = 1; b <= full; ++b) {
        if (!fam.contains(b)) continue;
        auto sb = sigma(g, b);
        if (!sb) continue;
        bool cycle_free =
            induced_edges(g, b).size() + connected_components(g, b).size() ==
            static_cast<std::size_t>(popcount(b));
        if (!cycle_free) {
          bool cheaper_nearby = false;
          for (const Edge& e : g.edges()) {
            if (!(e.weight < *sb)) continue;
            for (int v : mask_to_vertices(b))
              if (comp_of[v] == comp_of[e.u]) {
                cheaper_nearby = true;
                break;
              }
            if (cheaper_nearby) break;
          }
          if (!cheaper_nearby) continue;
        }
        for (mask_t a = b; a; a = (a - 1) & b) {
          if (popcount(a) < 2 || !fam.contains(a)) continue;
          auto sa = sigma(g, a);
          if (!sa || !(*sa == *sb)) continue;
          ++report.surplus_instances;
          if (u.value(b) - bar.value(b) < u.value(a) - bar.value(a))
            ++report.surplus_failures;
        }
      }
    }
  }

  if (report.star_path_hold) {
    for (int i = 0; i < n; ++i) {
      mask_t ground = full & ~bit(i);
      for (mask_t b = ground; b; b = (b - 1) & ground) {
        if (!fam.contains(b)) continue;
        for (mask_t a = b; a; a = (a - 1) & b) {
          if (popcount(a) < 2 || !fam.contains(a)) continue;
          auto sai = sigma_frontier(g, a, i);
          if (!sai) continue;
          auto sa = sigma(g, a);
          auto sb = sigma(g, b);
          ++report.trichotomy_instances;
          bool first = *sai >= *sa && *sa >= *sb;
          bool second = *sa == *sb && *sb > *sai;
          if (!first && !second) ++report.trichotomy_failures;
        }
      }
    }
  }

  if (report.star_path_cycle_hold) {
    for (int i = 0; i < n; ++i) {
      mask_t ground = full & ~bit(i);
      for (mask_t b = ground; b; b = (b - 1) & ground) {
        if (!fam.contains(b)) continue;
        auto sb = sigma(g, b);
        if (!sb) continue;
        Partition pb = p_min(g, b);
        for (mask_t a = b; a; a = (a - 1) & b) {
          if (!fam.contains(a | bit(i))) continue;
          auto comps = connected_components(g, a);
          if (comps.size() < 2) continue;
          bool hypotheses = true;
          for (mask_t comp : comps) {
            auto ski = sigma_frontier(g, comp, i);
            if (!ski || !(*ski <= *sb)) {
              hypotheses = false;
              break;
            }
            if (popcount(comp) >= 2) {
              auto sk = sigma(g, comp);
              if (!sk || !(*sk == *sb)) {
                hypotheses = false;
                break;
              }
            }
          }
          if (!hypotheses) continue;
          ++report.separation_instances;
          for (mask_t block : pb.blocks) {
            int met = 0;
            for (mask_t comp : comps)
              if (block & comp) ++met;
            if (met > 1) {
              ++report.separation_failures;
              break;
            }
          }
        }
      }
    }
  }

  return report;
}

CrossValidation cross_validate(const WeightedGraph& g, const CheckOptions& opts) {
  require_table_scale(g, "cross_validate");
  CrossValidation cv;
  cv.report = check_all(g, opts);
  if (cv.report.caps_hit)
    throw resource_limit_error("cross_validate: enumeration caps hit; verdict unavailable");
  cv.conditions_verdict = cv.report.all_pass();
  cv.bruteforce = inheritance_convexity_unanimity(g, CorrespondenceKind::tpmin);
  cv.bruteforce_verdict = cv.bruteforce.holds;
  cv.agree = cv.conditions_verdict == cv.bruteforce_verdict;

  cv.five_conditions_verdict = cv.report.fconvexity_bundle_pass();
  cv.fconvexity_bruteforce = inheritance_fconvexity_unanimity(g, CorrespondenceKind::tpmin);
  if (cv.five_conditions_verdict) {
    cv.fconvexity_agree = cv.fconvexity_bruteforce.holds;
  } else if (cv.fconvexity_bruteforce.holds) {
    // Necessity over all superadditive F-convex games need not be witnessed
    // by a unanimity game; record as inconclusive, not a disagreement.
    cv.fconvexity_agree = true;
    cv.fconvexity_inconclusive = true;
  } else {
    cv.fconvexity_agree = true;
  }
  return cv;
}

}  // namespace gridlock
