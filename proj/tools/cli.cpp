#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gridlock/io.hpp"

namespace gridlock::cli {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<Rational> parse_weight_list(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(Rational::parse(item));
  }
  return out;
}

CorrespondenceKind parse_kind(const std::string& name) {
  if (name == "components") return CorrespondenceKind::components;
  if (name == "pmin") return CorrespondenceKind::pmin;
  if (name == "tpmin") return CorrespondenceKind::tpmin;
  throw ParseError("unknown correspondence \"" + name + "\" (components|pmin|tpmin)");
}

CheckOptions options_from_env() {
  CheckOptions opts;
  if (const char* cap = std::getenv("GRIDLOCK_CYCLE_CAP")) {
    opts.limits.max_cycles = std::strtoull(cap, nullptr, 10);
    if (opts.limits.max_cycles == 0) throw ParseError("GRIDLOCK_CYCLE_CAP must be positive");
  }
  return opts;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"graph-restricted cooperative games: partitions, weight conditions, and "
               "brute-force cross-validation"};
  app.require_subcommand(1);

  // partition
  auto* sub_partition = app.add_subcommand("partition", "print the blocks of a correspondence");
  std::string graph_path, coalition_csv, kind_name = "tpmin";
  sub_partition->add_option("-g,--graph", graph_path, "graph JSON file")->required();
  sub_partition->add_option("-A,--coalition", coalition_csv, "coalition, e.g. 0,1,2")->required();
  sub_partition->add_option("-c,--correspondence", kind_name, "components|pmin|tpmin");

  // restrict
  auto* sub_restrict = app.add_subcommand("restrict", "emit the restricted game as a table");
  std::string game_path, out_path;
  sub_restrict->add_option("-g,--graph", graph_path, "graph JSON file")->required();
  sub_restrict->add_option("-v,--game", game_path, "game JSON file")->required();
  sub_restrict->add_option("-c,--correspondence", kind_name, "components|pmin|tpmin");
  sub_restrict->add_option("-o,--output", out_path, "write the table document here");

  // conditions
  auto* sub_conditions = app.add_subcommand("conditions", "check the eight weight conditions");
  bool as_json = false, first_witness = false;
  sub_conditions->add_option("-g,--graph", graph_path, "graph JSON file")->required();
  sub_conditions->add_flag("--json", as_json, "machine-readable output");
  sub_conditions->add_flag("--first-witness", first_witness, "stop at the first violation");

  // inherit
  auto* sub_inherit = app.add_subcommand("inherit", "brute-force inheritance check");
  std::string mode_name = "convexity";
  int samples = 0;
  std::uint64_t seed = 0;
  sub_inherit->add_option("-g,--graph", graph_path, "graph JSON file")->required();
  sub_inherit->add_option("--mode", mode_name, "convexity|fconvexity")->required();
  sub_inherit->add_option("-c,--correspondence", kind_name, "components|pmin|tpmin");
  sub_inherit->add_option("--samples", samples, "additionally check sampled convex games");
  sub_inherit->add_option("--seed", seed, "seed for sampled games");

  // cross-validate
  auto* sub_cross = app.add_subcommand("cross-validate",
                                       "conditions verdict vs brute-force inheritance");
  sub_cross->add_option("-g,--graph", graph_path, "graph JSON file")->required();
  sub_cross->add_flag("--json", as_json, "machine-readable output");

  // gen
  auto* sub_gen = app.add_subcommand("gen", "emit a seeded random graph document");
  int gen_n = 6;
  double gen_p = 0.5;
  std::string weights_csv = "1,2,3";
  sub_gen->add_option("--n", gen_n, "vertex count");
  sub_gen->add_option("--p", gen_p, "edge probability");
  sub_gen->add_option("--weights", weights_csv, "weight palette, e.g. 1,2,1/2");
  sub_gen->add_option("--seed", seed, "generator seed");

  // corpus
  auto* sub_corpus = app.add_subcommand("corpus", "batch cross-validation over seeded graphs");
  std::string corpus_dir;
  std::string seed_range = "0..99";
  sub_corpus->add_option("--dir", corpus_dir, "output directory for per-graph reports")
      ->required();
  sub_corpus->add_option("--seeds", seed_range, "seed range a..b (inclusive)");
  sub_corpus->add_option("--n", gen_n, "vertex count");
  sub_corpus->add_option("--p", gen_p, "edge probability");
  sub_corpus->add_option("--weights", weights_csv, "weight palette");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    CheckOptions opts = options_from_env();
    opts.first_witness_only = first_witness;

    if (sub_partition->parsed()) {
      WeightedGraph g = parse_graph(read_file(graph_path));
      mask_t a = vertices_to_mask(parse_int_list(coalition_csv), g.vertex_count());
      Partition p = apply_correspondence(g, parse_kind(kind_name), a);
      for (mask_t block : p.blocks) out << mask_to_string(block) << "\n";
      return kExitPass;
    }

    if (sub_restrict->parsed()) {
      WeightedGraph g = parse_graph(read_file(graph_path));
      auto v = parse_game(read_file(game_path), g.vertex_count());
      TableGame restricted = restricted_game(g, parse_kind(kind_name), *v);
      std::string doc = serialize_game(restricted);
      if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw ParseError("cannot write file: " + out_path);
        f << doc << "\n";
        out << "wrote " << out_path << " (zero_normalized: "
            << (is_zero_normalized(restricted) ? "yes" : "no") << ")\n";
      } else {
        out << doc << "\n";
      }
      return kExitPass;
    }

    if (sub_conditions->parsed()) {
      WeightedGraph g = parse_graph(read_file(graph_path));
      ConditionReport report = check_all(g, opts);
      out << (as_json ? conditions_report_json(g, report)
                      : conditions_report_text(g, report));
      if (!as_json) out.flush();
      if (report.caps_hit) return kExitResource;
      return report.all_pass() ? kExitPass : kExitViolation;
    }

    if (sub_inherit->parsed()) {
      WeightedGraph g = parse_graph(read_file(graph_path));
      CorrespondenceKind kind = parse_kind(kind_name);
      InheritanceVerdict verdict;
      if (mode_name == "convexity") {
        verdict = inheritance_convexity_unanimity(g, kind);
      } else if (mode_name == "fconvexity") {
        verdict = inheritance_fconvexity_unanimity(g, kind);
      } else {
        throw ParseError("unknown mode \"" + mode_name + "\" (convexity|fconvexity)");
      }
      out << inheritance_text(verdict);
      bool ok = verdict.holds;
      if (ok && samples > 0 && mode_name == "convexity") {
        InheritanceVerdict sampled = inheritance_convexity_sampled(g, kind, samples, seed);
        out << inheritance_text(sampled);
        ok = sampled.holds;
      }
      return ok ? kExitPass : kExitViolation;
    }

    if (sub_cross->parsed()) {
      WeightedGraph g = parse_graph(read_file(graph_path));
      CrossValidation cv = cross_validate(g, opts);
      out << (as_json ? cross_validation_json(g, cv) : cross_validation_text(cv));
      return cv.agree && cv.fconvexity_agree ? kExitPass : kExitViolation;
    }

    if (sub_gen->parsed()) {
      GeneratorParams params{gen_n, gen_p, parse_weight_list(weights_csv), seed};
      out << serialize_graph(generate_graph(params)) << "\n";
      return kExitPass;
    }

    if (sub_corpus->parsed()) {
      auto sep = seed_range.find("..");
      if (sep == std::string::npos) throw ParseError("--seeds expects a..b");
      std::uint64_t lo = std::strtoull(seed_range.substr(0, sep).c_str(), nullptr, 10);
      std::uint64_t hi = std::strtoull(seed_range.substr(sep + 2).c_str(), nullptr, 10);
      if (hi < lo) throw ParseError("--seeds range is empty");
      std::filesystem::create_directories(corpus_dir);
      std::vector<Rational> palette = parse_weight_list(weights_csv);
      bool all_agree = true;
      for (std::uint64_t s = lo; s <= hi; ++s) {
        WeightedGraph g = generate_graph({gen_n, gen_p, palette, s});
        CrossValidation cv = cross_validate(g, opts);
        std::string path = corpus_dir + "/seed_" + std::to_string(s) + ".json";
        std::ofstream f(path, std::ios::binary);
        if (!f) throw ParseError("cannot write file: " + path);
        f << cross_validation_json(g, cv, s) << "\n";
        out << "seed " << s << ": conditions " << (cv.conditions_verdict ? "pass" : "fail")
            << ", brute force " << (cv.bruteforce_verdict ? "holds" : "fails") << ", agree "
            << (cv.agree ? "yes" : "NO") << "\n";
        all_agree = all_agree && cv.agree && cv.fconvexity_agree;
      }
      return all_agree ? kExitPass : kExitViolation;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const resource_limit_error& e) {
    err << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gridlock::cli
