#pragma once

#include <memory>
#include <string>

#include "gridlock/game.hpp"
#include "gridlock/verifier.hpp"

namespace gridlock {

inline constexpr const char* kToolName = "gridlock";
inline constexpr const char* kToolVersion = "0.1.0";

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// {"n": int, "edges": [[u, v, weight], ...]} with weight an integer or a
// "p/q" string, q > 0. Validation failures name the offending edge.
WeightedGraph parse_graph(const std::string& text);
std::string serialize_graph(const WeightedGraph& g);

// {"kind": "unanimity", "S": [..]}
// {"kind": "table", "values": {"<mask>": weight, ...}, "default_zero": bool}
// {"kind": "combination", "terms": [{"coeff": w, "S": [..]}, ...]}
std::unique_ptr<Game> parse_game(const std::string& text, int n);
std::string serialize_game(const Game& v);

// FNV-1a over the canonical serialization; binds reports to their graph.
std::string graph_digest(const WeightedGraph& g);

struct GeneratorParams {
  int n = 6;
  double edge_probability = 0.5;
  std::vector<Rational> palette = {1, 2, 3};
  std::uint64_t seed = 0;
};
WeightedGraph generate_graph(const GeneratorParams& params);

// Seeded random tree on n vertices (random attachment), weights from the
// palette.
WeightedGraph generate_tree(int n, const std::vector<Rational>& palette, std::uint64_t seed);

// Machine-readable report documents. Each embeds tool name, version and the
// input digest; `seed` is recorded when the graph came from the generator.
std::string conditions_report_json(const WeightedGraph& g, const ConditionReport& report);
std::string inheritance_json(const WeightedGraph& g, const InheritanceVerdict& verdict);
std::string cross_validation_json(const WeightedGraph& g, const CrossValidation& cv,
                                  std::optional<std::uint64_t> seed = std::nullopt);

// Human-oriented renderings used by the CLI.
std::string conditions_report_text(const WeightedGraph& g, const ConditionReport& report);
std::string inheritance_text(const InheritanceVerdict& verdict);
std::string cross_validation_text(const CrossValidation& cv);

}  // namespace gridlock
