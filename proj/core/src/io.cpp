#include "gridlock/io.hpp"

#include <random>
#include <sstream>

#include <json.hpp>

namespace gridlock {

using nlohmann::json;

namespace {

Rational parse_weight(const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(where + ": malformed rational: " + e.what());
  }
  throw ParseError(where + ": weight must be an integer or a \"p/q\" string");
}

// Weights always leave as strings; JSON numbers are parsed as doubles by
// many consumers and would silently round large values.
json weight_to_json(const Rational& w) { return json(w.to_string()); }

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<int> parse_vertex_list(const json& j, int n, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of vertex ids");
  std::vector<int> out;
  for (const auto& item : j) {
    if (!item.is_number_integer()) throw ParseError(where + ": vertex ids must be integers");
    int v = item.get<int>();
    if (v < 0 || v >= n)
      throw ParseError(where + ": vertex " + std::to_string(v) + " outside [0," +
                       std::to_string(n) + ")");
    out.push_back(v);
  }
  return out;
}

}  // namespace

WeightedGraph parse_graph(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError("graph document needs fields \"n\" and \"edges\"");
  if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
  int n = j["n"].get<int>();
  if (n < 0 || n > kMaxPlayers)
    throw ParseError("\"n\" must lie in [0," + std::to_string(kMaxPlayers) + "]");
  if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<Edge> edges;
  int index = 0;
  for (const auto& e : j["edges"]) {
    std::string where = "edge #" + std::to_string(index);
    if (!e.is_array() || e.size() != 3)
      throw ParseError(where + ": expected [u, v, weight]");
    if (!e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError(where + ": endpoints must be integers");
    int u = e[0].get<int>();
    int v = e[1].get<int>();
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(where + ": endpoint outside [0," + std::to_string(n) + ")");
    if (u == v) throw ParseError(where + ": self-loop at vertex " + std::to_string(u));
    edges.push_back({u, v, parse_weight(e[2], where)});
    ++index;
  }
  try {
    return WeightedGraph(n, std::move(edges));
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid graph: ") + e.what());
  }
}

std::string serialize_graph(const WeightedGraph& g) {
  json j;
  j["n"] = g.vertex_count();
  j["edges"] = json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.v, weight_to_json(e.weight)});
  return j.dump();
}

std::unique_ptr<Game> parse_game(const std::string& text, int n) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("kind")) throw ParseError("game document needs \"kind\"");
  std::string kind = j["kind"].get<std::string>();
  if (j.contains("n") && j["n"].is_number_integer() && j["n"].get<int>() != n)
    throw ParseError("game document is for n=" + std::to_string(j["n"].get<int>()) +
                     ", expected n=" + std::to_string(n));
  if (kind == "unanimity") {
    if (!j.contains("S")) throw ParseError("unanimity game needs \"S\"");
    auto vs = parse_vertex_list(j["S"], n, "\"S\"");
    if (vs.empty()) throw ParseError("unanimity game: S must be nonempty");
    return std::make_unique<UnanimityGame>(n, vertices_to_mask(vs, n));
  }
  if (kind == "table") {
    if (n > kMaxTablePlayers) throw ParseError("table game: n exceeds dense-table cap");
    if (!j.contains("values") || !j["values"].is_object())
      throw ParseError("table game needs object field \"values\"");
    bool default_zero = j.value("default_zero", false);
    std::size_t size = std::size_t{1} << n;
    std::vector<Rational> table(size);
    std::vector<bool> given(size, false);
    for (const auto& [key, val] : j["values"].items()) {
      std::size_t mask = 0;
      try {
        mask = std::stoull(key);
      } catch (const std::exception&) {
        throw ParseError("table game: key \"" + key + "\" is not a coalition mask");
      }
      if (mask >= size)
        throw ParseError("table game: mask " + key + " outside [0,2^" + std::to_string(n) + ")");
      table[mask] = parse_weight(val, "values[" + key + "]");
      given[mask] = true;
    }
    if (given[0] && !table[0].is_zero())
      throw ParseError("table game: v(empty) must be 0");
    if (!default_zero)
      for (std::size_t m = 0; m < size; ++m)
        if (!given[m])
          throw ParseError("table game: mask " + std::to_string(m) +
                           " missing (set \"default_zero\": true to default)");
    return std::make_unique<TableGame>(n, std::move(table));
  }
  if (kind == "combination") {
    if (!j.contains("terms") || !j["terms"].is_array())
      throw ParseError("combination game needs array field \"terms\"");
    std::vector<std::pair<Rational, mask_t>> terms;
    int index = 0;
    for (const auto& t : j["terms"]) {
      std::string where = "term #" + std::to_string(index);
      if (!t.is_object() || !t.contains("coeff") || !t.contains("S"))
        throw ParseError(where + ": expected {\"coeff\", \"S\"}");
      auto vs = parse_vertex_list(t["S"], n, where + ".S");
      if (vs.empty()) throw ParseError(where + ": S must be nonempty");
      terms.emplace_back(parse_weight(t["coeff"], where + ".coeff"), vertices_to_mask(vs, n));
      ++index;
    }
    return std::make_unique<CombinationGame>(n, std::move(terms));
  }
  throw ParseError("unknown game kind \"" + kind + "\"");
}

std::string serialize_game(const Game& v) {
  json j;
  if (auto* u = dynamic_cast<const UnanimityGame*>(&v)) {
    j["kind"] = "unanimity";
    j["n"] = v.player_count();
    j["S"] = mask_to_vertices(u->required());
  } else if (auto* c = dynamic_cast<const CombinationGame*>(&v)) {
    j["kind"] = "combination";
    j["n"] = v.player_count();
    j["terms"] = json::array();
    for (const auto& [coeff, s] : c->terms())
      j["terms"].push_back({{"coeff", weight_to_json(coeff)}, {"S", mask_to_vertices(s)}});
  } else if (auto* t = dynamic_cast<const TableGame*>(&v)) {
    j["kind"] = "table";
    j["n"] = v.player_count();
    j["default_zero"] = false;
    json values = json::object();
    for (std::size_t m = 0; m < t->table().size(); ++m)
      values[std::to_string(m)] = weight_to_json(t->table()[m]);
    j["values"] = std::move(values);
  } else {
    throw std::invalid_argument("serialize_game: unknown game type");
  }
  return j.dump();
}

std::string graph_digest(const WeightedGraph& g) {
  std::string canon = serialize_graph(g);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

WeightedGraph generate_graph(const GeneratorParams& params) {
  if (params.n < 0 || params.n > kMaxPlayers)
    throw std::out_of_range("generate_graph: n outside [0,32]");
  if (params.palette.empty())
    throw std::invalid_argument("generate_graph: weight palette is empty");
  std::mt19937_64 rng(params.seed);
  auto coin = [&](double p) {
    return (static_cast<double>(rng() >> 11) * 0x1.0p-53) < p;
  };
  std::vector<Edge> edges;
  for (int u = 0; u < params.n; ++u)
    for (int v = u + 1; v < params.n; ++v)
      if (coin(params.edge_probability)) {
        const Rational& w = params.palette[rng() % params.palette.size()];
        edges.push_back({u, v, w});
      }
  return WeightedGraph(params.n, std::move(edges));
}

WeightedGraph generate_tree(int n, const std::vector<Rational>& palette, std::uint64_t seed) {
  if (palette.empty()) throw std::invalid_argument("generate_tree: weight palette is empty");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    int parent = static_cast<int>(rng() % v);
    edges.push_back({parent, v, palette[rng() % palette.size()]});
  }
  return WeightedGraph(n, std::move(edges));
}

namespace {

json witness_json(const WeightedGraph& g, const Violation& v) {
  json w;
  if (const auto* s = std::get_if<StarWitness>(&v.witness)) {
    w["type"] = "star";
    w["center"] = s->center;
    w["edges"] = json::array();
    for (int e : s->edges) w["edges"].push_back({g.edge(e).u, g.edge(e).v});
  } else if (const auto* p = std::get_if<PathWitness>(&v.witness)) {
    w["type"] = "path";
    w["vertices"] = p->vertices;
    w["i"] = p->i;
    w["j"] = p->j;
    w["k"] = p->k;
  } else if (const auto* c = std::get_if<CycleWitness>(&v.witness)) {
    w["type"] = "cycle";
    w["vertices"] = c->vertices;
  } else if (const auto* pn = std::get_if<PanWitness>(&v.witness)) {
    w["type"] = "pan";
    w["cycle"] = pn->cycle_vertices;
    w["path"] = pn->path_vertices;
  } else if (const auto* cp = std::get_if<CyclePairWitness>(&v.witness)) {
    w["type"] = "cycle_pair";
    w["first"] = cp->first;
    w["second"] = cp->second;
  }
  return w;
}

json report_body(const WeightedGraph& g, const ConditionReport& report) {
  json j;
  j["caps_hit"] = report.caps_hit;
  j["all_pass"] = report.all_pass();
  j["fconvexity_bundle_pass"] = report.fconvexity_bundle_pass();
  j["cycle_free_bundle_pass"] = report.cycle_free_bundle_pass();
  j["stats"] = {{"stars", report.stats.stars},
                {"paths", report.stats.paths},
                {"cycles", report.stats.cycles},
                {"pans", report.stats.pans},
                {"cycle_pairs", report.stats.cycle_pairs}};
  json conds = json::array();
  for (const auto& o : report.outcomes) {
    json c;
    c["condition"] = to_string(o.id);
    c["pass"] = o.pass;
    c["capped"] = o.capped;
    if (o.capped) c["cap_message"] = o.cap_message;
    c["truncated"] = o.truncated;
    c["violations"] = json::array();
    for (const auto& v : o.violations) {
      json vj;
      vj["detail"] = v.detail;
      vj["witness"] = witness_json(g, v);
      c["violations"].push_back(std::move(vj));
    }
    conds.push_back(std::move(c));
  }
  j["conditions"] = std::move(conds);
  return j;
}

json header(const WeightedGraph& g) {
  return json{{"tool", kToolName}, {"version", kToolVersion}, {"input_digest", graph_digest(g)}};
}

json descriptor_json(const GameDescriptor& d) {
  json j;
  switch (d.kind) {
    case GameDescriptor::Kind::unanimity:
      j["kind"] = "unanimity";
      j["S"] = mask_to_vertices(d.s);
      break;
    case GameDescriptor::Kind::sampled_convex:
      j["kind"] = "sampled_convex";
      j["seed"] = d.seed;
      j["term_count"] = d.term_count;
      break;
    case GameDescriptor::Kind::sampled_superadditive:
      j["kind"] = "sampled_superadditive";
      j["seed"] = d.seed;
      break;
  }
  return j;
}

json verdict_json(const InheritanceVerdict& v) {
  json j;
  j["mode"] = to_string(v.mode);
  j["correspondence"] = to_string(v.kind);
  j["holds"] = v.holds;
  j["games_checked"] = v.games_checked;
  if (v.counterexample) {
    json c;
    c["game"] = descriptor_json(v.counterexample->game);
    c["pair"] = {{"A", mask_to_vertices(v.counterexample->pair.a)},
                 {"B", mask_to_vertices(v.counterexample->pair.b)}};
    if (v.counterexample->derivative) {
      const auto& d = *v.counterexample->derivative;
      c["derivative"] = {{"player", d.player},
                         {"small", mask_to_vertices(d.small)},
                         {"large", mask_to_vertices(d.large)}};
    }
    j["counterexample"] = std::move(c);
  }
  return j;
}

}  // namespace

std::string conditions_report_json(const WeightedGraph& g, const ConditionReport& report) {
  json j = header(g);
  j["report"] = report_body(g, report);
  return j.dump(2);
}

std::string inheritance_json(const WeightedGraph& g, const InheritanceVerdict& verdict) {
  json j = header(g);
  j["inheritance"] = verdict_json(verdict);
  return j.dump(2);
}

std::string cross_validation_json(const WeightedGraph& g, const CrossValidation& cv,
                                  std::optional<std::uint64_t> seed) {
  json j = header(g);
  if (seed) j["seed"] = *seed;
  j["conditions_verdict"] = cv.conditions_verdict;
  j["bruteforce_verdict"] = cv.bruteforce_verdict;
  j["agree"] = cv.agree;
  j["five_conditions_verdict"] = cv.five_conditions_verdict;
  j["fconvexity_agree"] = cv.fconvexity_agree;
  j["fconvexity_inconclusive"] = cv.fconvexity_inconclusive;
  j["report"] = report_body(g, cv.report);
  j["bruteforce"] = verdict_json(cv.bruteforce);
  j["fconvexity_bruteforce"] = verdict_json(cv.fconvexity_bruteforce);
  return j.dump(2);
}

std::string conditions_report_text(const WeightedGraph& g, const ConditionReport& report) {
  std::ostringstream out;
  out << "conditions for graph " << graph_digest(g) << " (n=" << g.vertex_count() << ", "
      << g.edge_count() << " edges)\n";
  out << "  enumerated: " << report.stats.stars << " stars, " << report.stats.paths
      << " paths, " << report.stats.cycles << " cycles, " << report.stats.pans << " pans, "
      << report.stats.cycle_pairs << " adjacent pairs\n";
  for (const auto& o : report.outcomes) {
    out << "  " << to_string(o.id) << ": ";
    if (o.capped) {
      out << "CAPPED (" << o.cap_message << ")\n";
      continue;
    }
    out << (o.pass ? "pass" : "FAIL") << "\n";
    for (const auto& v : o.violations) out << "    - " << v.detail << "\n";
    if (o.truncated) out << "    - (further violations omitted)\n";
  }
  out << "overall: " << (report.all_pass() ? "all eight conditions pass" : "violations found")
      << "\n";
  return out.str();
}

std::string inheritance_text(const InheritanceVerdict& v) {
  std::ostringstream out;
  out << "inheritance of " << to_string(v.mode) << " under " << to_string(v.kind) << ": "
      << (v.holds ? "holds" : "FAILS") << " (" << v.games_checked << " games checked)\n";
  if (v.counterexample) {
    const auto& c = *v.counterexample;
    out << "  counterexample game: " << descriptor_json(c.game).dump() << "\n";
    out << "  violating pair: A=" << mask_to_string(c.pair.a)
        << " B=" << mask_to_string(c.pair.b) << "\n";
    if (c.derivative)
      out << "  marginal form: player " << c.derivative->player << ", "
          << mask_to_string(c.derivative->small) << " inside "
          << mask_to_string(c.derivative->large) << "\n";
  }
  return out.str();
}

std::string cross_validation_text(const CrossValidation& cv) {
  std::ostringstream out;
  out << "eight conditions: " << (cv.conditions_verdict ? "pass" : "fail")
      << " | brute force (unanimity, tpmin): " << (cv.bruteforce_verdict ? "holds" : "fails")
      << " | agree: " << (cv.agree ? "yes" : "NO") << "\n";
  out << "five conditions: " << (cv.five_conditions_verdict ? "pass" : "fail")
      << " | F-convexity brute force: " << (cv.fconvexity_bruteforce.holds ? "holds" : "fails")
      << " | agree: " << (cv.fconvexity_agree ? "yes" : "NO")
      << (cv.fconvexity_inconclusive ? " (inconclusive)" : "") << "\n";
  if (cv.bruteforce.counterexample)
    out << inheritance_text(cv.bruteforce);
  return out.str();
}

}  // namespace gridlock
