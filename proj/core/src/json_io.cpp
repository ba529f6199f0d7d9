#include "raag/json_io.hpp"

#include <fstream>
#include <sstream>

#include "raag/error.hpp"

namespace raag {

using nlohmann::json;

Graph graph_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("vertices")) throw ParseError("graph JSON needs \"vertices\"");
    std::vector<std::string> names;
    for (const auto& v : j.at("vertices")) names.push_back(v.get<std::string>());
    std::vector<std::pair<std::string, std::string>> edges;
    if (j.contains("edges")) {
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("an edge is a pair of vertex names");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
      }
    }
    return Graph(std::move(names), edges);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what());
  }
}

Graph parse_graph(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return graph_from_json(j);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [v, w] : g.edges()) edges.push_back({g.name(v), g.name(w)});
  return {{"vertices", g.names()}, {"edges", edges}};
}

json to_json(const CliqueTable& t, const Graph& g) {
  json by_size = json::array();
  for (const auto& layer : t.by_size) {
    json cl = json::array();
    for (const auto& c : layer) {
      json members = json::array();
      for (const auto v : c.members) members.push_back(g.name(v));
      cl.push_back(members);
    }
    by_size.push_back(cl);
  }
  return {{"counts", t.counts()}, {"cliques", by_size}};
}

json to_json(const PCSeries& x) {
  json terms = json::array();
  for (const auto& [t, c] : x.terms()) {
    terms.push_back({{"trace", t.to_string(x.graph())}, {"coeff", to_string(c)}});
  }
  return {{"domain", x.domain().name()}, {"order", x.order()}, {"terms", terms}};
}

json to_json(const ExtElement& x) {
  json terms = json::array();
  for (const auto& [c, a] : x.terms()) {
    json members = json::array();
    for (const auto v : c.members) members.push_back(x.graph().name(v));
    terms.push_back({{"clique", members}, {"coeff", to_string(a)}});
  }
  return {{"domain", x.domain().name()}, {"terms", terms}};
}

json to_json(const GroupWord& w, const Graph& g) {
  json syllables = json::array();
  for (const auto& s : w.syllables()) {
    syllables.push_back({{"generator", g.name(s.generator)}, {"exponent", s.exponent.get_str()}});
  }
  return {{"word", format_word(w, g)}, {"syllables", syllables}};
}

json to_json(const Valuation& v) {
  if (v.exact) return {{"value", v.value}, {"exact", true}};
  return {{"value", v.value}, {"exact", false}, {"bound", ">= " + std::to_string(v.value)}};
}

json to_json(const ValuationReport& r, const Graph& g) {
  json j = {{"element", to_json(r.element, g)},
            {"domain", r.domain.name()},
            {"order", r.order},
            {"omega_valuation", to_json(r.omega)}};
  if (r.prime) j["prime"] = *r.prime;
  if (r.omega_p) j["omega_p_valuation"] = to_json(*r.omega_p);
  return j;
}

json to_json(const RankTable& t) {
  return {{"kind", to_string(t.kind)},
          {"method", to_string(t.method)},
          {"domain", t.domain},
          {"values", t.values}};
}

json to_json(const ResolutionReport& r) {
  json j = {{"basis_checked", r.basis_checked},
            {"d_squared_zero", r.d_squared_zero},
            {"contraction_identity", r.contraction_identity},
            {"euler_characteristic", r.euler_characteristic},
            {"bigraded_ranks", r.bigraded_ranks},
            {"ok", r.ok()}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

json to_json(const USeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
  return coeffs;
}

}  // namespace raag
