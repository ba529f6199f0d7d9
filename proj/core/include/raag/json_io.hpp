#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "raag/exterior.hpp"
#include "raag/graph.hpp"
#include "raag/group_word.hpp"
#include "raag/koszul.hpp"
#include "raag/lie_ranks.hpp"
#include "raag/magnus.hpp"
#include "raag/pc_series.hpp"
#include "raag/useries.hpp"

namespace raag {

/// {"vertices": [...], "edges": [[a, b], ...]}. Throws ParseError.
Graph graph_from_json(const nlohmann::json& j);
Graph parse_graph(const std::string& text);
Graph load_graph(const std::string& path);
nlohmann::json to_json(const Graph& g);

nlohmann::json to_json(const CliqueTable& t, const Graph& g);

/// [{"trace": "abc", "coeff": "3"}, ...] sorted by (length, lex).
nlohmann::json to_json(const PCSeries& x);
nlohmann::json to_json(const ExtElement& x);
nlohmann::json to_json(const GroupWord& w, const Graph& g);
nlohmann::json to_json(const Valuation& v);
nlohmann::json to_json(const ValuationReport& r, const Graph& g);
nlohmann::json to_json(const RankTable& t);
nlohmann::json to_json(const ResolutionReport& r);

/// Coefficients as decimal strings.
nlohmann::json to_json(const USeries& s);

}  // namespace raag
