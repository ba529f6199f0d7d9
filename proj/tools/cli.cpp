#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "raag/error.hpp"
#include "raag/exterior.hpp"
#include "raag/growth.hpp"
#include "raag/json_io.hpp"
#include "raag/koszul.hpp"
#include "raag/lie_ranks.hpp"
#include "raag/limits.hpp"
#include "raag/magnus.hpp"
#include "verify.hpp"

namespace raag::cli {
namespace {

using nlohmann::json;

struct Output {
  std::string text;
  json data;
  int status = kOk;
};

std::string join_values(const auto& xs) {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : xs) {
    out << (first ? "" : " ") << x;
    first = false;
  }
  return out.str();
}

std::string format_series(const PCSeries& x) {
  std::string out;
  for (const auto& [t, c] : x.terms()) {
    const bool negative = c < 0;
    const Coeff mag = negative ? Coeff(-c) : c;
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += t.to_string(x.graph());
    }
  }
  if (out.empty()) out = "0";
  return out + " + O(" + std::to_string(x.order()) + ")";
}

CoefficientDomain domain_of(const JobConfig& c) {
  return CoefficientDomain::parse(c.domain, c.p.value_or(0));
}

std::uint32_t prime_of(const JobConfig& c) {
  if (!c.p) throw InvalidArgument("--p is required for this subcommand");
  if (!is_prime(*c.p)) throw InvalidArgument(std::to_string(*c.p) + " is not a prime");
  return *c.p;
}

const std::string& single_word(const JobConfig& c) {
  if (c.words.size() != 1) throw InvalidArgument(c.subcommand + " takes exactly one word");
  return c.words.front();
}

Output cmd_cliques(const JobConfig&, const GraphPtr& g) {
  const auto table = enumerate_cliques(*g);
  Output o;
  o.data = to_json(table, *g);
  std::ostringstream text;
  text << "counts: " << join_values(table.counts()) << "\n";
  for (const auto& c : table.all()) {
    text << "{";
    for (std::size_t i = 0; i < c.size(); ++i) text << (i ? "," : "") << g->name(c.members[i]);
    text << "}\n";
  }
  o.text = text.str();
  return o;
}

Output cmd_nf(const JobConfig& c, const GraphPtr& g) {
  const GroupWord w = parse_word(single_word(c), *g);
  return {format_word(w, *g) + "\n", to_json(w, *g)};
}

Output cmd_mul(const JobConfig& c, const GraphPtr& g) {
  if (c.words.empty()) throw InvalidArgument("mul needs at least one word");
  GroupWord w;
  for (const auto& s : c.words) w = multiply(w, parse_word(s, *g), *g);
  return {format_word(w, *g) + "\n", to_json(w, *g)};
}

Output cmd_growth(const JobConfig& c, const GraphPtr& g) {
  const std::size_t m = c.upto.value_or(kDefaultGrowthOrder);
  const USeries series = phi_A(*g, m);
  const RatFunc closed = phi_A_closed_form(*g);
  Output o;
  o.data = {{"series", to_json(series)}, {"closed_form", closed.to_string()}};
  std::ostringstream text;
  text << "series: " << join_values(series.integer_coeffs()) << "\n";
  text << "closed form: " << closed.to_string() << "\n";
  if (c.radius) {
    const auto spheres = ball_growth_oracle(*g, *c.radius);
    o.data["oracle"] = spheres;
    text << "oracle: " << join_values(spheres) << "\n";
    for (std::size_t n = 0; n < spheres.size() && n < m; ++n) {
      if (series.integer_coeffs()[n] != spheres[n]) o.status = kVerificationFailed;
    }
  }
  o.text = text.str();
  return o;
}

Output cmd_poincare(const JobConfig& c, const GraphPtr& g) {
  const std::size_t m = c.upto.value_or(kDefaultGrowthOrder);
  const USeries s = poincare_poly(*g);
  const USeries r = phi_R(*g, m);
  const RatFunc closed = phi_R_closed_form(*g);
  Output o;
  o.data = {{"clique_polynomial", to_json(s)}, {"phi_R", to_json(r)}, {"closed_form", closed.to_string()}};
  o.text = "Phi_S: " + polynomial_to_string(s.integer_coeffs()) + "\nPhi_R: " +
           join_values(r.integer_coeffs()) + "\nclosed form: " + closed.to_string() + "\n";
  return o;
}

Output cmd_magnus(const JobConfig& c, const GraphPtr& g) {
  const GroupWord w = parse_word(single_word(c), *g);
  const PCSeries m = magnus(w, g, domain_of(c), c.order.value_or(kDefaultSeriesOrder));
  return {format_series(m) + "\n", to_json(m)};
}

Output cmd_valuation(const JobConfig& c, const GraphPtr& g) {
  const GroupWord w = parse_word(single_word(c), *g);
  std::optional<std::uint32_t> prime;
  if (c.p) prime = prime_of(c);
  const auto report = valuation_report(w, g, domain_of(c), c.order.value_or(kDefaultSeriesOrder), prime);
  Output o;
  o.data = to_json(report, *g);
  auto show = [](const Valuation& v) { return (v.exact ? "" : ">= ") + std::to_string(v.value); };
  o.text = "omega: " + show(report.omega) + "\n";
  if (report.omega_p) o.text += "omega_" + std::to_string(*report.prime) + ": " + show(*report.omega_p) + "\n";
  return o;
}

Output rank_tables(const std::vector<RankTable>& tables) {
  Output o;
  o.data = {{"tables", json::array()}};
  std::ostringstream text;
  for (const auto& t : tables) {
    o.data["tables"].push_back(to_json(t));
    text << to_string(t.kind) << " " << to_string(t.method) << " " << t.domain << ": "
         << join_values(t.values) << "\n";
  }
  bool agree = true;
  for (const auto& t : tables) agree = agree && t.values == tables.front().values;
  o.data["agree"] = agree;
  o.status = agree ? kOk : kVerificationFailed;
  o.text = text.str();
  return o;
}

Output cmd_lambda(const JobConfig& c, const GraphPtr& g) {
  return rank_tables({lambda_dims(*g, prime_of(c), c.upto.value_or(5))});
}

Output cmd_ranks(const JobConfig& c, const GraphPtr& g) {
  const std::size_t upto = c.upto.value_or(5);
  if (c.kind == "lcs") {
    const auto d = c.domain == "Z" ? CoefficientDomain::rationals() : domain_of(c);
    return rank_tables({series_rank_lcs(*g, upto), bracket_rank_table(g, d, upto)});
  }
  if (c.kind == "restricted") {
    const auto p = prime_of(c);
    return rank_tables({series_rank_restricted(*g, p, upto), restricted_rank_table(g, p, upto)});
  }
  if (c.kind == "lambda") return cmd_lambda(c, g);
  throw InvalidArgument("--kind must be lcs, restricted or lambda");
}

Output cmd_koszul(const JobConfig& c, const GraphPtr& g) {
  const auto order = static_cast<unsigned>(c.upto.value_or(6));
  const auto report = verify_resolution(g, order, domain_of(c));
  Output o;
  o.data = to_json(report);
  std::ostringstream text;
  text << "basis elements checked: " << report.basis_checked << "\n"
       << "d^2 = 0: " << (report.d_squared_zero ? "yes" : "no") << "\n"
       << "sd + ds = 1 - eps: " << (report.contraction_identity ? "yes" : "no") << "\n"
       << "Euler characteristic: " << (report.euler_characteristic ? "yes" : "no") << "\n";
  if (report.counterexample) text << "counterexample: " << *report.counterexample << "\n";
  o.text = text.str();
  o.status = report.ok() ? kOk : kVerificationFailed;
  return o;
}

Output cmd_verify_all(const JobConfig& c, const GraphPtr& g) {
  VerifyOptions options;
  if (c.order) options.magnus_order = *c.order;
  if (c.upto) options.lie_degree = *c.upto;
  if (c.radius) options.radius = *c.radius;
  Output o;
  o.data = json::array();
  std::ostringstream text;
  for (const auto& r : verify_all(g, options)) {
    o.data.push_back({{"check", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    text << (r.ok ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) text << " (" << r.detail << ")";
    text << "\n";
    if (!r.ok) o.status = kVerificationFailed;
  }
  o.text = text.str();
  return o;
}

const std::map<std::string, std::function<Output(const JobConfig&, const GraphPtr&)>>& commands() {
  static const std::map<std::string, std::function<Output(const JobConfig&, const GraphPtr&)>> table = {
      {"cliques", cmd_cliques},   {"nf", cmd_nf},         {"mul", cmd_mul},
      {"growth", cmd_growth},     {"poincare", cmd_poincare}, {"magnus", cmd_magnus},
      {"valuation", cmd_valuation}, {"ranks", cmd_ranks}, {"lambda", cmd_lambda},
      {"koszul", cmd_koszul},     {"verify-all", cmd_verify_all},
  };
  return table;
}

}  // namespace

int run(const JobConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const auto it = commands().find(config.subcommand);
    if (it == commands().end()) throw InvalidArgument("unknown subcommand " + config.subcommand);
    if (config.order && *config.order == 0) throw InvalidArgument("--order must be at least 1");
    if (config.upto && *config.upto == 0) throw InvalidArgument("--upto must be at least 1");
    if (config.graph_path.empty()) throw InvalidArgument("--graph is required");
    const GraphPtr graph = share(load_graph(config.graph_path));
    const Output o = it->second(config, graph);
    const std::string payload = config.json ? o.data.dump(2) + "\n" : o.text;
    if (config.output_path.empty()) {
      out << payload;
    } else {
      std::ofstream file(config.output_path);
      if (!file) throw InvalidArgument("cannot write " + config.output_path);
      file << payload;
    }
    return o.status;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Right-angled Artin groups: normal forms, Magnus series, Lie ranks, growth"};
  app.require_subcommand(1);
  JobConfig config;
  std::optional<std::size_t> max_states;

  for (const auto& [name, description] : std::vector<std::pair<std::string, std::string>>{
           {"cliques", "enumerate cliques"},
           {"nf", "normal form of a group word"},
           {"mul", "product of group words"},
           {"growth", "spherical growth series"},
           {"poincare", "clique polynomial and Poincare series"},
           {"magnus", "truncated Magnus series of a word"},
           {"valuation", "filtration valuations of a word"},
           {"ranks", "graded Lie ranks by two methods"},
           {"lambda", "exponent-p series quotient dimensions"},
           {"koszul", "Koszul complex certificate"},
           {"verify-all", "full invariant suite"}}) {
    auto* sub = app.add_subcommand(name, description);
    sub->add_option("words", config.words, "group words such as \"a^2 b^-1 a\"");
    sub->callback([&config, n = name] { config.subcommand = n; });
  }
  app.add_option("--graph", config.graph_path, "graph JSON file")->required();
  app.add_option("--order", config.order, "truncation order N of Magnus series");
  app.add_option("--upto", config.upto, "series length or degree bound M");
  app.add_option("--domain", config.domain, "coefficient domain Z, Q or Fp")
      ->check(CLI::IsMember({"Z", "Q", "Fp"}));
  app.add_option("--p", config.p, "prime");
  app.add_option("--radius,--oracle", config.radius, "ball radius");
  app.add_option("--kind", config.kind, "rank kind")->check(CLI::IsMember({"lcs", "restricted", "lambda"}));
  app.add_flag("--json", config.json, "JSON output");
  app.add_option("-o,--output", config.output_path, "write output to a file");
  app.add_option("--max-states", max_states, "enumeration budget (overrides RAAG_MAX_STATES)");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out;
    std::ostringstream cli_err;
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? kOk : kParseError;
  }
  if (max_states) set_max_states(*max_states);
  return run(config, out, err);
}

}  // namespace raag::cli
