#include "verify.hpp"

#include <set>
#include <sstream>

#include "raag/exterior.hpp"
#include "raag/growth.hpp"
#include "raag/hopf.hpp"
#include "raag/koszul.hpp"
#include "raag/lie_ranks.hpp"
#include "raag/magnus.hpp"

namespace raag::cli {
namespace {

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  return out.str();
}

CheckResult reciprocity(const Graph& g, unsigned m) {
  const USeries prod = phi_R(g, m) * phi_S(g, m).negate_variable();
  return {"reciprocity Phi_R(t)Phi_S(-t) = 1", prod == USeries::constant(1, m), ""};
}

CheckResult growth_oracle(const Graph& g, std::size_t radius) {
  const auto spheres = sphere_sizes(g, radius);
  const auto series = phi_A(g, radius + 1).integer_coeffs();
  bool ok = true;
  for (std::size_t n = 0; n <= radius; ++n) ok = ok && series[n] == spheres[n];
  return {"growth series = BFS spheres", ok, "spheres " + join(spheres)};
}

CheckResult trace_counts(GraphPtr graph, unsigned order) {
  const auto r = phi_R(*graph, order).integer_coeffs();
  std::vector<std::size_t> counts;
  bool ok = true;
  for (unsigned n = 0; n < order; ++n) {
    counts.push_back(enumerate_traces(*graph, n).size());
    ok = ok && r[n] == counts.back();
  }
  for (const auto& d : {CoefficientDomain::rationals(), CoefficientDomain::prime_field(2)}) {
    const auto ranks = magnus_span_rank(graph, 1, order, d);
    for (unsigned n = 0; n < order; ++n) ok = ok && ranks[n] == counts[n];
  }
  return {"trace counts = Phi_R = Magnus span ranks", ok, "traces " + join(counts)};
}

CheckResult lie_ranks(GraphPtr graph, std::size_t upto) {
  const auto series = series_rank_lcs(*graph, upto).values;
  const auto spans = bracket_rank_table(graph, CoefficientDomain::rationals(), upto).values;
  bool ok = series == spans;
  for (const std::uint32_t p : {2U, 3U}) {
    const auto d = series_rank_restricted(*graph, p, upto).values;
    ok = ok && d == restricted_rank_table(graph, p, upto).values && d == restricted_from_lcs(series, p);
  }
  return {"Lie ranks: brackets = series recursion", ok, "b " + join(series)};
}

CheckResult koszul(GraphPtr graph, unsigned order) {
  bool ok = true;
  std::string detail;
  for (const auto& d : {CoefficientDomain::rationals(), CoefficientDomain::prime_field(2)}) {
    const auto r = verify_resolution(graph, order, d);
    ok = ok && r.ok();
    if (r.counterexample && detail.empty()) detail = *r.counterexample;
  }
  return {"Koszul complex: d^2 = 0, sd + ds = 1 - eps", ok, detail};
}

CheckResult injectivity(GraphPtr graph, std::size_t radius, unsigned order) {
  bool ok = true;
  for (const auto& d : {CoefficientDomain::integers(), CoefficientDomain::prime_field(2)}) {
    std::set<PCSeries::Terms> images;
    const auto elements = ball(*graph, radius);
    for (const auto& w : elements) images.insert(magnus(w, graph, d, order).terms());
    ok = ok && images.size() == elements.size();
  }
  return {"Magnus map injective on the ball", ok, ""};
}

CheckResult leading_monomials(GraphPtr graph, std::size_t radius) {
  bool ok = true;
  for (const std::uint32_t p : {2U, 3U, 5U}) {
    for (const auto& w : ball(*graph, radius)) {
      if (w.is_identity()) continue;
      const auto brute = leading_monomial_from_expansion(w, graph, p);
      ok = ok && brute && *brute == leading_monomial_char_p(w, *graph, p);
    }
  }
  return {"leading monomials in characteristic p", ok, ""};
}

CheckResult quadratic_dual(const Graph& g) {
  const auto r = quadratic_dual_check(g);
  return {"R and S are quadratic duals", r.ok(),
          std::to_string(r.rank_r) + " + " + std::to_string(r.rank_s) + " of " +
              std::to_string(r.dimension)};
}

CheckResult hopf(GraphPtr graph, unsigned order) {
  bool ok = true;
  const auto q = CoefficientDomain::rationals();
  for (GeneratorId v = 0; v < graph->size(); ++v) {
    ok = ok && is_grouplike(magnus_exp(generator_word(v, 1, *graph), graph, order));
  }
  ok = ok && primitivity_check(graph, 2, order, q).ok;
  for (const auto& w : ball(*graph, 2)) ok = ok && is_primitive(log_series(magnus_exp(w, graph, order)));
  return {"Hopf: exp(v) grouplike, brackets and logs primitive", ok, ""};
}

}  // namespace

std::vector<CheckResult> verify_all(GraphPtr graph, const VerifyOptions& o) {
  std::vector<CheckResult> out;
  out.push_back(reciprocity(*graph, o.series_order));
  out.push_back(growth_oracle(*graph, o.radius + 1));
  out.push_back(trace_counts(graph, o.magnus_order));
  out.push_back(lie_ranks(graph, o.lie_degree));
  out.push_back(koszul(graph, o.magnus_order));
  out.push_back(injectivity(graph, o.radius, o.magnus_order));
  out.push_back(leading_monomials(graph, o.radius));
  out.push_back(quadratic_dual(*graph));
  out.push_back(hopf(graph, o.magnus_order));
  return out;
}

}  // namespace raag::cli
