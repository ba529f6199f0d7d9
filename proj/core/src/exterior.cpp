#include "raag/exterior.hpp"

#include <algorithm>

#include "raag/error.hpp"
#include "raag/linalg.hpp"

namespace raag {

ExtElement::ExtElement(GraphPtr graph, CoefficientDomain domain)
    : graph_(std::move(graph)), domain_(domain) {
  if (!graph_) throw InvalidArgument("exterior element without a graph");
}

ExtElement ExtElement::basis(GraphPtr graph, CoefficientDomain domain, const Clique& c,
                             const Coeff& coeff) {
  if (!std::is_sorted(c.members.begin(), c.members.end()) || !graph->is_clique(c.members) ||
      std::adjacent_find(c.members.begin(), c.members.end()) != c.members.end()) {
    throw InvalidArgument("not a clique of the graph");
  }
  ExtElement x(std::move(graph), domain);
  x.add_term(c, coeff);
  return x;
}

ExtElement ExtElement::generator(GraphPtr graph, CoefficientDomain domain, GeneratorId v) {
  return basis(std::move(graph), domain, Clique{{v}});
}

void ExtElement::add_term(const Clique& c, const Coeff& coeff) {
  const Coeff n = domain_.normalize(coeff);
  if (n == 0) return;
  auto [it, inserted] = terms_.try_emplace(c, n);
  if (inserted) return;
  it->second = domain_.normalize(it->second + n);
  if (it->second == 0) terms_.erase(it);
}

void ExtElement::check_compatible(const ExtElement& y) const {
  if ((graph_ != y.graph_ && *graph_ != *y.graph_) || domain_ != y.domain_) {
    throw DomainError("exterior elements over different graphs or domains");
  }
}

ExtElement& ExtElement::operator+=(const ExtElement& y) {
  check_compatible(y);
  for (const auto& [c, a] : y.terms_) add_term(c, a);
  return *this;
}

ExtElement ExtElement::operator-() const {
  ExtElement out(graph_, domain_);
  for (const auto& [c, a] : terms_) out.add_term(c, -a);
  return out;
}

bool operator==(const ExtElement& x, const ExtElement& y) {
  return (x.graph_ == y.graph_ || *x.graph_ == *y.graph_) && x.domain_ == y.domain_ &&
         x.terms_ == y.terms_;
}

int basis_product_sign(const Graph& g, const Clique& c, const Clique& d) {
  // v_C v_D with both factors written in decreasing order; sorting the
  // concatenation into decreasing order needs one transposition for every
  // pair (x in C, y in D) with x < y.
  std::size_t inversions = 0;
  for (const auto x : c.members) {
    for (const auto y : d.members) {
      if (x == y) return 0;
      if (x < y) ++inversions;
      if (!g.adjacent(x, y)) return 0;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

ExtElement ext_mul(const ExtElement& x, const ExtElement& y) {
  x.check_compatible(y);
  ExtElement out = ExtElement(std::make_shared<const Graph>(x.graph()), x.domain());
  for (const auto& [c, a] : x.terms()) {
    for (const auto& [d, b] : y.terms()) {
      const int sign = basis_product_sign(x.graph(), c, d);
      if (sign == 0) continue;
      Clique u;
      std::merge(c.members.begin(), c.members.end(), d.members.begin(), d.members.end(),
                 std::back_inserter(u.members));
      out.add_term(u, sign * a * b);
    }
  }
  return out;
}

USeries poincare_poly(const Graph& g) {
  const auto counts = enumerate_cliques(g).counts();
  USeries out(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k) out[k] = static_cast<unsigned long>(counts[k]);
  return out;
}

QuadraticDualReport quadratic_dual_check(const Graph& g) {
  const std::size_t n = g.size();
  const auto index = [n](std::size_t v, std::size_t w) { return v * n + w; };
  using Vec = std::map<std::size_t, Coeff>;
  std::vector<Vec> rel_r;
  std::vector<Vec> rel_s;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w) {
      const bool edge = g.adjacent(static_cast<GeneratorId>(v), static_cast<GeneratorId>(w));
      if (edge && v < w) {
        rel_r.push_back(Vec{{index(v, w), 1}, {index(w, v), -1}});
        rel_s.push_back(Vec{{index(v, w), 1}, {index(w, v), 1}});
      } else if (!edge) {
        // non-edges, including v = w
        rel_s.push_back(Vec{{index(v, w), 1}});
      }
    }
  }
  QuadraticDualReport report;
  report.dimension = n * n;
  const auto q = CoefficientDomain::rationals();
  report.rank_r = rank_of(rel_r, q);
  report.rank_s = rank_of(rel_s, q);
  report.annihilate = true;
  for (const auto& r : rel_r) {
    for (const auto& s : rel_s) {
      Coeff pairing = 0;
      for (const auto& [k, c] : r) {
        const auto it = s.find(k);
        if (it != s.end()) pairing += c * it->second;
      }
      if (pairing != 0) report.annihilate = false;
    }
  }
  return report;
}

}  // namespace raag
