#include "raag/koszul.hpp"

#include <algorithm>

#include "raag/error.hpp"
#include "raag/limits.hpp"

namespace raag {

KoszulElement::KoszulElement(GraphPtr graph, CoefficientDomain domain, unsigned order)
    : graph_(std::move(graph)), domain_(domain), order_(order) {
  if (!graph_) throw InvalidArgument("Koszul element without a graph");
}

KoszulElement KoszulElement::basis(GraphPtr graph, CoefficientDomain domain, unsigned order,
                                   const Clique& c, const Trace& r, const Coeff& coeff) {
  if (!graph->is_clique(c.members) || !std::is_sorted(c.members.begin(), c.members.end())) {
    throw InvalidArgument("not a clique of the graph");
  }
  KoszulElement x(std::move(graph), domain, order);
  x.add_term(c, r, coeff);
  return x;
}

void KoszulElement::add_term(const Clique& c, const Trace& r, const Coeff& coeff) {
  if (c.size() + r.size() >= order_) return;
  const Coeff n = domain_.normalize(coeff);
  if (n == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{c, r}, n);
  if (inserted) return;
  it->second = domain_.normalize(it->second + n);
  if (it->second == 0) terms_.erase(it);
}

void KoszulElement::check_compatible(const KoszulElement& y) const {
  if ((graph_ != y.graph_ && *graph_ != *y.graph_) || domain_ != y.domain_ || order_ != y.order_) {
    throw DomainError("Koszul elements over different graphs, domains or orders");
  }
}

KoszulElement& KoszulElement::operator+=(const KoszulElement& y) {
  check_compatible(y);
  for (const auto& [k, a] : y.terms_) add_term(k.first, k.second, a);
  return *this;
}

KoszulElement& KoszulElement::operator-=(const KoszulElement& y) {
  check_compatible(y);
  for (const auto& [k, a] : y.terms_) add_term(k.first, k.second, -a);
  return *this;
}

bool operator==(const KoszulElement& x, const KoszulElement& y) {
  return (x.graph_ == y.graph_ || *x.graph_ == *y.graph_) && x.domain_ == y.domain_ &&
         x.order_ == y.order_ && x.terms_ == y.terms_;
}

std::string KoszulElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, a] : terms_) {
    if (!out.empty()) out += " + ";
    out += raag::to_string(a) + "*v{";
    for (std::size_t i = 0; i < k.first.size(); ++i) {
      if (i > 0) out += ",";
      out += graph_->name(k.first.members[i]);
    }
    out += "}";
    if (!k.second.empty()) out += "*" + k.second.to_string(*graph_);
  }
  return out;
}

KoszulElement differential(const KoszulElement& x) {
  KoszulElement out(x.graph_ptr(), x.domain(), x.order());
  for (const auto& [k, a] : x.terms()) {
    const auto& [c, r] = k;
    for (std::size_t j = 0; j < c.size(); ++j) {
      Clique rest = c;
      rest.members.erase(rest.members.begin() + static_cast<std::ptrdiff_t>(j));
      const Trace front = Trace::from_canonical({c.members[j]});
      out.add_term(rest, concat(front, r, x.graph()), j % 2 == 0 ? a : Coeff(-a));
    }
  }
  return out;
}

KoszulElement contraction(const KoszulElement& x) {
  const Graph& g = x.graph();
  KoszulElement out(x.graph_ptr(), x.domain(), x.order());
  for (const auto& [k, a] : x.terms()) {
    const auto& [c, w] = k;
    for (const auto v : front_letters(w, g)) {
      if (!c.members.empty() && v >= c.min()) break;
      bool clique = true;
      for (const auto u : c.members) clique = clique && g.adjacent(u, v);
      if (!clique) continue;
      Clique bigger = c;
      bigger.members.insert(bigger.members.begin(), v);
      out.add_term(bigger, remove_front(w, v, g), a);
      break;
    }
  }
  return out;
}

KoszulElement augmentation_part(const KoszulElement& x) {
  KoszulElement out(x.graph_ptr(), x.domain(), x.order());
  for (const auto& [k, a] : x.terms()) {
    if (k.first.members.empty() && k.second.empty()) out.add_term(k.first, k.second, a);
  }
  return out;
}

ResolutionReport verify_resolution(GraphPtr graph, unsigned order, const CoefficientDomain& domain) {
  const Graph& g = *graph;
  ResolutionReport report;
  const auto cliques = enumerate_cliques(g);
  report.bigraded_ranks.assign(cliques.by_size.size(), std::vector<std::size_t>(order, 0));
  std::vector<std::vector<Trace>> traces(order);
  for (unsigned n = 0; n < order; ++n) traces[n] = enumerate_traces(g, n);

  auto fail = [&](bool& flag, const KoszulElement& x) {
    flag = false;
    if (!report.counterexample) report.counterexample = x.to_string();
  };

  for (std::size_t s = 0; s < cliques.by_size.size() && s < order; ++s) {
    for (const auto& c : cliques.by_size[s]) {
      for (std::size_t r = 0; s + r < order; ++r) {
        for (const auto& w : traces[r]) {
          check_state_budget(++report.basis_checked, "Koszul basis");
          ++report.bigraded_ranks[s][r];
          const auto x = KoszulElement::basis(graph, domain, order, c, w);
          const auto dx = differential(x);
          if (!differential(dx).is_zero()) fail(report.d_squared_zero, x);
          const auto homotopy = contraction(dx) + differential(contraction(x));
          if (!(homotopy == x - augmentation_part(x))) fail(report.contraction_identity, x);
        }
      }
    }
  }

  for (std::size_t n = 0; n < order; ++n) {
    long chi = 0;
    for (std::size_t s = 0; s <= n && s < report.bigraded_ranks.size(); ++s) {
      const auto count = static_cast<long>(report.bigraded_ranks[s][n - s]);
      chi += s % 2 == 0 ? count : -count;
    }
    if (chi != (n == 0 ? 1 : 0)) report.euler_characteristic = false;
  }
  return report;
}

}  // namespace raag
