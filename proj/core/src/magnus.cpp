#include "raag/magnus.hpp"

#include <algorithm>
#include <limits>

#include "raag/error.hpp"
#include "raag/limits.hpp"
#include "raag/linalg.hpp"

namespace raag {
namespace {

// Σ_{k < order} binom(e, k) v^k, i.e. (1+v)^e for any integer e.
PCSeries binomial_factor(GeneratorId v, const mpz_class& e, const GraphPtr& graph,
                         const CoefficientDomain& domain, unsigned order) {
  PCSeries out(graph, domain, order);
  mpq_class c = 1;
  std::vector<GeneratorId> letters;
  for (unsigned k = 0; k < order; ++k) {
    if (k > 0) {
      c *= mpq_class(e - (k - 1));
      c /= k;
      if (c == 0) break;
      letters.push_back(v);
    }
    out.add_term(Trace::from_canonical(letters), c);
  }
  return out;
}

PCSeries exp_factor(GeneratorId v, const mpz_class& e, const GraphPtr& graph, unsigned order) {
  PCSeries out(graph, CoefficientDomain::rationals(), order);
  mpq_class c = 1;
  std::vector<GeneratorId> letters;
  for (unsigned k = 0; k < order; ++k) {
    if (k > 0) {
      c *= mpq_class(e);
      c /= k;
      letters.push_back(v);
    }
    out.add_term(Trace::from_canonical(letters), c);
  }
  return out;
}

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not a prime");
}

}  // namespace

PCSeries magnus(const GroupWord& w, GraphPtr graph, const CoefficientDomain& domain, unsigned order) {
  PCSeries out = PCSeries::one(graph, domain, order);
  for (const auto& s : w.syllables()) out = out * binomial_factor(s.generator, s.exponent, graph, domain, order);
  return out;
}

PCSeries magnus_exp(const GroupWord& w, GraphPtr graph, unsigned order) {
  PCSeries out = PCSeries::one(graph, CoefficientDomain::rationals(), order);
  for (const auto& s : w.syllables()) out = out * exp_factor(s.generator, s.exponent, graph, order);
  return out;
}

Valuation omega_valuation(const GroupWord& w, GraphPtr graph, const CoefficientDomain& domain,
                          unsigned order) {
  const auto low = magnus(w, std::move(graph), domain, order).lowest_degree(true);
  if (!low) return Valuation{order, false};
  return Valuation{*low, true};
}

Valuation omega_p_valuation(const GroupWord& w, GraphPtr graph, std::uint32_t p, unsigned order) {
  require_prime(p);
  const PCSeries m = magnus(w, std::move(graph), CoefficientDomain::integers(), order);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& [t, c] : m.terms()) {
    if (t.empty()) continue;
    best = std::min<std::size_t>(best, t.size() + p_adic_valuation(c.get_num(), p));
  }
  if (best < order) return Valuation{best, true};
  return Valuation{order, false};
}

ValuationReport valuation_report(const GroupWord& w, GraphPtr graph,
                                 const CoefficientDomain& domain, unsigned order,
                                 std::optional<std::uint32_t> prime) {
  ValuationReport r;
  r.element = w;
  r.domain = domain;
  r.order = order;
  r.omega = omega_valuation(w, graph, domain, order);
  if (prime) {
    r.prime = *prime;
    r.omega_p = omega_p_valuation(w, graph, *prime, order);
  }
  return r;
}

Membership dimension_subgroup_membership(const GroupWord& w, GraphPtr graph,
                                         const CoefficientDomain& domain, std::size_t n,
                                         unsigned order) {
  const Valuation v = omega_valuation(w, std::move(graph), domain, order);
  if (v.exact) return v.value >= n ? Membership::In : Membership::NotIn;
  return n <= v.value ? Membership::In : Membership::Undecided;
}

std::size_t syllable_count(const Trace& t, const Graph& g) {
  std::vector<Syllable> word;
  word.reserve(t.size());
  for (const auto v : t.letters()) word.push_back(Syllable{v, 1});
  return reduce_word(std::move(word), g).syllable_count();
}

LeadingMonomial leading_monomial_char_p(const GroupWord& w, const Graph& g, std::uint32_t p) {
  require_prime(p);
  if (w.is_identity()) throw InvalidArgument("leading monomial of the identity");
  LeadingMonomial out;
  std::vector<GeneratorId> letters;
  mpz_class coeff = 1;
  for (const auto& s : w.syllables()) {
    const unsigned v = p_adic_valuation(s.exponent, p);
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, v);
    check_state_budget(letters.size() + q.get_ui(), "leading monomial length");
    for (unsigned long i = 0; i < q.get_ui(); ++i) letters.push_back(s.generator);
    out.pattern.emplace_back(s.generator, q);
    coeff *= s.exponent / q;
  }
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), coeff.get_mpz_t(), p);
  out.coefficient = static_cast<std::uint32_t>(r.get_ui());
  out.monomial = Trace::canonical(letters, g);
  return out;
}

unsigned leading_monomial_order(const GroupWord& w, std::uint32_t p) {
  require_prime(p);
  mpz_class total = 1;
  for (const auto& s : w.syllables()) {
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, p_adic_valuation(s.exponent, p));
    total += q;
  }
  if (total > 1'000'000) throw ResourceLimitError("leading monomial lies beyond degree 10^6");
  return static_cast<unsigned>(total.get_ui());
}

std::optional<LeadingMonomial> leading_monomial_from_expansion(const GroupWord& w, GraphPtr graph,
                                                               std::uint32_t p) {
  const unsigned order = leading_monomial_order(w, p);
  const Graph& g = *graph;
  const PCSeries m = magnus(w, graph, CoefficientDomain::prime_field(p), order);
  std::size_t best_syllables = 0;
  std::vector<std::pair<Trace, Coeff>> best;
  for (const auto& [t, c] : m.terms()) {
    if (t.empty()) continue;
    const std::size_t k = syllable_count(t, g);
    if (k > best_syllables) {
      best_syllables = k;
      best.clear();
    }
    if (k == best_syllables) best.emplace_back(t, c);
  }
  if (best.empty()) return std::nullopt;
  // Terms arrive in shortlex order, so the lowest degree comes first.
  const std::size_t degree = best.front().first.size();
  if (best.size() > 1 && best[1].first.size() == degree) return std::nullopt;

  LeadingMonomial out;
  out.monomial = best.front().first;
  out.coefficient = static_cast<std::uint32_t>(best.front().second.get_num().get_ui());
  std::vector<Syllable> word;
  for (const auto v : out.monomial.letters()) word.push_back(Syllable{v, 1});
  const GroupWord reduced = reduce_word(std::move(word), g);
  for (const auto& s : reduced.syllables()) {
    out.pattern.emplace_back(s.generator, s.exponent);
  }
  return out;
}

std::vector<std::size_t> magnus_span_rank(GraphPtr graph, std::size_t radius, unsigned order,
                                          const CoefficientDomain& domain) {
  if (!domain.is_field()) throw InvalidArgument("magnus_span_rank needs a field");
  const Graph& g = *graph;
  using Vec = EchelonBasis<Trace>::Vector;

  // Leading forms of μ(x) − 1, grouped by valuation.
  std::vector<EchelonBasis<Trace>> leading(order, EchelonBasis<Trace>(domain));
  for (const auto& x : ball(g, radius)) {
    if (x.is_identity()) continue;
    const PCSeries m = magnus(x, graph, domain, order);
    const auto low = m.lowest_degree(true);
    if (!low) continue;
    const PCSeries form = m.degree_part(*low);
    Vec v(form.terms().begin(), form.terms().end());
    leading[*low].insert(std::move(v));
  }

  std::vector<std::vector<Vec>> spans(order);
  std::vector<std::size_t> ranks(order, 0);
  if (order == 0) return ranks;
  spans[0] = {Vec{{Trace{}, 1}}};
  ranks[0] = 1;
  for (std::size_t n = 1; n < order; ++n) {
    const std::size_t full = enumerate_traces(g, n).size();
    EchelonBasis<Trace> span(domain);
    for (std::size_t m = 1; m <= n && span.rank() < full; ++m) {
      const auto left = leading[m].rows();
      for (const auto& x : left) {
        for (const auto& y : spans[n - m]) {
          Vec product;
          for (const auto& [tx, cx] : x) {
            for (const auto& [ty, cy] : y) product[concat(tx, ty, g)] += cx * cy;
          }
          std::erase_if(product, [&](const auto& kv) { return domain.normalize(kv.second) == 0; });
          span.insert(std::move(product));
          if (span.rank() == full) break;
        }
        if (span.rank() == full) break;
      }
    }
    ranks[n] = span.rank();
    spans[n] = span.rows();
  }
  return ranks;
}

}  // namespace raag
