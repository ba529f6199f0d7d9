#include "raag/lie_ranks.hpp"

#include <algorithm>

#include "raag/error.hpp"
#include "raag/growth.hpp"
#include "raag/hopf.hpp"
#include "raag/limits.hpp"
#include "raag/linalg.hpp"
#include "raag/useries.hpp"

namespace raag {
namespace {

using Poly = std::map<Trace, Coeff>;

void clean(Poly& p, const CoefficientDomain& domain) {
  for (auto it = p.begin(); it != p.end();) {
    it->second = domain.normalize(it->second);
    it = it->second == 0 ? p.erase(it) : std::next(it);
  }
}

Poly multiply(const Poly& x, const Poly& y, const Graph& g, const CoefficientDomain& domain) {
  Poly out;
  for (const auto& [tx, cx] : x) {
    for (const auto& [ty, cy] : y) out[concat(tx, ty, g)] += cx * cy;
  }
  clean(out, domain);
  return out;
}

// [v_1,[v_2,[...,v_n]]] for the letters in order.
Poly left_normed(const std::vector<GeneratorId>& letters, const Graph& g,
                 const CoefficientDomain& domain) {
  Poly acc{{Trace::from_canonical({letters.back()}), 1}};
  for (std::size_t i = letters.size() - 1; i-- > 0;) {
    const Poly v{{Trace::from_canonical({letters[i]}), 1}};
    Poly next = multiply(v, acc, g, domain);
    for (const auto& [t, c] : multiply(acc, v, g, domain)) next[t] -= c;
    clean(next, domain);
    acc = std::move(next);
  }
  return acc;
}

// Calls f(letters) for every nondecreasing sequence of n letters.
template <class F>
void for_each_content(std::size_t vertices, std::size_t n, F&& f) {
  std::vector<GeneratorId> letters(n, 0);
  if (n == 0 || vertices == 0) return;
  while (true) {
    f(letters);
    std::size_t i = n;
    while (i > 0 && letters[i - 1] + 1U == vertices) --i;
    if (i == 0) return;
    const auto next = static_cast<GeneratorId>(letters[i - 1] + 1);
    for (std::size_t j = i - 1; j < n; ++j) letters[j] = next;
  }
}

// Adds every left-normed bracket with the given content to `basis`.
void insert_brackets(std::vector<GeneratorId> content, const Graph& g,
                     const CoefficientDomain& domain, EchelonBasis<Trace>& basis,
                     std::size_t& visited) {
  do {
    check_state_budget(++visited, "left-normed brackets");
    Poly p = left_normed(content, g, domain);
    if (!p.empty()) basis.insert(std::move(p));
  } while (std::next_permutation(content.begin(), content.end()));
}

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not a prime");
}

}  // namespace

std::string to_string(RankKind k) {
  switch (k) {
    case RankKind::LowerCentral: return "lower_central";
    case RankKind::Restricted: return "restricted";
    case RankKind::ExponentP: return "exponent_p";
  }
  return "unknown";
}

std::string to_string(RankMethod m) {
  return m == RankMethod::BracketSpan ? "bracket_span" : "series_recursion";
}

std::vector<PCSeries> left_normed_brackets(GraphPtr graph, const CoefficientDomain& domain,
                                           std::size_t n) {
  if (n == 0) throw InvalidArgument("brackets have degree at least 1");
  const Graph& g = *graph;
  const auto order = static_cast<unsigned>(n + 1);
  std::vector<PCSeries> out;
  std::vector<GeneratorId> letters(n, 0);
  while (true) {
    check_state_budget(out.size() + 1, "left-normed brackets");
    PCSeries s(graph, domain, order);
    for (const auto& [t, c] : left_normed(letters, g, domain)) s.add_term(t, c);
    out.push_back(std::move(s));
    std::size_t i = n;
    while (i > 0 && letters[i - 1] + 1U == g.size()) letters[--i] = 0;
    if (i == 0) break;
    ++letters[i - 1];
  }
  return out;
}

std::size_t bracket_span_rank(GraphPtr graph, std::size_t n, const CoefficientDomain& domain) {
  if (!domain.is_field()) throw InvalidArgument("bracket_span_rank needs a field");
  if (n == 0) return 0;
  const Graph& g = *graph;
  std::size_t rank = 0;
  std::size_t visited = 0;
  // Brackets are multihomogeneous, so the span splits by content.
  for_each_content(g.size(), n, [&](const std::vector<GeneratorId>& content) {
    EchelonBasis<Trace> basis(domain);
    insert_brackets(content, g, domain, basis, visited);
    rank += basis.rank();
  });
  return rank;
}

std::size_t restricted_span_rank(GraphPtr graph, std::size_t n, std::uint32_t p) {
  require_prime(p);
  if (n == 0) return 0;
  const auto domain = CoefficientDomain::prime_field(p);
  const Graph& g = *graph;
  std::size_t rank = 0;
  std::size_t visited = 0;
  for_each_content(g.size(), n, [&](const std::vector<GeneratorId>& content) {
    EchelonBasis<Trace> basis(domain);
    insert_brackets(content, g, domain, basis, visited);
    // p^i-th powers of brackets whose content is content / p^i.
    std::vector<std::size_t> mult(g.size(), 0);
    for (const auto v : content) ++mult[v];
    std::size_t q = p;
    while (n % q == 0) {
      if (std::any_of(mult.begin(), mult.end(), [q](std::size_t k) { return k % q != 0; })) break;
      std::vector<GeneratorId> root;
      for (std::size_t v = 0; v < mult.size(); ++v) {
        root.insert(root.end(), mult[v] / q, static_cast<GeneratorId>(v));
      }
      do {
        check_state_budget(++visited, "restricted powers");
        const Poly b = left_normed(root, g, domain);
        if (b.empty()) continue;
        Poly power{{Trace{}, 1}};
        for (std::size_t k = 0; k < q; ++k) power = multiply(power, b, g, domain);
        if (!power.empty()) basis.insert(std::move(power));
      } while (std::next_permutation(root.begin(), root.end()));
      q *= p;
    }
    rank += basis.rank();
  });
  return rank;
}

RankTable series_rank_lcs(const Graph& g, std::size_t upto) {
  const USeries l = log(phi_R(g, upto + 1));
  RankTable t;
  t.kind = RankKind::LowerCentral;
  t.method = RankMethod::SeriesRecursion;
  t.domain = "Z";
  std::vector<mpq_class> b(upto + 1);
  for (std::size_t n = 1; n <= upto; ++n) {
    mpq_class acc = l[n] * static_cast<unsigned long>(n);
    for (std::size_t m = 1; m < n; ++m) {
      if (n % m == 0) acc -= b[m] * static_cast<unsigned long>(m);
    }
    b[n] = acc / static_cast<unsigned long>(n);
    if (b[n].get_den() != 1) throw DomainError("non-integral lower central rank");
    t.values.push_back(b[n].get_num().get_si());
  }
  return t;
}

RankTable series_rank_restricted(const Graph& g, std::uint32_t p, std::size_t upto) {
  require_prime(p);
  const std::size_t order = upto + 1;
  USeries rest = phi_R(g, order);
  RankTable t;
  t.kind = RankKind::Restricted;
  t.method = RankMethod::SeriesRecursion;
  t.domain = CoefficientDomain::prime_field(p).name();
  for (std::size_t n = 1; n <= upto; ++n) {
    const mpq_class d = rest[n];
    if (d.get_den() != 1 || d < 0) throw DomainError("restricted rank recursion left Z_{>=0}");
    const long dn = d.get_num().get_si();
    t.values.push_back(dn);
    if (dn == 0) continue;
    // Divide out ((1 − t^{pn})/(1 − t^n))^{d_n}.
    const USeries one = USeries::constant(1, order);
    USeries num = one;
    USeries den = one;
    num[n] = -1;
    if (static_cast<std::size_t>(p) * n < order) den[p * n] = -1;
    rest = rest * pow(num * reciprocal(den), dn);
  }
  return t;
}

RankTable lambda_dims(const Graph& g, std::uint32_t p, std::size_t upto) {
  require_prime(p);
  if (p == 2) throw InvalidArgument("the exponent-p series needs an odd prime");
  RankTable t = series_rank_lcs(g, upto);
  t.kind = RankKind::ExponentP;
  t.domain = CoefficientDomain::prime_field(p).name();
  long acc = 0;
  for (auto& v : t.values) {
    acc += v;
    v = acc;
  }
  return t;
}

std::vector<long> restricted_from_lcs(const std::vector<long>& b, std::uint32_t p) {
  require_prime(p);
  std::vector<long> d(b.size(), 0);
  for (std::size_t m = 1; m <= b.size(); ++m) {
    for (std::size_t n = m; n <= b.size(); n *= p) d[n - 1] += b[m - 1];
  }
  return d;
}

RankTable bracket_rank_table(GraphPtr graph, const CoefficientDomain& domain, std::size_t upto) {
  RankTable t;
  t.kind = RankKind::LowerCentral;
  t.method = RankMethod::BracketSpan;
  t.domain = domain.name();
  for (std::size_t n = 1; n <= upto; ++n) {
    t.values.push_back(static_cast<long>(bracket_span_rank(graph, n, domain)));
  }
  return t;
}

RankTable restricted_rank_table(GraphPtr graph, std::uint32_t p, std::size_t upto) {
  RankTable t;
  t.kind = RankKind::Restricted;
  t.method = RankMethod::BracketSpan;
  t.domain = CoefficientDomain::prime_field(p).name();
  for (std::size_t n = 1; n <= upto; ++n) {
    t.values.push_back(static_cast<long>(restricted_span_rank(graph, n, p)));
  }
  return t;
}

PrimitivityResult primitivity_check(GraphPtr graph, std::size_t n, unsigned order,
                                    const CoefficientDomain& domain) {
  if (order <= n) throw InvalidArgument("truncation order must exceed the bracket degree");
  PrimitivityResult r;
  for (auto& b : left_normed_brackets(graph, domain, n)) {
    PCSeries x = b.truncated(order);
    if (!is_primitive(x)) {
      r.ok = false;
      r.witness = std::move(x);
      return r;
    }
  }
  return r;
}

}  // namespace raag
