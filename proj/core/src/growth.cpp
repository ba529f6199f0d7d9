#include "raag/growth.hpp"

#include <algorithm>

#include "raag/exterior.hpp"
#include "raag/group_word.hpp"

namespace raag {
namespace {

std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<mpz_class> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<mpz_class> poly_pow(const std::vector<mpz_class>& a, std::size_t k) {
  std::vector<mpz_class> out{1};
  for (std::size_t i = 0; i < k; ++i) out = poly_mul(out, a);
  return out;
}

void poly_add_scaled(std::vector<mpz_class>& acc, const std::vector<mpz_class>& p, const mpz_class& c) {
  if (acc.size() < p.size()) acc.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) acc[i] += c * p[i];
}

}  // namespace

USeries phi_S(const Graph& g, std::size_t order) {
  const USeries poly = poincare_poly(g);
  return USeries(poly.coeffs(), order);
}

USeries phi_R(const Graph& g, std::size_t order) {
  return reciprocal(phi_S(g, order).negate_variable());
}

USeries phi_A(const Graph& g, std::size_t order) {
  // 2t/(1+t) = 2t − 2t² + 2t³ − ...
  USeries sub(order);
  for (std::size_t i = 1; i < order; ++i) sub[i] = (i % 2 == 1) ? 2 : -2;
  return compose(phi_R(g, order), sub);
}

RatFunc phi_R_closed_form(const Graph& g) {
  const auto counts = enumerate_cliques(g).counts();
  RatFunc f;
  f.numerator = {1};
  for (std::size_t k = 0; k < counts.size(); ++k) {
    f.denominator.push_back(k % 2 == 0 ? mpz_class(counts[k]) : mpz_class(-static_cast<long>(counts[k])));
  }
  return f;
}

RatFunc phi_A_closed_form(const Graph& g) {
  const auto counts = enumerate_cliques(g).counts();
  const std::size_t omega = counts.size() - 1;
  const std::vector<mpz_class> one_plus_t{1, 1};
  RatFunc f;
  f.numerator = poly_pow(one_plus_t, omega);
  // Φ_S(−2t/(1+t))·(1+t)^ω = Σ c_k (−2t)^k (1+t)^{ω−k}.
  for (std::size_t k = 0; k <= omega; ++k) {
    std::vector<mpz_class> term = poly_pow(one_plus_t, omega - k);
    std::vector<mpz_class> shift(k + 1);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, k);
    shift[k] = (k % 2 == 0) ? scale : mpz_class(-scale);
    poly_add_scaled(f.denominator, poly_mul(term, shift), mpz_class(static_cast<unsigned long>(counts[k])));
  }
  while (f.denominator.size() > 1 && f.denominator.back() == 0) f.denominator.pop_back();
  return f;
}

std::vector<std::size_t> ball_growth_oracle(const Graph& g, std::size_t radius) {
  std::vector<std::size_t> spheres(radius + 1, 0);
  for (const auto& w : ball(g, radius)) {
    const mpz_class len = word_length(w);
    spheres.at(len.get_ui()) += 1;
  }
  return spheres;
}

bool UnionJoinReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
}

UnionJoinReport union_join_identities(const Graph& g1, const Graph& g2, std::size_t order) {
  const Graph u = disjoint_union(g1, g2);
  const Graph j = join(g1, g2);
  const USeries one = USeries::constant(1, order);
  auto defect = [&](const USeries& f) { return one - reciprocal(f); };

  UnionJoinReport r;
  r.checks.push_back({"union: 1 - 1/Phi_A additive",
                      defect(phi_A(u, order)) == defect(phi_A(g1, order)) + defect(phi_A(g2, order))});
  r.checks.push_back({"union: 1 - 1/Phi_R additive",
                      defect(phi_R(u, order)) == defect(phi_R(g1, order)) + defect(phi_R(g2, order))});
  r.checks.push_back({"union: 1 - Phi_S additive",
                      one - phi_S(u, order) == (one - phi_S(g1, order)) + (one - phi_S(g2, order))});
  r.checks.push_back({"join: Phi_A multiplicative", phi_A(j, order) == phi_A(g1, order) * phi_A(g2, order)});
  r.checks.push_back({"join: Phi_R multiplicative", phi_R(j, order) == phi_R(g1, order) * phi_R(g2, order)});
  r.checks.push_back({"join: Phi_S multiplicative", phi_S(j, order) == phi_S(g1, order) * phi_S(g2, order)});
  return r;
}

}  // namespace raag
