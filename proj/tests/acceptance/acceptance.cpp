// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "random_words.hpp"
#include "raag/growth.hpp"
#include "raag/hopf.hpp"
#include "raag/koszul.hpp"
#include "raag/lie_ranks.hpp"
#include "raag/magnus.hpp"
#include "suite.hpp"

namespace raag {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok || !pass) {
      pass = pass && ok;
      return;
    }
    pass = false;
    detail = what;
  }
};

std::vector<mpz_class> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

const auto Q = CoefficientDomain::rationals();
const auto F2 = CoefficientDomain::prime_field(2);

Outcome extreme_series() {
  Outcome o;
  const std::size_t m = 11;  // coefficients of t^0 .. t^10
  for (long d = 1; d <= 4; ++d) {
    const Graph k = Graph::complete(static_cast<std::size_t>(d));
    const Graph e = Graph::empty(static_cast<std::size_t>(d));
    const auto up = oracle::poly_pow(ints({1, 1}), static_cast<unsigned>(d));
    const auto down = oracle::poly_pow(ints({1, -1}), static_cast<unsigned>(d));
    const std::string tag = " d=" + std::to_string(d);
    o.require(phi_S(k, m).integer_coeffs() == oracle::divide(up, ints({1}), m), "Phi_S(K)" + tag);
    o.require(phi_R(k, m).integer_coeffs() == oracle::divide(ints({1}), down, m), "Phi_R(K)" + tag);
    o.require(phi_A(k, m).integer_coeffs() == oracle::divide(up, down, m), "Phi_A(K)" + tag);
    o.require(phi_S(e, m).integer_coeffs() == oracle::divide(ints({1, d}), ints({1}), m), "Phi_S(E)" + tag);
    o.require(phi_R(e, m).integer_coeffs() == oracle::divide(ints({1}), ints({1, -d}), m), "Phi_R(E)" + tag);
    o.require(phi_A(e, m).integer_coeffs() == oracle::divide(ints({1, 1}), ints({1, 1 - 2 * d}), m),
              "Phi_A(E)" + tag);
  }
  return o;
}

Outcome reciprocity() {
  Outcome o;
  for (const auto& [name, g] : suite::graphs()) {
    const std::size_t m = 10;  // exact through t^9
    o.require(phi_R(*g, m) * phi_S(*g, m).negate_variable() == USeries::constant(1, m), name);
  }
  return o;
}

Outcome growth_oracle() {
  Outcome o;
  for (const auto& [name, g] : suite::graphs()) {
    if (g->size() > 4) continue;
    const auto series = phi_A(*g, 6).integer_coeffs();
    const auto bfs = sphere_sizes(*g, 5);
    const auto piles = oracle::spheres(*g, 5);
    for (std::size_t n = 0; n <= 5; ++n) {
      o.require(series[n] == bfs[n] && series[n] == piles[n], name + " radius " + std::to_string(n));
    }
  }
  return o;
}

Outcome trace_counts() {
  Outcome o;
  for (const auto& [name, g] : suite::graphs()) {
    const auto a = phi_R(*g, 6).integer_coeffs();
    const auto q = magnus_span_rank(g, 2, 6, Q);
    const auto f2 = magnus_span_rank(g, 2, 6, F2);
    for (std::size_t n = 0; n <= 5; ++n) {
      const auto traces = enumerate_traces(*g, n).size();
      const std::string at = name + " n=" + std::to_string(n);
      o.require(a[n] == traces && traces == oracle::traces(*g, n).size(), at + " trace count");
      o.require(q[n] == traces && f2[n] == traces, at + " Magnus span rank");
    }
  }
  return o;
}

Outcome lie_ranks() {
  Outcome o;
  for (const auto& [name, g] : suite::graphs()) {
    const auto series = series_rank_lcs(*g, 5).values;
    for (std::size_t n = 1; n <= 5; ++n) {
      o.require(static_cast<long>(bracket_span_rank(g, n, Q)) == series[n - 1], name + " n=" + std::to_string(n));
    }
  }
  const GraphPtr e2 = share(Graph::empty(2));
  const std::vector<long> witt{2, 1, 2, 3, 6};
  o.require(series_rank_lcs(*e2, 5).values == witt, "E2 series route");
  o.require(bracket_rank_table(e2, Q, 5).values == witt, "E2 bracket route");
  return o;
}

Outcome restricted() {
  Outcome o;
  for (const auto& [name, g] : suite::graphs()) {
    const auto b = series_rank_lcs(*g, 5).values;
    for (const std::uint32_t p : {2U, 3U, 5U}) {
      const auto d = series_rank_restricted(*g, p, 5).values;
      o.require(d == restricted_from_lcs(b, p), name + " p=" + std::to_string(p) + " d_n vs b_m");
      for (std::size_t n = 1; n <= 5; ++n) {
        o.require(static_cast<long>(restricted_span_rank(g, n, p)) == d[n - 1],
                  name + " p=" + std::to_string(p) + " n=" + std::to_string(n));
      }
    }
  }
  return o;
}

Outcome lambda_series() {
  Outcome o;
  std::mt19937 rng(7);
  for (const auto& [name, g] : suite::graphs()) {
    const auto b = series_rank_lcs(*g, 6).values;
    for (const std::uint32_t p : {3U, 5U}) {
      const auto l = lambda_dims(*g, p, 6).values;
      long acc = 0;
      for (std::size_t n = 0; n < 6; ++n) o.require(l[n] == (acc += b[n]), name + " partial sums");
    }
    // g in γ_m raised to p^i lies in 1 + ϖ_p^{m+i}
    for (std::size_t m = 1; m <= 3; ++m) {
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<GeneratorId> xs(m);
        for (auto& x : xs) x = static_cast<GeneratorId>(rng() % g->size());
        GroupWord c = generator_word(xs.back(), 1, *g);
        for (std::size_t k = m - 1; k-- > 0;) c = commutator(generator_word(xs[k], 1, *g), c, *g);
        for (const std::uint32_t p : {3U, 5U}) {
          long q = 1;
          for (std::size_t i = 0; m + i <= 4; ++i, q *= p) {
            const auto v = omega_p_valuation(power(c, q, *g), g, p, 7);
            o.require(v.value >= m + i, name + " valuation of a commutator power");
          }
        }
      }
    }
  }
  for (std::size_t d = 1; d <= 4; ++d) {
    for (const long x : lambda_dims(Graph::complete(d), 3, 6).values) {
      o.require(x == static_cast<long>(d), "K_" + std::to_string(d) + " not constant");
    }
  }
  return o;
}

Outcome injectivity() {
  Outcome o;
  for (const auto& [name, g] : suite::graphs()) {
    const auto elements = ball(*g, 3);
    for (const auto& d : {CoefficientDomain::integers(), F2}) {
      std::set<PCSeries::Terms> images;
      for (const auto& w : elements) images.insert(magnus(w, g, d, 7).terms());
      o.require(images.size() == elements.size(), name + " over " + d.name());
    }
  }
  return o;
}

Outcome leading_monomials() {
  Outcome o;
  std::mt19937 rng(11);
  for (const auto& [name, g] : suite::graphs()) {
    std::vector<GroupWord> words = ball(*g, 2);
    for (int k = 0; k < 100; ++k) words.push_back(suite::random_word(*g, rng, 4, 9));
    for (const std::uint32_t p : {2U, 3U, 5U}) {
      for (const auto& w : words) {
        if (w.is_identity()) continue;
        const auto brute = leading_monomial_from_expansion(w, g, p);
        o.require(brute && *brute == leading_monomial_char_p(w, *g, p),
                  name + " p=" + std::to_string(p) + " " + format_word(w, *g));
      }
    }
  }
  return o;
}

Outcome koszul() {
  Outcome o;
  for (const auto& [name, g] : suite::graphs()) {
    for (const auto& d : {Q, F2}) {
      const auto r = verify_resolution(g, 6, d);
      o.require(r.ok(), name + " over " + d.name() + ": " + r.counterexample.value_or("euler"));
    }
  }
  return o;
}

Outcome hopf() {
  Outcome o;
  std::mt19937 rng(13);
  const unsigned n = 6;
  for (const auto& [name, g] : suite::graphs()) {
    for (GeneratorId v = 0; v < g->size(); ++v) {
      o.require(is_grouplike(exp_series(PCSeries::generator(g, Q, n, v))), name + " exp(v)");
    }
    for (int trial = 0; trial < 10; ++trial) {
      PCSeries x = PCSeries::one(g, Q, n);
      for (int k = 0; k < 4; ++k) {
        const auto v = static_cast<GeneratorId>(rng() % g->size());
        mpq_class c(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3);
        c.canonicalize();
        x = x * exp_series(PCSeries::generator(g, Q, n, v) * c);
      }
      o.require(is_grouplike(x) && is_primitive(log_series(x)), name + " log of a grouplike product");
    }
    for (const auto& w : ball(*g, 2)) {
      const PCSeries m = magnus_exp(w, g, n);
      o.require(coproduct(m) == TensorSeries::tensor(m, m), name + " " + format_word(w, *g));
    }
  }
  return o;
}

Outcome union_join() {
  Outcome o;
  const auto& s = suite::graphs();
  for (const auto& [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {2, 3}, {1, 4}}) {
    const auto r = union_join_identities(*s[i].graph, *s[j].graph, 11);
    for (const auto& c : r.checks) o.require(c.holds, s[i].name + "," + s[j].name + " " + c.name);
  }
  return o;
}

}  // namespace
}  // namespace raag

int main() {
  using raag::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"extreme-case series for K_d and empty graphs, d <= 4, through t^10", raag::extreme_series},
      {"Phi_R(t) Phi_S(-t) = 1 + O(t^10) on the suite", raag::reciprocity},
      {"BFS sphere counts = Phi_A, |V| <= 4, radius <= 5", raag::growth_oracle},
      {"a_n = trace count = Magnus span rank, n <= 5, Q and F2", raag::trace_counts},
      {"bracket span rank (Q) = series recursion, n <= 5; E2 gives 2,1,2,3,6", raag::lie_ranks},
      {"restricted span rank = series recursion = sum of b_m, p in {2,3,5}, n <= 5", raag::restricted},
      {"lambda dims are partial sums of b_m; K_d constant; commutator powers", raag::lambda_series},
      {"Magnus map injective on radius-3 balls, N = 7, Z and F2", raag::injectivity},
      {"leading monomial formula = series extraction, p in {2,3,5}", raag::leading_monomials},
      {"Koszul d^2 = 0 and sd + ds = 1 - eps, degree < 6, Q and F2", raag::koszul},
      {"exp(v) grouplike, logs primitive, Magnus exponential grouplike, N = 6", raag::hopf},
      {"union and join identities through t^10, three pairs", raag::union_join},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu %s  %s (%.2fs)%s%s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                secs, o.pass ? "" : ": ", o.detail.c_str());
    if (!o.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
