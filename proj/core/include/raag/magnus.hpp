#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "raag/group_word.hpp"
#include "raag/pc_series.hpp"

namespace raag {

/// μ(w): v^e ↦ (1+v)^e, multiplied out and truncated below degree `order`.
PCSeries magnus(const GroupWord& w, GraphPtr graph, const CoefficientDomain& domain, unsigned order);

/// μ_exp(w): v^e ↦ exp(e·v), over Q.
PCSeries magnus_exp(const GroupWord& w, GraphPtr graph, unsigned order);

/// A filtration degree that is either exact or only bounded below by the
/// truncation order.
struct Valuation {
  std::size_t value = 0;
  bool exact = false;  // false: the true value is >= value (== order)
};

struct ValuationReport {
  GroupWord element;
  CoefficientDomain domain = CoefficientDomain::rationals();
  unsigned order = 0;
  Valuation omega;
  std::optional<std::uint32_t> prime;  // set when omega_p was computed
  std::optional<Valuation> omega_p;
};

/// Lowest degree of a nonzero term of μ(w) − 1 in `domain`.
Valuation omega_valuation(const GroupWord& w, GraphPtr graph, const CoefficientDomain& domain,
                          unsigned order);

/// Least ϖ_p-weight len(m) + v_p(c) over the nonconstant terms c·m of μ(w)
/// computed over Z.
Valuation omega_p_valuation(const GroupWord& w, GraphPtr graph, std::uint32_t p, unsigned order);

ValuationReport valuation_report(const GroupWord& w, GraphPtr graph,
                                 const CoefficientDomain& domain, unsigned order,
                                 std::optional<std::uint32_t> prime);

enum class Membership { In, NotIn, Undecided };

/// Whether w ∈ μ^{-1}(1 + ϖ^n) in `domain`, answered from a truncation at `order`.
Membership dimension_subgroup_membership(const GroupWord& w, GraphPtr graph,
                                         const CoefficientDomain& domain, std::size_t n,
                                         unsigned order);

struct LeadingMonomial {
  Trace monomial;
  /// (generator, p^s) per syllable of the canonical form.
  std::vector<std::pair<GeneratorId, mpz_class>> pattern;
  std::uint32_t coefficient = 0;  // in F_p, nonzero

  friend bool operator==(const LeadingMonomial&, const LeadingMonomial&) = default;
};

/// Closed form: for the canonical form v_1^{e_1}···v_n^{e_n} with
/// e_i = p^{s_i}·l_i, p ∤ l_i, the monomial v_1^{p^{s_1}}···v_n^{p^{s_n}} with
/// coefficient Π l_i mod p. Throws InvalidArgument on the identity.
LeadingMonomial leading_monomial_char_p(const GroupWord& w, const Graph& g, std::uint32_t p);

/// The same monomial read off μ(w) expanded over F_p: among nonzero terms the
/// ones with the most syllables, then the lowest degree. Returns nullopt when
/// that choice is not unique.
std::optional<LeadingMonomial> leading_monomial_from_expansion(const GroupWord& w, GraphPtr graph,
                                                               std::uint32_t p);

/// Degree at which the expansion route must truncate to see the leading term.
unsigned leading_monomial_order(const GroupWord& w, std::uint32_t p);

/// Number of syllables of a trace read as a positive group word.
std::size_t syllable_count(const Trace& t, const Graph& g);

/// Ranks (index n = 0 .. order-1) of the degree-n parts of the image of the
/// augmentation-ideal powers: the span of products of leading forms of
/// μ(g) − 1 over g in ball(graph, radius), graded by total valuation.
std::vector<std::size_t> magnus_span_rank(GraphPtr graph, std::size_t radius, unsigned order,
                                          const CoefficientDomain& domain);

}  // namespace raag
