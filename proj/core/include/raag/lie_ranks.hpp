#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "raag/coefficient.hpp"
#include "raag/graph.hpp"
#include "raag/pc_series.hpp"

namespace raag {

enum class RankKind { LowerCentral, Restricted, ExponentP };
enum class RankMethod { BracketSpan, SeriesRecursion };

std::string to_string(RankKind k);
std::string to_string(RankMethod m);

struct RankTable {
  RankKind kind = RankKind::LowerCentral;
  RankMethod method = RankMethod::SeriesRecursion;
  std::string domain;            // "Q", "F3", ...
  std::vector<long> values;      // values[n-1] is the degree-n rank
};

/// All left-normed brackets [v_1,[v_2,[...,v_n]]] of degree n, expanded in
/// R_Γ over `domain`.
std::vector<PCSeries> left_normed_brackets(GraphPtr graph, const CoefficientDomain& domain,
                                           std::size_t n);

/// Rank over a field of the span of the degree-n left-normed brackets.
std::size_t bracket_span_rank(GraphPtr graph, std::size_t n, const CoefficientDomain& domain);

/// Rank over F_p of the degree-n brackets together with p^i-th powers of
/// degree-m brackets, m·p^i = n.
std::size_t restricted_span_rank(GraphPtr graph, std::size_t n, std::uint32_t p);

/// b_1..b_upto from Π(1−t^n)^{−b_n} = Φ_R via the formal logarithm and a
/// divisor-sum recursion.
RankTable series_rank_lcs(const Graph& g, std::size_t upto);

/// d_1..d_upto from Π((1−t^{pn})/(1−t^n))^{d_n} = Φ_R, peeled off degree by degree.
RankTable series_rank_restricted(const Graph& g, std::uint32_t p, std::size_t upto);

/// dim λ_n/λ_{n+1} = b_1 + ... + b_n. Throws InvalidArgument for p = 2.
RankTable lambda_dims(const Graph& g, std::uint32_t p, std::size_t upto);

/// Σ_{m·p^i = n} b_m for each n ≤ b.size().
std::vector<long> restricted_from_lcs(const std::vector<long>& b, std::uint32_t p);

RankTable bracket_rank_table(GraphPtr graph, const CoefficientDomain& domain, std::size_t upto);
RankTable restricted_rank_table(GraphPtr graph, std::uint32_t p, std::size_t upto);

struct PrimitivityResult {
  bool ok = true;
  std::optional<PCSeries> witness;
};

/// Every degree-n left-normed bracket is primitive at truncation `order` > n.
PrimitivityResult primitivity_check(GraphPtr graph, std::size_t n, unsigned order,
                                    const CoefficientDomain& domain);

}  // namespace raag
