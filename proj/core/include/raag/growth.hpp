#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "raag/graph.hpp"
#include "raag/useries.hpp"

namespace raag {

inline constexpr std::size_t kDefaultGrowthOrder = 12;

/// Clique polynomial, padded or truncated to `order` coefficients.
USeries phi_S(const Graph& g, std::size_t order);
/// Poincaré series of the partially commutative polynomial ring: 1/Φ_S(−t).
USeries phi_R(const Graph& g, std::size_t order);
/// Spherical growth series of the group: Φ_R(2t/(1+t)).
USeries phi_A(const Graph& g, std::size_t order);

RatFunc phi_R_closed_form(const Graph& g);
/// (1+t)^ω / Σ c_k (−2t)^k (1+t)^{ω−k}, ω = clique number.
RatFunc phi_A_closed_form(const Graph& g);

/// Sphere sizes from an exhaustive ball, via the group normal form.
std::vector<std::size_t> ball_growth_oracle(const Graph& g, std::size_t radius);

struct IdentityCheck {
  std::string name;
  bool holds = false;
};

struct UnionJoinReport {
  std::vector<IdentityCheck> checks;
  bool ok() const;
};

/// The three reciprocal-additivity identities for g1 ⊔ g2 and the three
/// multiplicativity identities for g1 * g2, coefficientwise to `order`.
UnionJoinReport union_join_identities(const Graph& g1, const Graph& g2, std::size_t order);

}  // namespace raag
