#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "raag/coefficient.hpp"
#include "raag/graph.hpp"
#include "raag/trace.hpp"

namespace raag {

inline constexpr unsigned kDefaultSeriesOrder = 8;

/// A power series in partially commuting variables, truncated below degree
/// `order`: only traces of length < order are kept, and only nonzero
/// coefficients are stored.
class PCSeries {
 public:
  using Terms = std::map<Trace, Coeff>;

  /// Throws InvalidArgument when order == 0.
  PCSeries(GraphPtr graph, CoefficientDomain domain, unsigned order);

  static PCSeries constant(GraphPtr graph, CoefficientDomain domain, unsigned order, const Coeff& c);
  static PCSeries one(GraphPtr graph, CoefficientDomain domain, unsigned order) {
    return constant(std::move(graph), domain, order, 1);
  }
  static PCSeries generator(GraphPtr graph, CoefficientDomain domain, unsigned order, GeneratorId v);
  static PCSeries monomial(GraphPtr graph, CoefficientDomain domain, unsigned order, const Trace& t,
                           const Coeff& c = 1);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const CoefficientDomain& domain() const { return domain_; }
  unsigned order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(const Trace& t) const;
  Coeff constant_term() const;

  /// Adds c·t; `t` must be canonical. Terms of length >= order are dropped.
  void add_term(const Trace& t, const Coeff& c);

  /// Homogeneous component of degree n.
  PCSeries degree_part(std::size_t n) const;
  /// Lowest degree carrying a nonzero term, ignoring the constant term when
  /// `skip_constant` is set; nullopt when there is none below the order.
  std::optional<std::size_t> lowest_degree(bool skip_constant = false) const;

  /// Same series, coefficients pushed into another domain / truncation order.
  PCSeries with_domain(const CoefficientDomain& d) const;
  PCSeries truncated(unsigned order) const;

  PCSeries& operator+=(const PCSeries& y);
  PCSeries& operator-=(const PCSeries& y);
  PCSeries& operator*=(const Coeff& c);

  friend PCSeries operator+(PCSeries x, const PCSeries& y) { return x += y; }
  friend PCSeries operator-(PCSeries x, const PCSeries& y) { return x -= y; }
  friend PCSeries operator*(PCSeries x, const Coeff& c) { return x *= c; }
  friend PCSeries operator*(const Coeff& c, PCSeries x) { return x *= c; }
  PCSeries operator-() const;
  friend PCSeries operator*(const PCSeries& x, const PCSeries& y);

  /// Equal graph, domain, order and terms.
  friend bool operator==(const PCSeries& x, const PCSeries& y);

  /// Throws DomainError unless graph, domain and order agree.
  void check_compatible(const PCSeries& y) const;

 private:
  GraphPtr graph_;
  CoefficientDomain domain_;
  unsigned order_;
  Terms terms_;
};

PCSeries pow(const PCSeries& x, unsigned k);
/// x·y − y·x.
PCSeries bracket(const PCSeries& x, const PCSeries& y);

/// Inverse of a series with invertible constant term (±1 over Z).
/// Throws DomainError otherwise.
PCSeries invert_unit(const PCSeries& x);

/// Σ x^k/k!, for x without constant term, over Q. Throws DomainError.
PCSeries exp_series(const PCSeries& x);
/// −Σ (1−y)^k/k, for y with constant term 1, over Q. Throws DomainError.
PCSeries log_series(const PCSeries& y);

/// Letter substitution along a graph morphism followed by re-canonicalization.
/// Throws InvalidArgument if the morphism is invalid or does not start at
/// x's graph.
PCSeries induced_ring_map(const GraphMorphism& m, const PCSeries& x);

}  // namespace raag
