#pragma once

#include <cstddef>
#include <map>

#include "raag/coefficient.hpp"
#include "raag/graph.hpp"
#include "raag/useries.hpp"

namespace raag {

/// An element of the partially commutative exterior algebra, in the clique
/// basis v_C = v_{k-1}···v_0 (factors in decreasing vertex order).
class ExtElement {
 public:
  using Terms = std::map<Clique, Coeff>;

  ExtElement(GraphPtr graph, CoefficientDomain domain);

  /// Basis element v_C. Throws InvalidArgument when C is not a clique.
  static ExtElement basis(GraphPtr graph, CoefficientDomain domain, const Clique& c,
                          const Coeff& coeff = 1);
  static ExtElement generator(GraphPtr graph, CoefficientDomain domain, GeneratorId v);

  const Graph& graph() const { return *graph_; }
  const CoefficientDomain& domain() const { return domain_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Clique& c, const Coeff& coeff);

  ExtElement& operator+=(const ExtElement& y);
  friend ExtElement operator+(ExtElement x, const ExtElement& y) { return x += y; }
  ExtElement operator-() const;
  friend bool operator==(const ExtElement& x, const ExtElement& y);

  void check_compatible(const ExtElement& y) const;

 private:
  GraphPtr graph_;
  CoefficientDomain domain_;
  Terms terms_;
};

/// Sign and support of v_C · v_D: 0 when C, D meet or C ∪ D is not a clique.
int basis_product_sign(const Graph& g, const Clique& c, const Clique& d);

ExtElement ext_mul(const ExtElement& x, const ExtElement& y);

/// Σ c_n t^n: the clique polynomial (order |V| + 1).
USeries poincare_poly(const Graph& g);

struct QuadraticDualReport {
  std::size_t rank_r = 0;  // relations of R_Γ in V⊗V
  std::size_t rank_s = 0;  // relations of S_Γ in V⊗V
  std::size_t dimension = 0;
  bool annihilate = false;
  bool ok() const { return annihilate && rank_r + rank_s == dimension; }
};

/// The relation spaces of the two quadratic algebras pair to zero and their
/// ranks add up to |V|^2.
QuadraticDualReport quadratic_dual_check(const Graph& g);

}  // namespace raag
