#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raag/coefficient.hpp"
#include "raag/graph.hpp"
#include "raag/trace.hpp"

namespace raag {

/// An element of the Koszul complex ⊕_C v_C·R_Γ, bigraded by (|C|, len(r)).
class KoszulElement {
 public:
  using Key = std::pair<Clique, Trace>;
  using Terms = std::map<Key, Coeff>;

  KoszulElement(GraphPtr graph, CoefficientDomain domain, unsigned order);

  static KoszulElement basis(GraphPtr graph, CoefficientDomain domain, unsigned order,
                             const Clique& c, const Trace& r, const Coeff& coeff = 1);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const CoefficientDomain& domain() const { return domain_; }
  unsigned order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Terms with |C| + len(r) >= order are dropped.
  void add_term(const Clique& c, const Trace& r, const Coeff& coeff);

  KoszulElement& operator+=(const KoszulElement& y);
  KoszulElement& operator-=(const KoszulElement& y);
  friend KoszulElement operator+(KoszulElement x, const KoszulElement& y) { return x += y; }
  friend KoszulElement operator-(KoszulElement x, const KoszulElement& y) { return x -= y; }
  friend bool operator==(const KoszulElement& x, const KoszulElement& y);

  std::string to_string() const;

 private:
  void check_compatible(const KoszulElement& y) const;

  GraphPtr graph_;
  CoefficientDomain domain_;
  unsigned order_;
  Terms terms_;
};

/// d(v_C·r) = Σ_j (−1)^j v_{C∖c_j}·c_j r, with c_0 < c_1 < ... the members of C.
KoszulElement differential(const KoszulElement& x);

/// s(v_C·w) = v_{C∪{v}}·w' for the least v < min C that can be brought to the
/// front of w = v w' with C ∪ {v} a clique; 0 when there is none.
KoszulElement contraction(const KoszulElement& x);

/// Projection onto bidegree (0, 0).
KoszulElement augmentation_part(const KoszulElement& x);

struct ResolutionReport {
  std::size_t basis_checked = 0;
  bool d_squared_zero = true;
  bool contraction_identity = true;
  bool euler_characteristic = true;
  std::optional<std::string> counterexample;
  /// ranks[s][r] = number of basis elements v_C·w with |C| = s, len(w) = r.
  std::vector<std::vector<std::size_t>> bigraded_ranks;
  bool ok() const { return d_squared_zero && contraction_identity && euler_characteristic; }
};

/// Checks d∘d = 0 and s∘d + d∘s = 1 − ε on every basis element of total
/// degree < order, plus Σ_s (−1)^s rank(s, n−s) = [n = 0].
ResolutionReport verify_resolution(GraphPtr graph, unsigned order, const CoefficientDomain& domain);

}  // namespace raag
