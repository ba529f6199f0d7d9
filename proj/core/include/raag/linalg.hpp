#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "raag/coefficient.hpp"

namespace raag {

/// Incremental row echelon form over a field.
///
/// Over Q rows are kept primitive integral (fraction-free elimination with
/// content removal); over F_p rows are monic residues. Pivot = the first
/// nonzero key in Key order.
template <class Key>
class EchelonBasis {
 public:
  using Vector = std::map<Key, Coeff>;

  explicit EchelonBasis(CoefficientDomain domain);

  /// Reduces `v` against the basis; keeps it when independent.
  /// Returns true when the rank grew.
  bool insert(Vector v);

  /// Reduced remainder of `v` (empty when v lies in the span).
  Vector reduce(Vector v) const;

  bool contains(const Vector& v) const { return reduce(v).empty(); }

  std::size_t rank() const { return rows_.size(); }
  /// Basis rows in insertion order.
  std::vector<Vector> rows() const;

 private:
  void normalize_row(Vector& v) const;

  CoefficientDomain domain_;
  std::map<Key, Vector> rows_;  // keyed by pivot
  std::vector<Key> order_;
};

/// Rank of a list of sparse vectors over a field.
template <class Key>
std::size_t rank_of(const std::vector<std::map<Key, Coeff>>& vectors,
                    const CoefficientDomain& domain) {
  EchelonBasis<Key> basis(domain);
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

}  // namespace raag

#include "raag/linalg_impl.hpp"
