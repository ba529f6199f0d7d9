#pragma once

#include <map>
#include <utility>

#include "raag/pc_series.hpp"

namespace raag {

/// An element of the completed tensor square, truncated at combined length
/// < order.
class TensorSeries {
 public:
  using Key = std::pair<Trace, Trace>;
  using Terms = std::map<Key, Coeff>;

  TensorSeries(GraphPtr graph, CoefficientDomain domain, unsigned order);

  /// x ⊗ y, truncated.
  static TensorSeries tensor(const PCSeries& x, const PCSeries& y);

  const Graph& graph() const { return *graph_; }
  const CoefficientDomain& domain() const { return domain_; }
  unsigned order() const { return order_; }
  const Terms& terms() const { return terms_; }

  void add_term(const Trace& left, const Trace& right, const Coeff& c);

  TensorSeries& operator+=(const TensorSeries& y);
  TensorSeries& operator-=(const TensorSeries& y);
  friend TensorSeries operator+(TensorSeries x, const TensorSeries& y) { return x += y; }
  friend TensorSeries operator-(TensorSeries x, const TensorSeries& y) { return x -= y; }
  /// (a⊗b)(c⊗d) = ac ⊗ bd.
  friend TensorSeries operator*(const TensorSeries& x, const TensorSeries& y);
  friend bool operator==(const TensorSeries& x, const TensorSeries& y);

 private:
  void check_compatible(const TensorSeries& y) const;

  GraphPtr graph_;
  CoefficientDomain domain_;
  unsigned order_;
  Terms terms_;
};

/// Algebra map with Δ(v) = v⊗1 + 1⊗v: on a word, the sum over splittings of
/// its letters into two complementary subwords.
TensorSeries coproduct(const PCSeries& x);
/// Constant term.
Coeff augmentation(const PCSeries& x);
/// Anti-automorphism with S(v) = −v.
PCSeries antipode(const PCSeries& x);

/// (ε ⊗ id) applied to a tensor.
PCSeries counit_left(const TensorSeries& t);

/// Δ(x) = x⊗1 + 1⊗x up to the truncation order.
bool is_primitive(const PCSeries& x);
/// ε(x) = 1 and Δ(x) = x⊗x up to the truncation order.
bool is_grouplike(const PCSeries& x);

}  // namespace raag
