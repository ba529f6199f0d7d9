#include "raag/hopf.hpp"

#include "raag/error.hpp"

namespace raag {

TensorSeries::TensorSeries(GraphPtr graph, CoefficientDomain domain, unsigned order)
    : graph_(std::move(graph)), domain_(domain), order_(order) {
  if (!graph_) throw InvalidArgument("tensor without a graph");
  if (order_ == 0) throw InvalidArgument("truncation order must be at least 1");
}

TensorSeries TensorSeries::tensor(const PCSeries& x, const PCSeries& y) {
  x.check_compatible(y);
  TensorSeries out(x.graph_ptr(), x.domain(), x.order());
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) out.add_term(a, b, ca * cb);
  }
  return out;
}

void TensorSeries::add_term(const Trace& left, const Trace& right, const Coeff& c) {
  if (left.size() + right.size() >= order_) return;
  const Coeff n = domain_.normalize(c);
  if (n == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{left, right}, n);
  if (inserted) return;
  it->second = domain_.normalize(it->second + n);
  if (it->second == 0) terms_.erase(it);
}

void TensorSeries::check_compatible(const TensorSeries& y) const {
  if ((graph_ != y.graph_ && *graph_ != *y.graph_) || domain_ != y.domain_ || order_ != y.order_) {
    throw DomainError("tensors over different rings");
  }
}

TensorSeries& TensorSeries::operator+=(const TensorSeries& y) {
  check_compatible(y);
  for (const auto& [k, c] : y.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorSeries& TensorSeries::operator-=(const TensorSeries& y) {
  check_compatible(y);
  for (const auto& [k, c] : y.terms_) add_term(k.first, k.second, -c);
  return *this;
}

TensorSeries operator*(const TensorSeries& x, const TensorSeries& y) {
  x.check_compatible(y);
  TensorSeries out(x.graph_, x.domain_, x.order_);
  for (const auto& [kx, cx] : x.terms_) {
    for (const auto& [ky, cy] : y.terms_) {
      if (kx.first.size() + kx.second.size() + ky.first.size() + ky.second.size() >= x.order_) continue;
      out.add_term(concat(kx.first, ky.first, *x.graph_), concat(kx.second, ky.second, *x.graph_),
                   cx * cy);
    }
  }
  return out;
}

bool operator==(const TensorSeries& x, const TensorSeries& y) {
  return (x.graph_ == y.graph_ || *x.graph_ == *y.graph_) && x.domain_ == y.domain_ &&
         x.order_ == y.order_ && x.terms_ == y.terms_;
}

TensorSeries coproduct(const PCSeries& x) {
  const Graph& g = x.graph();
  TensorSeries out(x.graph_ptr(), x.domain(), x.order());
  std::vector<GeneratorId> left;
  std::vector<GeneratorId> right;
  for (const auto& [t, c] : x.terms()) {
    const auto& w = t.letters();
    const std::size_t n = w.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      left.clear();
      right.clear();
      for (std::size_t i = 0; i < n; ++i) {
        ((mask >> i) & 1U ? left : right).push_back(w[i]);
      }
      out.add_term(Trace::canonical(left, g), Trace::canonical(right, g), c);
    }
  }
  return out;
}

Coeff augmentation(const PCSeries& x) { return x.constant_term(); }

PCSeries antipode(const PCSeries& x) {
  PCSeries out(x.graph_ptr(), x.domain(), x.order());
  std::vector<GeneratorId> reversed;
  for (const auto& [t, c] : x.terms()) {
    reversed.assign(t.letters().rbegin(), t.letters().rend());
    out.add_term(Trace::canonical(reversed, x.graph()), t.size() % 2 == 0 ? c : Coeff(-c));
  }
  return out;
}

PCSeries counit_left(const TensorSeries& t) {
  PCSeries out(std::make_shared<const Graph>(t.graph()), t.domain(), t.order());
  for (const auto& [k, c] : t.terms()) {
    if (k.first.empty()) out.add_term(k.second, c);
  }
  return out;
}

bool is_primitive(const PCSeries& x) {
  const PCSeries one = PCSeries::one(x.graph_ptr(), x.domain(), x.order());
  return coproduct(x) == TensorSeries::tensor(x, one) + TensorSeries::tensor(one, x);
}

bool is_grouplike(const PCSeries& x) {
  if (x.domain().normalize(augmentation(x)) != 1) return false;
  return coproduct(x) == TensorSeries::tensor(x, x);
}

}  // namespace raag
