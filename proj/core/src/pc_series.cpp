#include "raag/pc_series.hpp"

#include "raag/error.hpp"

namespace raag {

PCSeries::PCSeries(GraphPtr graph, CoefficientDomain domain, unsigned order)
    : graph_(std::move(graph)), domain_(domain), order_(order) {
  if (!graph_) throw InvalidArgument("series without a graph");
  if (order_ == 0) throw InvalidArgument("truncation order must be at least 1");
}

PCSeries PCSeries::constant(GraphPtr graph, CoefficientDomain domain, unsigned order, const Coeff& c) {
  PCSeries x(std::move(graph), domain, order);
  x.add_term(Trace{}, c);
  return x;
}

PCSeries PCSeries::generator(GraphPtr graph, CoefficientDomain domain, unsigned order, GeneratorId v) {
  if (v >= graph->size()) throw InvalidArgument("generator out of range");
  PCSeries x(std::move(graph), domain, order);
  x.add_term(Trace::from_canonical({v}), 1);
  return x;
}

PCSeries PCSeries::monomial(GraphPtr graph, CoefficientDomain domain, unsigned order, const Trace& t,
                            const Coeff& c) {
  PCSeries x(std::move(graph), domain, order);
  x.add_term(Trace::canonical(t.letters(), x.graph()), c);
  return x;
}

Coeff PCSeries::coefficient(const Trace& t) const {
  const auto it = terms_.find(t);
  return it == terms_.end() ? Coeff(0) : it->second;
}

Coeff PCSeries::constant_term() const { return coefficient(Trace{}); }

void PCSeries::add_term(const Trace& t, const Coeff& c) {
  if (t.size() >= order_) return;
  const Coeff n = domain_.normalize(c);
  if (n == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, n);
  if (inserted) return;
  it->second = domain_.normalize(it->second + n);
  if (it->second == 0) terms_.erase(it);
}

PCSeries PCSeries::degree_part(std::size_t n) const {
  PCSeries out(graph_, domain_, order_);
  for (const auto& [t, c] : terms_) {
    if (t.size() == n) out.terms_.emplace(t, c);
  }
  return out;
}

std::optional<std::size_t> PCSeries::lowest_degree(bool skip_constant) const {
  for (const auto& [t, c] : terms_) {
    if (skip_constant && t.empty()) continue;
    return t.size();  // map order is shortlex, so the first hit is lowest
  }
  return std::nullopt;
}

PCSeries PCSeries::with_domain(const CoefficientDomain& d) const {
  PCSeries out(graph_, d, order_);
  for (const auto& [t, c] : terms_) out.add_term(t, c);
  return out;
}

PCSeries PCSeries::truncated(unsigned order) const {
  PCSeries out(graph_, domain_, order);
  for (const auto& [t, c] : terms_) out.add_term(t, c);
  return out;
}

void PCSeries::check_compatible(const PCSeries& y) const {
  if (graph_ != y.graph_ && *graph_ != *y.graph_) throw DomainError("series over different graphs");
  if (domain_ != y.domain_) {
    throw DomainError("series over different domains (" + domain_.name() + " vs " + y.domain_.name() + ")");
  }
  if (order_ != y.order_) {
    throw DomainError("series truncated at different orders (" + std::to_string(order_) + " vs " +
                      std::to_string(y.order_) + ")");
  }
}

PCSeries& PCSeries::operator+=(const PCSeries& y) {
  check_compatible(y);
  for (const auto& [t, c] : y.terms_) add_term(t, c);
  return *this;
}

PCSeries& PCSeries::operator-=(const PCSeries& y) {
  check_compatible(y);
  for (const auto& [t, c] : y.terms_) add_term(t, -c);
  return *this;
}

PCSeries& PCSeries::operator*=(const Coeff& c) {
  const Coeff n = domain_.normalize(c);
  Terms scaled;
  for (const auto& [t, a] : terms_) {
    Coeff prod = domain_.normalize(a * n);
    if (prod != 0) scaled.emplace(t, std::move(prod));
  }
  terms_ = std::move(scaled);
  return *this;
}

PCSeries PCSeries::operator-() const {
  PCSeries out = *this;
  out *= -1;
  return out;
}

PCSeries operator*(const PCSeries& x, const PCSeries& y) {
  x.check_compatible(y);
  PCSeries out(x.graph_, x.domain_, x.order_);
  for (const auto& [tx, cx] : x.terms_) {
    for (const auto& [ty, cy] : y.terms_) {
      if (tx.size() + ty.size() >= x.order_) break;  // y's terms are sorted by length
      out.add_term(concat(tx, ty, *x.graph_), cx * cy);
    }
  }
  return out;
}

bool operator==(const PCSeries& x, const PCSeries& y) {
  return (x.graph_ == y.graph_ || *x.graph_ == *y.graph_) && x.domain_ == y.domain_ &&
         x.order_ == y.order_ && x.terms_ == y.terms_;
}

PCSeries pow(const PCSeries& x, unsigned k) {
  PCSeries result = PCSeries::one(x.graph_ptr(), x.domain(), x.order());
  PCSeries base = x;
  while (k > 0) {
    if ((k & 1U) != 0) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

PCSeries bracket(const PCSeries& x, const PCSeries& y) { return x * y - y * x; }

PCSeries invert_unit(const PCSeries& x) {
  const CoefficientDomain& d = x.domain();
  const Coeff c = x.constant_term();
  if (!d.is_unit(c)) {
    throw DomainError("constant term " + c.get_str() + " is not invertible in " + d.name());
  }
  const Coeff c_inv = d.inverse(c);
  // x = c(1 + z) with z in the augmentation ideal: x^{-1} = c^{-1} Σ (−z)^k.
  PCSeries minus_z = x;
  minus_z.add_term(Trace{}, -c);
  minus_z *= -c_inv;
  PCSeries sum = PCSeries::one(x.graph_ptr(), d, x.order());
  PCSeries power = sum;
  for (unsigned k = 1; k < x.order(); ++k) {
    power = power * minus_z;
    if (power.is_zero()) break;
    sum += power;
  }
  sum *= c_inv;
  return sum;
}

PCSeries exp_series(const PCSeries& x) {
  if (x.domain().kind() != CoefficientDomain::Kind::Rationals) {
    throw DomainError("exp needs rational coefficients");
  }
  if (x.constant_term() != 0) throw DomainError("exp needs a series without constant term");
  PCSeries sum = PCSeries::one(x.graph_ptr(), x.domain(), x.order());
  PCSeries term = sum;
  for (unsigned k = 1; k < x.order(); ++k) {
    term = term * x;
    term *= Coeff(1, k);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

PCSeries log_series(const PCSeries& y) {
  if (y.domain().kind() != CoefficientDomain::Kind::Rationals) {
    throw DomainError("log needs rational coefficients");
  }
  if (y.constant_term() != 1) throw DomainError("log needs a series with constant term 1");
  // log(y) = −Σ_{k≥1} (1−y)^k / k.
  const PCSeries u = PCSeries::one(y.graph_ptr(), y.domain(), y.order()) - y;
  PCSeries sum(y.graph_ptr(), y.domain(), y.order());
  PCSeries power = PCSeries::one(y.graph_ptr(), y.domain(), y.order());
  for (unsigned k = 1; k < y.order(); ++k) {
    power = power * u;
    if (power.is_zero()) break;
    sum -= power * Coeff(1, k);
  }
  return sum;
}

PCSeries induced_ring_map(const GraphMorphism& m, const PCSeries& x) {
  m.validate();
  if (*m.source != x.graph()) throw InvalidArgument("morphism source is not the series' graph");
  PCSeries out(m.target, x.domain(), x.order());
  std::vector<GeneratorId> letters;
  for (const auto& [t, c] : x.terms()) {
    letters.clear();
    for (const auto v : t.letters()) letters.push_back(m.vertex_map[v]);
    out.add_term(Trace::canonical(letters, *m.target), c);
  }
  return out;
}

}  // namespace raag
