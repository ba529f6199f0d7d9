#include "raag/useries.hpp"

#include <algorithm>

#include "raag/error.hpp"

namespace raag {

USeries::USeries(std::vector<mpq_class> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order);
}

USeries USeries::constant(const mpq_class& c, std::size_t order) {
  USeries s(order);
  if (order > 0) s.coeffs_[0] = c;
  return s;
}

USeries USeries::variable(std::size_t order) {
  USeries s(order);
  if (order > 1) s.coeffs_[1] = 1;
  return s;
}

USeries USeries::from_integers(const std::vector<long>& coeffs, std::size_t order) {
  USeries s(order);
  for (std::size_t i = 0; i < std::min(order, coeffs.size()); ++i) s.coeffs_[i] = coeffs[i];
  return s;
}

std::vector<mpz_class> USeries::integer_coeffs() const {
  std::vector<mpz_class> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1) throw DomainError("non-integral series coefficient " + c.get_str());
    out.push_back(c.get_num());
  }
  return out;
}

USeries& USeries::operator+=(const USeries& y) {
  if (y.order() != order()) throw DomainError("series of different orders");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += y.coeffs_[i];
  return *this;
}

USeries& USeries::operator-=(const USeries& y) {
  if (y.order() != order()) throw DomainError("series of different orders");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= y.coeffs_[i];
  return *this;
}

USeries& USeries::operator*=(const mpq_class& c) {
  for (auto& a : coeffs_) a *= c;
  return *this;
}

USeries operator*(const USeries& x, const USeries& y) {
  if (y.order() != x.order()) throw DomainError("series of different orders");
  USeries out(x.order());
  for (std::size_t i = 0; i < x.order(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < x.order(); ++j) out.coeffs_[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return out;
}

USeries USeries::operator-() const {
  USeries out = *this;
  out *= -1;
  return out;
}

USeries USeries::negate_variable() const { return substitute_monomial(-1, 1); }

USeries USeries::substitute_monomial(const mpq_class& c, std::size_t k) const {
  if (k == 0) throw InvalidArgument("substitute_monomial needs a positive degree");
  USeries out(order());
  mpq_class power = 1;
  for (std::size_t i = 0; i * k < order(); ++i) {
    out.coeffs_[i * k] = coeffs_[i] * power;
    power *= c;
  }
  return out;
}

USeries reciprocal(const USeries& f) {
  if (f.order() == 0) return f;
  if (f[0] == 0) throw DomainError("reciprocal of a series with zero constant term");
  USeries out(f.order());
  out[0] = 1 / f[0];
  for (std::size_t n = 1; n < f.order(); ++n) {
    mpq_class acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += f[k] * out[n - k];
    out[n] = -acc / f[0];
  }
  return out;
}

USeries compose(const USeries& f, const USeries& g) {
  if (f.order() != g.order()) throw DomainError("series of different orders");
  if (g.order() > 0 && g[0] != 0) throw DomainError("composition needs g(0) = 0");
  // Horner: f(g) = f0 + g(f1 + g(f2 + ...)).
  USeries out(f.order());
  for (std::size_t i = f.order(); i-- > 0;) {
    out = out * g;
    out[0] += f[i];
  }
  return out;
}

USeries pow(const USeries& f, long k) {
  USeries base = k < 0 ? reciprocal(f) : f;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  USeries out = USeries::constant(1, f.order());
  while (e > 0) {
    if ((e & 1UL) != 0) out = out * base;
    e >>= 1UL;
    if (e > 0) base = base * base;
  }
  return out;
}

USeries log(const USeries& f) {
  if (f.order() == 0) return f;
  if (f[0] != 1) throw DomainError("log needs constant term 1");
  // (log f)' = f'/f, integrated termwise.
  const std::size_t m = f.order();
  USeries deriv(m);
  for (std::size_t i = 1; i < m; ++i) deriv[i - 1] = f[i] * static_cast<unsigned long>(i);
  const USeries q = deriv * reciprocal(f);
  USeries out(m);
  for (std::size_t i = 1; i < m; ++i) out[i] = q[i - 1] / static_cast<unsigned long>(i);
  return out;
}

USeries RatFunc::expand(std::size_t order) const {
  USeries num(order);
  USeries den(order);
  for (std::size_t i = 0; i < std::min(order, numerator.size()); ++i) num[i] = numerator[i];
  for (std::size_t i = 0; i < std::min(order, denominator.size()); ++i) den[i] = denominator[i];
  return num * reciprocal(den);
}

std::string polynomial_to_string(const std::vector<mpz_class>& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    const mpz_class mag = abs(p[i]);
    if (out.empty()) {
      if (p[i] < 0) out += "-";
    } else {
      out += p[i] < 0 ? " - " : " + ";
    }
    const bool show_coeff = i == 0 || mag != 1;
    if (show_coeff) out += mag.get_str();
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string RatFunc::to_string() const {
  return "(" + polynomial_to_string(numerator) + ")/(" + polynomial_to_string(denominator) + ")";
}

}  // namespace raag
