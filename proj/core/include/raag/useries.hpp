#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace raag {

/// A univariate power series with exact rational coefficients, truncated to
/// `order` coefficients (degrees 0 .. order-1).
class USeries {
 public:
  explicit USeries(std::size_t order) : coeffs_(order) {}
  USeries(std::vector<mpq_class> coeffs, std::size_t order);

  static USeries constant(const mpq_class& c, std::size_t order);
  /// The series t.
  static USeries variable(std::size_t order);
  static USeries from_integers(const std::vector<long>& coeffs, std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  const mpq_class& operator[](std::size_t n) const { return coeffs_.at(n); }
  mpq_class& operator[](std::size_t n) { return coeffs_.at(n); }

  /// Coefficients as integers; throws DomainError on a non-integral entry.
  std::vector<mpz_class> integer_coeffs() const;

  USeries& operator+=(const USeries& y);
  USeries& operator-=(const USeries& y);
  USeries& operator*=(const mpq_class& c);
  friend USeries operator+(USeries x, const USeries& y) { return x += y; }
  friend USeries operator-(USeries x, const USeries& y) { return x -= y; }
  friend USeries operator*(USeries x, const mpq_class& c) { return x *= c; }
  friend USeries operator*(const USeries& x, const USeries& y);
  USeries operator-() const;
  friend bool operator==(const USeries&, const USeries&) = default;

  /// f(−t).
  USeries negate_variable() const;
  /// f(c·t^k).
  USeries substitute_monomial(const mpq_class& c, std::size_t k) const;

 private:
  std::vector<mpq_class> coeffs_;
};

/// 1/f; throws DomainError when f(0) = 0.
USeries reciprocal(const USeries& f);
/// f(g) for g(0) = 0; throws DomainError otherwise.
USeries compose(const USeries& f, const USeries& g);
/// f^k for any integer k (negative needs f(0) != 0).
USeries pow(const USeries& f, long k);
/// Formal logarithm of f with f(0) = 1.
USeries log(const USeries& f);

/// A ratio of integer polynomials, denominator(0) != 0.
struct RatFunc {
  std::vector<mpz_class> numerator;
  std::vector<mpz_class> denominator;

  USeries expand(std::size_t order) const;
  /// "(1 + 2t + t^2)/(1 - 2t + t^2)".
  std::string to_string() const;
};

std::string polynomial_to_string(const std::vector<mpz_class>& p);

}  // namespace raag
