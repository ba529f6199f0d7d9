#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace raag {

using Coeff = mpq_class;

/// The coefficient ring: the integers, the rationals, or a prime field.
///
/// Coefficients of every domain are carried as mpq_class; `normalize` maps a
/// value into the domain's canonical representatives (integers for Z, reduced
/// fractions for Q, residues 0..p-1 for F_p).
class CoefficientDomain {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  static CoefficientDomain integers() { return CoefficientDomain(Kind::Integers, 0); }
  static CoefficientDomain rationals() { return CoefficientDomain(Kind::Rationals, 0); }
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static CoefficientDomain prime_field(std::uint32_t p);
  /// "Z", "Q", or "Fp" together with a prime.
  static CoefficientDomain parse(const std::string& tag, std::uint32_t p);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_field() const { return kind_ != Kind::Integers; }

  /// Throws DomainError when a non-integer is pushed into Z, or a fraction
  /// with denominator divisible by p into F_p.
  Coeff normalize(const Coeff& c) const;
  bool is_unit(const Coeff& c) const;
  /// Throws DomainError for non-units.
  Coeff inverse(const Coeff& c) const;

  std::string name() const;

  friend bool operator==(const CoefficientDomain&, const CoefficientDomain&) = default;

 private:
  CoefficientDomain(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_ = Kind::Rationals;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exponent of p in a nonzero integer.
unsigned p_adic_valuation(const mpz_class& n, std::uint32_t p);

/// Decimal string: "3", "-1/2".
std::string to_string(const Coeff& c);

}  // namespace raag
