#include "raag/coefficient.hpp"

#include "raag/error.hpp"

namespace raag {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

unsigned p_adic_valuation(const mpz_class& n, std::uint32_t p) {
  if (n == 0) throw InvalidArgument("p-adic valuation of zero");
  mpz_class m = abs(n);
  unsigned v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
    m /= p;
    ++v;
  }
  return v;
}

std::string to_string(const Coeff& c) { return c.get_str(); }

CoefficientDomain CoefficientDomain::prime_field(std::uint32_t p) {
  if (p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
    throw InvalidArgument("F_p needs a prime p < 2^31, got " + std::to_string(p));
  }
  return CoefficientDomain(Kind::PrimeField, p);
}

CoefficientDomain CoefficientDomain::parse(const std::string& tag, std::uint32_t p) {
  if (tag == "Z") return integers();
  if (tag == "Q") return rationals();
  if (tag == "Fp" || tag == "F") return prime_field(p);
  if (tag.size() > 1 && tag[0] == 'F') {
    try {
      return prime_field(static_cast<std::uint32_t>(std::stoul(tag.substr(1))));
    } catch (const std::logic_error&) {
    }
  }
  throw InvalidArgument("unknown coefficient domain '" + tag + "' (expected Z, Q or Fp)");
}

Coeff CoefficientDomain::normalize(const Coeff& raw) const {
  Coeff c = raw;
  c.canonicalize();
  switch (kind_) {
    case Kind::Rationals:
      return c;
    case Kind::Integers:
      if (c.get_den() != 1) throw DomainError("non-integral coefficient " + c.get_str() + " over Z");
      return c;
    case Kind::PrimeField: {
      const mpz_class pz = p_;
      mpz_class num = c.get_num() % pz;
      if (num < 0) num += pz;
      if (c.get_den() == 1) return Coeff(num);
      mpz_class den_inv;
      if (mpz_invert(den_inv.get_mpz_t(), c.get_den_mpz_t(), pz.get_mpz_t()) == 0) {
        throw DomainError("denominator of " + c.get_str() + " vanishes in F_" + std::to_string(p_));
      }
      mpz_class r = (num * den_inv) % pz;
      return Coeff(r);
    }
  }
  return c;
}

bool CoefficientDomain::is_unit(const Coeff& c) const {
  const Coeff n = normalize(c);
  if (n == 0) return false;
  if (kind_ == Kind::Integers) return n == 1 || n == -1;
  return true;
}

Coeff CoefficientDomain::inverse(const Coeff& c) const {
  if (!is_unit(c)) throw DomainError(c.get_str() + " is not a unit in " + name());
  return normalize(Coeff(1) / normalize(c));
}

std::string CoefficientDomain::name() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::PrimeField:
      return "F" + std::to_string(p_);
  }
  return "?";
}

}  // namespace raag
