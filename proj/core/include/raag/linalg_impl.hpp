#pragma once

// Template definitions for EchelonBasis.

#include <utility>

#include "raag/error.hpp"

namespace raag {

template <class Key>
EchelonBasis<Key>::EchelonBasis(CoefficientDomain domain) : domain_(domain) {
  if (!domain_.is_field()) throw DomainError("echelon form needs a field (Q or F_p)");
}

template <class Key>
void EchelonBasis<Key>::normalize_row(Vector& v) const {
  for (auto it = v.begin(); it != v.end();) {
    it->second = domain_.normalize(it->second);
    if (it->second == 0) {
      it = v.erase(it);
    } else {
      ++it;
    }
  }
  if (v.empty()) return;
  if (domain_.kind() == CoefficientDomain::Kind::PrimeField) {
    const Coeff lead_inv = domain_.inverse(v.begin()->second);
    for (auto& [k, c] : v) c = domain_.normalize(c * lead_inv);
    return;
  }
  // Q: clear denominators, divide by content, make the pivot positive.
  mpz_class lcm_den = 1;
  for (const auto& [k, c] : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  mpz_class content = 0;
  for (auto& [k, c] : v) {
    c *= lcm_den;
    c.canonicalize();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num_mpz_t());
  }
  if (sgn(v.begin()->second) < 0) content = -content;
  for (auto& [k, c] : v) {
    c /= content;
    c.canonicalize();
  }
}

template <class Key>
typename EchelonBasis<Key>::Vector EchelonBasis<Key>::reduce(Vector v) const {
  normalize_row(v);
  auto it = v.begin();
  while (it != v.end()) {
    auto pivot = rows_.find(it->first);
    if (pivot == rows_.end()) {
      ++it;
      continue;
    }
    const Key key = it->first;
    const Vector& row = pivot->second;
    const Coeff factor = it->second / row.begin()->second;
    if (domain_.kind() == CoefficientDomain::Kind::PrimeField) {
      for (const auto& [k, c] : row) {
        Coeff& slot = v[k];
        slot = domain_.normalize(slot - factor * c);
        if (slot == 0) v.erase(k);
      }
    } else {
      // Fraction-free step: v <- piv * v - lead(v) * row, then remove content.
      const Coeff piv = row.begin()->second;
      const Coeff lead = it->second;
      for (auto& [k, c] : v) c *= piv;
      for (const auto& [k, c] : row) {
        Coeff& slot = v[k];
        slot -= lead * c;
        if (slot == 0) v.erase(k);
      }
      normalize_row(v);
    }
    it = v.upper_bound(key);
  }
  return v;
}

template <class Key>
bool EchelonBasis<Key>::insert(Vector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  // The leading key of a reduced vector never carries a pivot.
  const Key pivot = v.begin()->first;
  order_.push_back(pivot);
  rows_.emplace(pivot, std::move(v));
  return true;
}

template <class Key>
std::vector<typename EchelonBasis<Key>::Vector> EchelonBasis<Key>::rows() const {
  std::vector<Vector> out;
  out.reserve(order_.size());
  for (const auto& k : order_) out.push_back(rows_.at(k));
  return out;
}

}  // namespace raag
