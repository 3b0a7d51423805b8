#pragma once

#include <climits>

#include "jantzenlab/laurent_poly.hpp"

namespace jantzenlab {

/// Value returned by val_at for the zero polynomial.
inline constexpr int kInfiniteValuation = INT_MAX;

/// The r-th cyclotomic polynomial in v. Throws std::domain_error for r < 2.
LaurentPoly cyclotomic(int r);

/// The prime ideal (Phi_r) of Q[v], i.e. evaluation at a primitive r-th root of unity.
struct CycPrime {
  int r = 0;
  LaurentPoly phi;

  explicit CycPrime(int order);
  int degree() const { return phi.high(); }
};

/// Multiplicity of Phi_r in p (v is a unit, so negative exponents are harmless).
int val_at(const LaurentPoly& p, const CycPrime& prime);

/// Splits a nonzero p as Phi_r^k * u with val_at(u) = 0; returns {k, u}.
std::pair<int, LaurentPoly> split_valuation(const LaurentPoly& p, const CycPrime& prime);

/// Remainder of v^shift * p modulo Phi_r, where shift = max(0, -low(p)).
struct CycResidue {
  LaurentPoly remainder;
  int shift = 0;
};
CycResidue reduce_mod_prime(const LaurentPoly& p, const CycPrime& prime);

/// Canonical representative (degree < deg Phi_r) of the image of p in Q[v]/(Phi_r).
LaurentPoly cyclotomic_class(const LaurentPoly& p, const CycPrime& prime);

/// Arithmetic in the field Q[v]/(Phi_r) on canonical representatives.
LaurentPoly field_mul(const LaurentPoly& a, const LaurentPoly& b, const CycPrime& prime);
/// Inverse of a nonzero class. Throws std::domain_error on zero.
LaurentPoly field_inverse(const LaurentPoly& a, const CycPrime& prime);

}  // namespace jantzenlab
