#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace jantzenlab {

using Rational = mpq_class;

/// Univariate Laurent polynomial with exact rational coefficients.
///
/// Storage is dense between the lowest and highest nonzero exponent; both ends
/// are always trimmed so that the zero polynomial has no coefficients and a
/// nonzero polynomial has nonzero leading and trailing coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Rational& constant);

  /// Coefficients of x^low, x^(low+1), ...
  LaurentPoly(int low, std::vector<Rational> coeffs);
  LaurentPoly(int low, std::initializer_list<long> coeffs);

  static LaurentPoly monomial(int exponent, const Rational& coeff = 1);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }

  /// Lowest exponent with a nonzero coefficient. Requires !is_zero().
  int low() const;
  /// Highest exponent with a nonzero coefficient. Requires !is_zero().
  int high() const;

  Rational coeff(int exponent) const;
  const Rational& leading_coeff() const;
  std::size_t term_count() const;

  /// Nonzero terms in ascending exponent order.
  std::vector<std::pair<int, Rational>> terms() const;

  /// True when every nonzero coefficient is an integer.
  bool has_integer_coeffs() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  /// Multiplies by x^k.
  LaurentPoly shifted(int k) const;
  /// x -> x^{-1}.
  LaurentPoly bar() const;
  /// x -> -x.
  LaurentPoly negate_variable() const;
  /// x -> x^k for k != 0.
  LaurentPoly substitute_power(int k) const;
  /// Terms with exponent in [lo, hi].
  LaurentPoly slice(int lo, int hi) const;
  Rational evaluate(const Rational& x) const;
  /// Value at x = 1 (sum of coefficients).
  Rational at_one() const;

  /// Canonical ascending-exponent text, e.g. "1+2q+q^3", "-q^-1+q".
  std::string to_string(char var = 'q') const;
  /// Inverse of to_string for the same variable. Throws std::invalid_argument.
  static LaurentPoly parse(const std::string& text, char var = 'q');

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator-(LaurentPoly a);

 private:
  void trim();

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

/// Exact quotient a / b in the Laurent ring. Throws std::domain_error when b
/// does not divide a (or b is zero).
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Polynomial division with remainder for ordinary polynomials (no negative
/// exponents), b nonzero. Returns {quotient, remainder}.
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);

/// Balanced quantum integer [k] = q^{k-1} + q^{k-3} + ... + q^{1-k}.
LaurentPoly quantum_integer(int k);

}  // namespace jantzenlab
