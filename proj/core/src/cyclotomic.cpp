#include "jantzenlab/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "jantzenlab/errors.hpp"

namespace jantzenlab {

namespace {

LaurentPoly polymod(const LaurentPoly& p, const LaurentPoly& m) {
  return divmod(p, m).second;
}

}  // namespace

LaurentPoly cyclotomic(int r) {
  if (r < 2) throw std::domain_error("cyclotomic: order must be at least 2");
  static std::mutex mu;
  static std::map<int, LaurentPoly> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find(r); it != memo.end()) return it->second;
  }
  LaurentPoly p = LaurentPoly::monomial(r) - LaurentPoly(1);
  p = divide_exact(p, LaurentPoly(0, {-1, 1}));
  for (int d = 2; d < r; ++d)
    if (r % d == 0) p = divide_exact(p, cyclotomic(d));
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(r, p);
  return p;
}

CycPrime::CycPrime(int order) : r(order), phi(cyclotomic(order)) {}

int val_at(const LaurentPoly& p, const CycPrime& prime) {
  if (p.is_zero()) return kInfiniteValuation;
  return split_valuation(p, prime).first;
}

std::pair<int, LaurentPoly> split_valuation(const LaurentPoly& p, const CycPrime& prime) {
  if (p.is_zero()) throw std::domain_error("split_valuation: zero polynomial");
  const int shift = p.low();
  LaurentPoly cur = p.shifted(-shift);
  int k = 0;
  while (cur.high() >= prime.degree()) {
    auto [quot, rem] = divmod(cur, prime.phi);
    if (!rem.is_zero()) break;
    cur = std::move(quot);
    ++k;
  }
  return {k, cur.shifted(shift)};
}

CycResidue reduce_mod_prime(const LaurentPoly& p, const CycPrime& prime) {
  CycResidue out;
  if (p.is_zero()) return out;
  out.shift = p.low() < 0 ? -p.low() : 0;
  out.remainder = polymod(p.shifted(out.shift), prime.phi);
  return out;
}

LaurentPoly field_mul(const LaurentPoly& a, const LaurentPoly& b, const CycPrime& prime) {
  return polymod(a * b, prime.phi);
}

LaurentPoly field_inverse(const LaurentPoly& a, const CycPrime& prime) {
  LaurentPoly x = cyclotomic_class(a, prime);
  if (x.is_zero()) throw std::domain_error("field_inverse: zero class");
  // Extended Euclid: track s with s*a = r (mod phi).
  LaurentPoly r0 = prime.phi, r1 = x;
  LaurentPoly s0 = 0, s1 = 1;
  while (!(r1.is_constant())) {
    auto [quot, rem] = divmod(r0, r1);
    LaurentPoly s2 = s0 - quot * s1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.is_zero()) throw InternalError("field_inverse: non-invertible class");
  }
  s1 *= Rational(1) / r1.coeff(0);
  return polymod(s1, prime.phi);
}

LaurentPoly cyclotomic_class(const LaurentPoly& p, const CycPrime& prime) {
  if (p.is_zero()) return {};
  const CycResidue red = reduce_mod_prime(p, prime);
  if (red.shift == 0 || red.remainder.is_zero()) return red.remainder;
  // v^{-1} = -(phi - phi(0)) / (phi(0) v) modulo phi.
  const Rational c0 = prime.phi.coeff(0);
  LaurentPoly vinv = (prime.phi - LaurentPoly(c0)).shifted(-1) * (Rational(-1) / c0);
  LaurentPoly out = red.remainder;
  for (int i = 0; i < red.shift; ++i) out = field_mul(out, vinv, prime);
  return out;
}

}  // namespace jantzenlab
