#pragma once

#include <cstdint>
#include <map>

#include "jantzenlab/dmatrix.hpp"
#include "jantzenlab/laurent_poly.hpp"
#include "jantzenlab/partition.hpp"

namespace jantzenlab {

/// Element of the level-one Fock space of U_q(affine sl_r): a finite
/// combination of partitions with Laurent polynomial coefficients.
class FockVector {
 public:
  explicit FockVector(int r) : r_(r) {}
  FockVector(int r, const Partition& lam, LaurentPoly coeff = 1);

  int r() const { return r_; }
  const std::map<Partition, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const Partition& lam) const;

  void add(const Partition& lam, const LaurentPoly& c);
  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const LaurentPoly& c);

  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  int r_;
  std::map<Partition, LaurentPoly> terms_;
};

FockVector operator*(const LaurentPoly& c, FockVector v);
FockVector operator+(FockVector a, const FockVector& b);
FockVector operator-(FockVector a, const FockVector& b);

/// Which added-node neighbours contribute to the exponent of f_i^{(k)}.
/// `above` is the convention under which f_i commutes with the bar involution.
enum class ExponentConvention { above, below };

const char* to_string(ExponentConvention c);

/// Divided power f_i^{(k)}. Throws std::domain_error when i is not in [0, r) or k < 1.
FockVector apply_f(int i, int k, const FockVector& v,
                   ExponentConvention convention = ExponentConvention::above);

/// Ladder monomial applied to the vacuum.
FockVector first_approximation(const Partition& lam, int r);

/// Transition matrix of the canonical basis G^+: column mu holds G^+_mu.
/// A nonzero order_seed processes partitions in a random linear extension of
/// dominance instead of lexicographic order; the result must not change.
DMatrix canonical_basis_plus(int n, int r, std::uint64_t order_seed = 0);

/// Matrix of e_{lam mu}(q), with G^-_lam = sum_mu e_{lam mu}(-q^{-1}) |mu>.
DMatrix canonical_basis_minus(int n, int r);

}  // namespace jantzenlab
