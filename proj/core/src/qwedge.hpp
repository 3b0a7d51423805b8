#pragma once

#include <map>
#include <vector>

#include "jantzenlab/fock.hpp"

namespace jantzenlab::detail {

/// Bar involution of the Fock space via semi-infinite q-wedges.
/// bar_of_basis(lam) is bar(|lam>) expanded in the partition basis.
class BarInvolution {
 public:
  explicit BarInvolution(int r) : r_(r) {}

  const FockVector& bar_of_basis(const Partition& lam);
  /// bar of an arbitrary vector (coefficients are barred too).
  FockVector apply(const FockVector& v);

  /// Same as bar_of_basis but using a wedge of the given length; used to
  /// check independence of the truncation.
  FockVector bar_of_basis_with_length(const Partition& lam, int wedge_length) const;

 private:
  int r_;
  std::map<Partition, FockVector> memo_;
};

}  // namespace jantzenlab::detail
