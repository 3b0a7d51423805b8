#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jantzenlab/laurent_poly.hpp"
#include "jantzenlab/partition.hpp"

namespace jantzenlab {

/// Square matrix of polynomials indexed by pairs of partitions of n, stored sparsely.
/// Entry (lam, mu) is the coefficient of |lam> in the column of mu.
class DMatrix {
 public:
  DMatrix() = default;
  DMatrix(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  /// Row and column order: partitions_of(n).
  const std::vector<Partition>& order() const { return order_; }

  LaurentPoly at(const Partition& lam, const Partition& mu) const;
  void set(const Partition& lam, const Partition& mu, LaurentPoly value);
  const std::map<std::pair<Partition, Partition>, LaurentPoly>& entries() const { return entries_; }

  bool is_identity() const;
  /// Entrywise value at q = 1.
  std::map<std::pair<Partition, Partition>, Rational> at_one() const;
  /// New matrix with entry (lam, mu) moved to (lam', mu').
  DMatrix conjugated() const;

  friend bool operator==(const DMatrix& a, const DMatrix& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.entries_ == b.entries_;
  }

 private:
  int n_ = 0;
  int r_ = 0;
  std::vector<Partition> order_;
  std::map<std::pair<Partition, Partition>, LaurentPoly> entries_;
};

struct EntryDifference {
  Partition lam;
  Partition mu;
  LaurentPoly left;
  LaurentPoly right;
};

/// First entry (in row/column order) where the two matrices differ.
std::optional<EntryDifference> first_difference(const DMatrix& a, const DMatrix& b);

/// Throws InternalError unless d_{mu mu} = 1, off-diagonal entries lie in qZ[q],
/// and nonzero entries only occur for lam dominated by mu.
void check_unitriangular(const DMatrix& d);

/// Serializations. JSON rows follow order(); entry keys are partition strings.
std::string to_json(const DMatrix& d, const std::string& method);
std::string to_csv(const DMatrix& d);
std::string to_tex(const DMatrix& d);

}  // namespace jantzenlab
