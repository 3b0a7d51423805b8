#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <shared_mutex>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "jantzenlab/affine_weyl.hpp"
#include "jantzenlab/dmatrix.hpp"
#include "jantzenlab/laurent_poly.hpp"

namespace jantzenlab {

using PermPair = std::pair<AffinePermutation, AffinePermutation>;

struct PermPairHash {
  std::size_t operator()(const PermPair& p) const noexcept {
    AffinePermutationHash h;
    return h(p.first) * 1000003u ^ h(p.second);
  }
};

/// Memoized Kazhdan-Lusztig polynomials of the affine symmetric group of rank m.
/// Safe for concurrent use.
class KLTable {
 public:
  explicit KLTable(int m) : m_(m) {}
  KLTable(const KLTable&) = delete;
  KLTable& operator=(const KLTable&) = delete;

  int rank() const { return m_; }

  /// P_{x,w}(q); zero unless x <= w.
  LaurentPoly kl_poly(const AffinePermutation& x, const AffinePermutation& w);
  /// Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}, zero for even length difference.
  int mu(const AffinePermutation& x, const AffinePermutation& w);
  /// t^{l(w)-l(x)} P_{x,w}(t^{-2}), with t standing for q^{-1/2}.
  /// Throws std::domain_error unless x <= w.
  LaurentPoly normalized_kl(const AffinePermutation& x, const AffinePermutation& w);
  /// Inverse polynomial Qtilde_{x,z}(t), defined by
  /// sum_x Qtilde_{x,z}(-t) Ptilde_{x,w}(t) = delta_{z,w}; zero unless z <= x.
  LaurentPoly inverse_kl(const AffinePermutation& x, const AffinePermutation& z);

  /// Bruhat interval below w (cached).
  const std::vector<AffinePermutation>& lower(const AffinePermutation& w);

  /// Checks sum_x Qtilde_{x,z}(-t) Ptilde_{x,w}(t) = delta_{z,w} for the pair.
  bool orthogonality_holds(const AffinePermutation& z, const AffinePermutation& w);

  /// Checks P_{w,w} = 1, P_{x,w} = 0 off Bruhat order and the degree bound on
  /// every stored entry. Throws InternalError on failure; returns the count.
  std::size_t verify_invariants();

  std::size_t size() const;
  void clear();

  std::vector<std::tuple<AffinePermutation, AffinePermutation, LaurentPoly>> export_memo() const;
  void import_memo(const std::vector<std::tuple<AffinePermutation, AffinePermutation, LaurentPoly>>& entries);

 private:
  struct MuEntry {
    AffinePermutation z;
    int mu;
  };
  const std::vector<MuEntry>& mu_list(const AffinePermutation& v);
  LaurentPoly compute_kl(const AffinePermutation& x, const AffinePermutation& w);

  int m_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<PermPair, LaurentPoly, PermPairHash> kl_;
  std::unordered_map<PermPair, LaurentPoly, PermPairHash> inverse_;
  std::unordered_map<AffinePermutation, std::unique_ptr<std::vector<AffinePermutation>>, AffinePermutationHash>
      lower_;
  std::unordered_map<AffinePermutation, std::unique_ptr<std::vector<MuEntry>>, AffinePermutationHash> mu_lists_;
};

/// Qtilde_{x,z} for every pair in the set. The set must be convex: whenever z <= x
/// are both in it, so is every a with z <= a <= x (std::domain_error otherwise).
std::map<PermPair, LaurentPoly> inverse_kl(const std::vector<AffinePermutation>& interval, KLTable& table);

/// Counters describing what d_matrix_kl verified.
struct KLRunStats {
  std::size_t orbits = 0;
  std::size_t orthogonality_checks = 0;
  std::size_t coset_invariance_checks = 0;
  std::size_t memo_entries_checked = 0;
};

struct KLOptions {
  int jobs = 1;
  /// Shared table (rank must equal n); a private one is used when null.
  KLTable* table = nullptr;
  KLRunStats* stats = nullptr;
};

/// Decomposition matrix from the parabolic inverse Kazhdan-Lusztig sums, indexed
/// like canonical_basis_plus (entry (lam, mu) is d_{lam mu}).
DMatrix d_matrix_kl(int n, int r, const KLOptions& options = {});

/// The element w(lam) and antidominant weight for a partition at level -r.
struct OrbitData {
  Partition lam;
  AffineWeight weight;
  AffineWeight nu;
  AffinePermutation w;
};
OrbitData orbit_data(const Partition& lam, int n, int r);

}  // namespace jantzenlab
