#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "jantzenlab/laurent_poly.hpp"
#include "jantzenlab/partition.hpp"

namespace jantzenlab {

/// Weight of affine sl_m: finite part on eps_1..eps_m (coordinates summing to
/// zero), coefficient of omega_0 (the level) and coefficient of delta.
struct AffineWeight {
  std::vector<Rational> finite;
  Rational level;
  Rational z;

  int rank() const { return static_cast<int>(finite.size()); }
  std::string to_string() const;

  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
  friend bool operator<(const AffineWeight& a, const AffineWeight& b);
};

AffineWeight operator+(const AffineWeight& a, const AffineWeight& b);
AffineWeight operator-(const AffineWeight& a, const AffineWeight& b);

/// Invariant form: eps_i orthonormal, <omega_0 : delta> = 1, omega_0 and delta isotropic.
Rational pairing(const AffineWeight& a, const AffineWeight& b);

/// rho = rho_0 + m omega_0.
AffineWeight rho(int m);

/// The weight attached to a partition of n with at most m parts at level kappa - m.
/// Throws std::domain_error if lam has more than m parts, |lam| != n or kappa >= 0.
AffineWeight embed_partition(const Partition& lam, int n, int m, int kappa);

/// <w + rho, alpha_i^vee> for the simple coroots, i = 0..m-1.
Rational shifted_coroot_pairing(const AffineWeight& w, int i);

/// Dot action s_i . w = s_i(w + rho) - rho. Throws std::domain_error when the level
/// of w + rho is not kappa or i is out of range.
AffineWeight dot_reflect(int i, const AffineWeight& w, int kappa);

/// True when w + rho pairs nonpositively with every simple coroot.
bool is_dot_antidominant(const AffineWeight& w);

struct AntidominantResult {
  AffineWeight nu;
  /// Reflections in the order they were applied: nu = s_{word.back()} ... s_{word.front()} . w.
  std::vector<int> word;
};

/// Walks down the dot orbit of w by reflections with positive coroot pairing.
AntidominantResult antidominant_representative(const AffineWeight& w, int kappa);

/// Element of the affine symmetric group in window notation [w(1), ..., w(m)],
/// extended by w(i + m) = w(i) + m.
class AffinePermutation {
 public:
  AffinePermutation() = default;
  /// Throws std::invalid_argument unless the window defines an affine permutation.
  explicit AffinePermutation(std::vector<int> window);

  static AffinePermutation identity(int m);
  /// s_0 .. s_{m-1}; s_0 is the affine reflection.
  static AffinePermutation simple(int i, int m);
  static AffinePermutation from_word(const std::vector<int>& word, int m);

  int rank() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }
  /// Value at any integer.
  int operator()(int j) const;
  AffinePermutation inverse() const;
  bool is_identity() const;
  /// "[2,1,3]"
  std::string to_string() const;

  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;
  friend auto operator<=>(const AffinePermutation&, const AffinePermutation&) = default;

 private:
  std::vector<int> window_;
};

/// Composition (u w)(j) = u(w(j)).
AffinePermutation operator*(const AffinePermutation& u, const AffinePermutation& w);

struct AffinePermutationHash {
  std::size_t operator()(const AffinePermutation& w) const noexcept;
};

int length(const AffinePermutation& w);
/// i with l(s_i w) < l(w).
std::vector<int> left_descents(const AffinePermutation& w);
/// i with l(w s_i) < l(w).
std::vector<int> right_descents(const AffinePermutation& w);
/// A reduced word: w = s_{word[0]} s_{word[1]} ...
std::vector<int> reduced_word(const AffinePermutation& w);

/// All elements of the finite symmetric group S_m inside the affine group.
std::vector<AffinePermutation> finite_weyl_group(int m);

/// True iff w is the longest element of its coset S_m w.
bool is_q_coset_rep(const AffinePermutation& w);

/// Bruhat order, memoized in a process-wide table.
bool bruhat_leq(const AffinePermutation& x, const AffinePermutation& w);
void clear_bruhat_cache();

/// Every x <= w in Bruhat order (unsorted).
std::vector<AffinePermutation> lower_interval(const AffinePermutation& w);

/// Dot action of a group element: w . lam.
AffineWeight dot_act(const AffinePermutation& w, const AffineWeight& lam, int kappa);

/// Shortest w with mu = w . nu, for nu with nu + rho antidominant. Throws
/// std::domain_error if nu is not antidominant or mu is not in its orbit.
AffinePermutation shortest_element(const AffineWeight& mu, const AffineWeight& nu, int kappa);

}  // namespace jantzenlab
