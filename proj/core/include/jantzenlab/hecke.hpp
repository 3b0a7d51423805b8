#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "jantzenlab/laurent_poly.hpp"
#include "jantzenlab/partition.hpp"

namespace jantzenlab {

/// Permutation of {1..n} in one-line notation: p[i-1] = p(i).
using Permutation = std::vector<int>;

/// The symmetric group S_n with its elements numbered and multiplication by
/// simple reflections tabulated. Composition is (uw)(i) = u(w(i)).
class SymmetricGroup {
 public:
  explicit SymmetricGroup(int n);

  int degree() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const Permutation& element(std::size_t idx) const { return elements_[idx]; }
  std::size_t index(const Permutation& p) const;
  std::size_t identity() const { return identity_; }
  int length(std::size_t idx) const { return lengths_[idx]; }
  std::size_t inverse(std::size_t idx) const { return inverses_[idx]; }
  /// s_i w and w s_i for 1 <= i < n.
  std::size_t left_mul(int i, std::size_t w) const { return left_[static_cast<std::size_t>(i - 1)][w]; }
  std::size_t right_mul(std::size_t w, int i) const { return right_[static_cast<std::size_t>(i - 1)][w]; }
  std::size_t compose(std::size_t u, std::size_t w) const;
  /// w = s_{word[0]} s_{word[1]} ...
  const std::vector<int>& reduced_word(std::size_t idx) const { return words_[idx]; }
  /// Element indices in nondecreasing length order.
  const std::vector<std::size_t>& by_length() const { return by_length_; }

 private:
  int n_;
  std::vector<Permutation> elements_;
  std::map<Permutation, std::size_t> index_;
  std::size_t identity_ = 0;
  std::vector<int> lengths_;
  std::vector<std::size_t> inverses_;
  std::vector<std::vector<std::size_t>> left_;
  std::vector<std::vector<std::size_t>> right_;
  std::vector<std::vector<int>> words_;
  std::vector<std::size_t> by_length_;
};

/// Element of the Hecke algebra of S_n in the standard basis {T_w}.
class HeckeElement {
 public:
  explicit HeckeElement(std::shared_ptr<const SymmetricGroup> group);

  const SymmetricGroup& group() const { return *group_; }
  const std::shared_ptr<const SymmetricGroup>& group_ptr() const { return group_; }
  const LaurentPoly& coeff(std::size_t w) const { return coeffs_[w]; }
  LaurentPoly coeff(const Permutation& w) const { return coeffs_[group_->index(w)]; }
  void add(std::size_t w, const LaurentPoly& c) { coeffs_[w] += c; }
  bool is_zero() const;
  /// Indices with nonzero coefficient.
  std::vector<std::size_t> support() const;

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator*=(const LaurentPoly& c);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::shared_ptr<const SymmetricGroup> group_;
  std::vector<LaurentPoly> coeffs_;
};

/// Iwahori-Hecke algebra of S_n over Z[v, v^{-1}] with (T_s + 1)(T_s - v) = 0.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(int n) : group_(std::make_shared<SymmetricGroup>(n)) {}

  const SymmetricGroup& group() const { return *group_; }
  int degree() const { return group_->degree(); }

  HeckeElement zero() const { return HeckeElement(group_); }
  HeckeElement basis(std::size_t w) const;
  HeckeElement basis(const Permutation& w) const { return basis(group_->index(w)); }
  HeckeElement one() const { return basis(group_->identity()); }

  /// T_{s_i} h and h T_{s_i}.
  HeckeElement left_generator(int i, const HeckeElement& h) const;
  HeckeElement right_generator(const HeckeElement& h, int i) const;

  /// The anti-involution T_w -> T_{w^{-1}}.
  HeckeElement star(const HeckeElement& h) const;

  /// x_mu = sum_{w in S_mu} T_w and y_mu = sum_{w in S_mu} (-v)^{-l(w)} T_w.
  std::pair<HeckeElement, HeckeElement> x_and_y(const Composition& mu) const;

  /// Elements of the Young subgroup of mu (consecutive blocks).
  std::vector<std::size_t> young_subgroup(const Composition& mu) const;

 private:
  std::shared_ptr<const SymmetricGroup> group_;
};

/// Product in the Hecke algebra, by left multiplication along reduced words.
HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b);

/// Sum over w in S_mu of v^{l(w)}.
LaurentPoly poincare_polynomial(const Composition& mu);

}  // namespace jantzenlab
