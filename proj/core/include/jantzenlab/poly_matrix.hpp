#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "jantzenlab/cyclotomic.hpp"
#include "jantzenlab/laurent_poly.hpp"

namespace jantzenlab {

/// Dense row-major matrix of Laurent polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  PolyMatrix(std::initializer_list<std::initializer_list<LaurentPoly>> rows);

  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  LaurentPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  PolyMatrix transpose() const;
  bool is_symmetric() const;
  /// Submatrix on the given row and column indices.
  PolyMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> data_;
};

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

/// Determinant by fraction-free Bareiss elimination. Requires a square matrix.
LaurentPoly determinant(const PolyMatrix& m);

/// Rank over the fraction field Q(v).
std::size_t rank(const PolyMatrix& m);

/// A polynomial matrix together with the cyclotomic prime at which it is localized.
struct ValuationMatrix {
  PolyMatrix entries;
  CycPrime prime;
};

/// Phi_r-adic valuations of the elementary divisors over Q[v]_(Phi_r), ascending.
/// The result has one entry per unit of rank over the fraction field.
std::vector<int> elementary_divisor_vals(const ValuationMatrix& m);

/// Rank of the entrywise image of m in the field Q[v]/(Phi_r).
std::size_t rank_mod_prime(const ValuationMatrix& m);

}  // namespace jantzenlab
