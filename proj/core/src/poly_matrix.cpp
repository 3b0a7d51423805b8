#include "jantzenlab/poly_matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "jantzenlab/errors.hpp"

namespace jantzenlab {

namespace {

// Divides a row by the rational content of its entries so that repeated
// elimination steps do not inflate the coefficients.
void normalize_row(PolyMatrix& m, std::size_t row) {
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& [e, c] : m(row, j).terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
  if (num_gcd == 0 || (num_gcd == 1 && den_lcm == 1)) return;
  const Rational scale(den_lcm, num_gcd);
  for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= scale;
}

}  // namespace

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<LaurentPoly>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("PolyMatrix: ragged rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool PolyMatrix::is_symmetric() const { return is_square() && *this == transpose(); }

PolyMatrix PolyMatrix::select(const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols) const {
  PolyMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("PolyMatrix: shape mismatch");
  PolyMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

LaurentPoly determinant(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  PolyMatrix a = m;
  LaurentPoly prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = divide_exact(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  LaurentPoly det = a(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

std::size_t rank(const PolyMatrix& m) {
  PolyMatrix a = m;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t p = r;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, col).is_zero()) continue;
      const LaurentPoly f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) = a(r, col) * a(i, j) - f * a(r, j);
      normalize_row(a, i);
    }
    ++r;
  }
  return r;
}

std::vector<int> elementary_divisor_vals(const ValuationMatrix& vm) {
  PolyMatrix a = vm.entries;
  const CycPrime& prime = vm.prime;
  std::vector<int> vals;
  std::size_t top = 0;
  std::vector<std::size_t> live_cols(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) live_cols[j] = j;

  while (top < a.rows() && !live_cols.empty()) {
    int best = kInfiniteValuation;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = top; i < a.rows(); ++i)
      for (std::size_t jj = 0; jj < live_cols.size(); ++jj) {
        const int v = val_at(a(i, live_cols[jj]), prime);
        if (v < best) {
          best = v;
          bi = i;
          bj = jj;
        }
      }
    if (best == kInfiniteValuation) break;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(top, j), a(bi, j));
    const std::size_t pc = live_cols[bj];
    auto [k, unit] = split_valuation(a(top, pc), prime);
    const LaurentPoly phik = [&] {
      LaurentPoly p = 1;
      for (int i = 0; i < k; ++i) p *= prime.phi;
      return p;
    }();
    for (std::size_t i = top + 1; i < a.rows(); ++i) {
      if (a(i, pc).is_zero()) continue;
      const LaurentPoly factor = divide_exact(a(i, pc), phik);
      for (std::size_t j : live_cols) a(i, j) = unit * a(i, j) - factor * a(top, j);
      ensure(a(i, pc).is_zero(), "elementary_divisor_vals: elimination left a residue");
      normalize_row(a, i);
    }
    vals.push_back(best);
    live_cols.erase(live_cols.begin() + static_cast<std::ptrdiff_t>(bj));
    ++top;
  }
  std::sort(vals.begin(), vals.end());
  return vals;
}

std::size_t rank_mod_prime(const ValuationMatrix& vm) {
  const CycPrime& prime = vm.prime;
  PolyMatrix a(vm.entries.rows(), vm.entries.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = cyclotomic_class(vm.entries(i, j), prime);
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t p = r;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    const LaurentPoly inv = field_inverse(a(r, col), prime);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, col).is_zero()) continue;
      const LaurentPoly f = field_mul(a(i, col), inv, prime);
      for (std::size_t j = col; j < a.cols(); ++j)
        a(i, j) = cyclotomic_class(a(i, j) - f * a(r, j), prime);
    }
    ++r;
  }
  return r;
}

}  // namespace jantzenlab
