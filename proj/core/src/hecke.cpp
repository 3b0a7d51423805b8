#include "jantzenlab/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "jantzenlab/errors.hpp"

namespace jantzenlab {

namespace {

int inversions(const Permutation& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++c;
  return c;
}

}  // namespace

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  if (n < 1 || n > 8) throw std::domain_error("SymmetricGroup: degree must be in [1, 8]");
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do {
    index_.emplace(p, elements_.size());
    elements_.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  identity_ = 0;
  const std::size_t order = elements_.size();
  lengths_.resize(order);
  inverses_.resize(order);
  for (std::size_t k = 0; k < order; ++k) {
    const Permutation& e = elements_[k];
    lengths_[k] = inversions(e);
    Permutation inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) inv[static_cast<std::size_t>(e[i] - 1)] = static_cast<int>(i + 1);
    inverses_[k] = index_.at(inv);
  }
  left_.assign(static_cast<std::size_t>(std::max(n - 1, 0)), std::vector<std::size_t>(order));
  right_.assign(static_cast<std::size_t>(std::max(n - 1, 0)), std::vector<std::size_t>(order));
  for (int i = 1; i < n; ++i)
    for (std::size_t k = 0; k < order; ++k) {
      Permutation l = elements_[k], r = elements_[k];
      // s_i w swaps the values i and i+1; w s_i swaps positions i and i+1.
      for (int& x : l) {
        if (x == i)
          x = i + 1;
        else if (x == i + 1)
          x = i;
      }
      std::swap(r[static_cast<std::size_t>(i - 1)], r[static_cast<std::size_t>(i)]);
      left_[static_cast<std::size_t>(i - 1)][k] = index_.at(l);
      right_[static_cast<std::size_t>(i - 1)][k] = index_.at(r);
    }
  words_.resize(order);
  for (std::size_t k = 0; k < order; ++k) {
    std::size_t cur = k;
    std::vector<int> word;
    while (lengths_[cur] > 0) {
      for (int i = 1; i < n; ++i) {
        const std::size_t next = left_[static_cast<std::size_t>(i - 1)][cur];
        if (lengths_[next] < lengths_[cur]) {
          word.push_back(i);
          cur = next;
          break;
        }
      }
    }
    words_[k] = std::move(word);
  }
  by_length_.resize(order);
  std::iota(by_length_.begin(), by_length_.end(), 0);
  std::stable_sort(by_length_.begin(), by_length_.end(),
                   [&](std::size_t a, std::size_t b) { return lengths_[a] < lengths_[b]; });
}

std::size_t SymmetricGroup::index(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::invalid_argument("not a permutation of the right degree");
  return it->second;
}

std::size_t SymmetricGroup::compose(std::size_t u, std::size_t w) const {
  const Permutation& a = elements_[u];
  const Permutation& b = elements_[w];
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i] - 1)];
  return index_.at(out);
}

HeckeElement::HeckeElement(std::shared_ptr<const SymmetricGroup> group)
    : group_(std::move(group)), coeffs_(group_->order()) {}

bool HeckeElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const LaurentPoly& c) { return c.is_zero(); });
}

std::vector<std::size_t> HeckeElement::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < coeffs_.size(); ++w)
    if (!coeffs_[w].is_zero()) out.push_back(w);
  return out;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (std::size_t w = 0; w < coeffs_.size(); ++w)
    if (!o.coeffs_[w].is_zero()) coeffs_[w] += o.coeffs_[w];
  return *this;
}

HeckeElement& HeckeElement::operator*=(const LaurentPoly& c) {
  for (auto& x : coeffs_)
    if (!x.is_zero()) x *= c;
  return *this;
}

HeckeElement HeckeAlgebra::basis(std::size_t w) const {
  HeckeElement h(group_);
  h.add(w, 1);
  return h;
}

namespace {

const LaurentPoly& v_minus_one() {
  static const LaurentPoly p(0, {-1, 1});
  return p;
}

const LaurentPoly& v_poly() {
  static const LaurentPoly p = LaurentPoly::monomial(1);
  return p;
}

}  // namespace

HeckeElement HeckeAlgebra::left_generator(int i, const HeckeElement& h) const {
  const SymmetricGroup& g = *group_;
  HeckeElement out(group_);
  for (std::size_t w = 0; w < g.order(); ++w) {
    const LaurentPoly& c = h.coeff(w);
    if (c.is_zero()) continue;
    const std::size_t sw = g.left_mul(i, w);
    if (g.length(sw) > g.length(w)) {
      out.add(sw, c);
    } else {
      out.add(w, c * v_minus_one());
      out.add(sw, c * v_poly());
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::right_generator(const HeckeElement& h, int i) const {
  const SymmetricGroup& g = *group_;
  HeckeElement out(group_);
  for (std::size_t w = 0; w < g.order(); ++w) {
    const LaurentPoly& c = h.coeff(w);
    if (c.is_zero()) continue;
    const std::size_t ws = g.right_mul(w, i);
    if (g.length(ws) > g.length(w)) {
      out.add(ws, c);
    } else {
      out.add(w, c * v_minus_one());
      out.add(ws, c * v_poly());
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::star(const HeckeElement& h) const {
  HeckeElement out(group_);
  for (std::size_t w : h.support()) out.add(group_->inverse(w), h.coeff(w));
  return out;
}

std::vector<std::size_t> HeckeAlgebra::young_subgroup(const Composition& mu) const {
  const SymmetricGroup& g = *group_;
  if (mu.size() != g.degree()) throw std::domain_error("young_subgroup: composition of the wrong size");
  std::vector<int> block(static_cast<std::size_t>(g.degree()));
  int pos = 0;
  for (int b = 0; b < mu.length(); ++b)
    for (int k = 0; k < mu.parts[static_cast<std::size_t>(b)]; ++k) block[static_cast<std::size_t>(pos++)] = b;
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < g.order(); ++w) {
    const Permutation& p = g.element(w);
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i)
      ok = block[i] == block[static_cast<std::size_t>(p[i] - 1)];
    if (ok) out.push_back(w);
  }
  return out;
}

std::pair<HeckeElement, HeckeElement> HeckeAlgebra::x_and_y(const Composition& mu) const {
  HeckeElement x(group_), y(group_);
  for (std::size_t w : young_subgroup(mu)) {
    const int l = group_->length(w);
    x.add(w, 1);
    y.add(w, LaurentPoly::monomial(-l, l % 2 == 0 ? 1 : -1));
  }
  return {x, y};
}

HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b) {
  ensure(a.group().degree() == b.group().degree(),
         "hecke_multiply: elements of different algebras");
  const SymmetricGroup& g = a.group();
  HeckeElement out(a.group_ptr());
  for (std::size_t u : a.support()) {
    // T_u b = T_{s_1} (T_{s_2} ( ... T_{s_k} b)).
    HeckeElement cur = b;
    const auto& word = g.reduced_word(u);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      HeckeElement next(a.group_ptr());
      for (std::size_t w : cur.support()) {
        const LaurentPoly& c = cur.coeff(w);
        const std::size_t sw = g.left_mul(*it, w);
        if (g.length(sw) > g.length(w)) {
          next.add(sw, c);
        } else {
          next.add(w, c * v_minus_one());
          next.add(sw, c * v_poly());
        }
      }
      cur = std::move(next);
    }
    cur *= a.coeff(u);
    out += cur;
  }
  return out;
}

LaurentPoly poincare_polynomial(const Composition& mu) {
  LaurentPoly p = 1;
  for (int part : mu.parts)
    for (int k = 1; k <= part; ++k) {
      LaurentPoly qk;
      for (int j = 0; j < k; ++j) qk += LaurentPoly::monomial(j);
      p *= qk;
    }
  return p;
}

}  // namespace jantzenlab
