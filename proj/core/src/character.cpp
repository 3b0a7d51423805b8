#include "jantzenlab/character.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "jantzenlab/errors.hpp"

namespace jantzenlab {

std::int64_t TruncatedCharacter::coeff(const RootOffset& offset) const {
  auto it = coeffs.find(offset);
  return it == coeffs.end() ? 0 : it->second;
}

bool TruncatedCharacter::in_window(const RootOffset& offset) const {
  if (offset[0] < 0 || offset[0] > depth) return false;
  for (std::size_t i = 1; i < offset.size(); ++i)
    if (offset[i] > height) return false;
  return true;
}

RootOffset simple_root_offset(int i, int m) {
  if (i < 0 || i >= m) throw std::domain_error("simple_root_offset: index out of range");
  RootOffset off(static_cast<std::size_t>(m), 0);
  if (i == 0) {
    off[0] = 1;
    for (int j = 1; j < m; ++j) off[static_cast<std::size_t>(j)] = -1;
  } else {
    off[static_cast<std::size_t>(i)] = 1;
  }
  return off;
}

namespace {

using Series = std::map<RootOffset, std::int64_t>;

// Finite roots eps_a - eps_b in simple-root coordinates (a != b, 1-based).
std::vector<int> finite_root(int a, int b, int m) {
  std::vector<int> c(static_cast<std::size_t>(m - 1), 0);
  const int lo = std::min(a, b), hi = std::max(a, b);
  const int sign = a < b ? 1 : -1;
  for (int i = lo; i < hi; ++i) c[static_cast<std::size_t>(i - 1)] = sign;
  return c;
}

// Multiplies by 1 / (1 - e^{-beta}), keeping entries accepted by `keep`.
template <typename Keep>
Series multiply_geometric(const Series& s, const RootOffset& beta, Keep keep) {
  Series acc;
  for (const auto& [key, val] : s) {
    RootOffset cur = key;
    for (;;) {
      if (!keep(cur)) break;
      acc[cur] += val;
      for (std::size_t i = 0; i < cur.size(); ++i) cur[i] += beta[i];
    }
  }
  return acc;
}

Series depth_positive_product(int m, int depth) {
  Series s{{RootOffset(static_cast<std::size_t>(m), 0), 1}};
  auto within = [&](const RootOffset& off) { return off[0] <= depth; };
  for (int k = 1; k <= depth; ++k) {
    for (int a = 1; a <= m; ++a)
      for (int b = 1; b <= m; ++b) {
        if (a == b) continue;
        RootOffset beta{k};
        for (int c : finite_root(a, b, m)) beta.push_back(c);
        s = multiply_geometric(s, beta, within);
      }
    RootOffset imag(static_cast<std::size_t>(m), 0);
    imag[0] = k;
    for (int j = 0; j < m - 1; ++j) s = multiply_geometric(s, imag, within);
  }
  return s;
}

std::vector<Rational> shifted_finite(const AffineWeight& w) {
  const AffineWeight s = w + rho(w.rank());
  return s.finite;
}

}  // namespace

TruncatedCharacter verma_character(const AffineWeight& lam, int depth, int height) {
  if (depth < 0) throw std::domain_error("verma_character: depth must be nonnegative");
  const int m = lam.rank();
  TruncatedCharacter ch;
  ch.m = m;
  ch.depth = depth;
  ch.height = height < 0 ? depth + 2 : height;
  ch.reference = lam;
  Series s = depth_positive_product(m, depth);
  auto keep = [&](const RootOffset& off) { return ch.in_window(off); };
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) {
      RootOffset beta{0};
      for (int c : finite_root(a, b, m)) beta.push_back(c);
      s = multiply_geometric(s, beta, keep);
    }
  for (auto& [key, val] : s)
    if (val != 0 && ch.in_window(key)) ch.coeffs.emplace(key, val);
  return ch;
}

bool bgg_parabolic_character_check(const AffineWeight& lam, int depth) {
  const int m = lam.rank();
  std::vector<int> shape(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const Rational d = lam.finite[static_cast<std::size_t>(i)] - lam.finite.back();
    if (d.get_den() != 1 || d < 0) throw std::domain_error("bgg check: finite part is not dominant integral");
    if (i > 0 && d > lam.finite[static_cast<std::size_t>(i - 1)] - lam.finite.back())
      throw std::domain_error("bgg check: finite part is not dominant integral");
    shape[static_cast<std::size_t>(i)] = static_cast<int>(d.get_num().get_si());
  }
  const int kappa = static_cast<int>(Rational(lam.level + m).get_num().get_si());

  // Parabolic side: finite Weyl character (tableaux with entries <= m) times
  // the depth >= 1 root product.
  Series weyl;
  int weyl_height = 0;
  const Partition shape_p(shape);
  // Contents may contain zeros, so enumerate weak compositions of |shape|.
  std::vector<int> cnt(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == m - 1) {
      cnt[static_cast<std::size_t>(idx)] = left;
      std::vector<int> pos_parts;
      for (int j = 0; j < m; ++j)
        if (cnt[static_cast<std::size_t>(j)] > 0) pos_parts.push_back(cnt[static_cast<std::size_t>(j)]);
      std::int64_t mult = pos_parts.empty()
                              ? 1
                              : static_cast<std::int64_t>(
                                    semistandard_tableaux(shape_p, Composition(pos_parts)).size());
      if (mult == 0) return;
      RootOffset off{0};
      int acc = 0;
      for (int j = 0; j < m - 1; ++j) {
        acc += shape[static_cast<std::size_t>(j)] - cnt[static_cast<std::size_t>(j)];
        off.push_back(acc);
        weyl_height = std::max(weyl_height, acc);
      }
      weyl[off] += mult;
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cnt[static_cast<std::size_t>(idx)] = v;
      rec(idx + 1, left - v);
    }
  };
  rec(0, shape_p.size());

  const int height = weyl_height + depth + 1;
  const Series outer = depth_positive_product(m, depth);
  Series parabolic;
  for (const auto& [a, x] : weyl)
    for (const auto& [b, y] : outer) {
      RootOffset s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      if (s[0] <= depth) parabolic[s] += x * y;
    }

  // Verma side: alternating sum over the finite Weyl group.
  const TruncatedCharacter base = verma_character(lam, depth, height);
  Series alternating;
  const std::vector<Rational> top = shifted_finite(lam);
  for (const AffinePermutation& y : finite_weyl_group(m)) {
    const AffineWeight moved = dot_act(y, lam, kappa);
    ensure(moved.z == lam.z && moved.level == lam.level, "finite reflection moved the affine part");
    const std::vector<Rational> low = shifted_finite(moved);
    RootOffset gamma{0};
    Rational acc = 0;
    for (int j = 0; j < m - 1; ++j) {
      acc += top[static_cast<std::size_t>(j)] - low[static_cast<std::size_t>(j)];
      ensure(acc.get_den() == 1, "non-integral dot orbit");
      gamma.push_back(static_cast<int>(acc.get_num().get_si()));
    }
    const std::int64_t sign = length(y) % 2 == 0 ? 1 : -1;
    for (const auto& [off, val] : base.coeffs) {
      RootOffset s(off.size());
      for (std::size_t i = 0; i < off.size(); ++i) s[i] = off[i] + gamma[i];
      if (base.in_window(s)) alternating[s] += sign * val;
    }
  }

  for (const auto& [off, val] : parabolic)
    if (base.in_window(off) && alternating[off] != val) return false;
  for (const auto& [off, val] : alternating)
    if (val != 0 && base.in_window(off)) {
      auto it = parabolic.find(off);
      if (it == parabolic.end() || it->second != val) return false;
    }
  return true;
}

}  // namespace jantzenlab
