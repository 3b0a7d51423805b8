#include "qwedge.hpp"

#include <algorithm>

#include "jantzenlab/errors.hpp"

namespace jantzenlab::detail {

namespace {

using Wedge = std::vector<int>;

// Rewrites a q-wedge with an ordered pair at some position into normally
// ordered (strictly decreasing) wedges.
std::map<Wedge, LaurentPoly> straighten(const Wedge& start, int r) {
  std::map<Wedge, LaurentPoly> out;
  std::map<Wedge, LaurentPoly> work;
  work.emplace(start, LaurentPoly(1));
  const LaurentPoly pref = LaurentPoly::monomial(-2) - LaurentPoly(1);
  while (!work.empty()) {
    auto node = work.extract(std::prev(work.end()));
    const Wedge& k = node.key();
    const LaurentPoly& c = node.mapped();
    if (c.is_zero()) continue;
    std::size_t j = k.size();
    for (std::size_t t = 0; t + 1 < k.size(); ++t)
      if (k[t] <= k[t + 1]) {
        j = t;
        break;
      }
    if (j == k.size()) {
      auto& slot = out[k];
      slot += c;
      if (slot.is_zero()) out.erase(k);
      continue;
    }
    const int l = k[j], m = k[j + 1];
    if (l == m) continue;
    auto emit = [&](int a, int b, const LaurentPoly& coeff) {
      Wedge nk = k;
      nk[j] = a;
      nk[j + 1] = b;
      auto& slot = work[nk];
      slot += c * coeff;
    };
    const int i = ((m - l) % r + r) % r;
    if (i == 0) {
      emit(m, l, LaurentPoly(-1));
      continue;
    }
    emit(m, l, LaurentPoly::monomial(-1, -1));
    for (int s = 0;; ++s) {
      int a, b;
      if (s % 2 == 0) {
        a = m - i - (s / 2) * r;
        b = l + i + (s / 2) * r;
      } else {
        a = m - ((s + 1) / 2) * r;
        b = l + ((s + 1) / 2) * r;
      }
      if (a <= b) break;
      emit(a, b, pref * LaurentPoly::monomial(-s, s % 2 == 0 ? 1 : -1));
    }
  }
  return out;
}

Partition unwedge(const Wedge& w) {
  std::vector<int> lam(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) lam[k] = w[k] + static_cast<int>(k);
  return Partition(std::move(lam));
}

}  // namespace

FockVector BarInvolution::bar_of_basis_with_length(const Partition& lam, int wedge_length) const {
  ensure(wedge_length >= lam.length() && wedge_length % r_ == 0,
         "bar involution: wedge length must cover the partition and be a multiple of r");
  Wedge w(static_cast<std::size_t>(wedge_length));
  for (int k = 0; k < wedge_length; ++k) w[static_cast<std::size_t>(wedge_length - 1 - k)] = lam[k] - k;
  const auto normal = straighten(w, r_);
  FockVector out(r_);
  for (const auto& [wedge, c] : normal) out.add(unwedge(wedge), c);
  const LaurentPoly lead = out.coeff(lam);
  ensure(lead.term_count() == 1, "bar involution: leading coefficient is not a monomial");
  const int e = lead.low();
  const LaurentPoly inv = LaurentPoly::monomial(-e, Rational(1) / lead.coeff(e));
  out *= inv;
  return out;
}

const FockVector& BarInvolution::bar_of_basis(const Partition& lam) {
  if (auto it = memo_.find(lam); it != memo_.end()) return it->second;
  const int len = r_ * ((std::max(lam.size(), 1) + r_) / r_ + 1);
  return memo_.emplace(lam, bar_of_basis_with_length(lam, len)).first->second;
}

FockVector BarInvolution::apply(const FockVector& v) {
  FockVector out(r_);
  for (const auto& [lam, c] : v.terms()) out += c.bar() * bar_of_basis(lam);
  return out;
}

}  // namespace jantzenlab::detail
