#include "jantzenlab/fock.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "jantzenlab/errors.hpp"
#include "qwedge.hpp"

namespace jantzenlab {

FockVector::FockVector(int r, const Partition& lam, LaurentPoly coeff) : r_(r) { add(lam, coeff); }

LaurentPoly FockVector::coeff(const Partition& lam) const {
  auto it = terms_.find(lam);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void FockVector::add(const Partition& lam, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lam, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [lam, c] : o.terms_) add(lam, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [lam, c] : o.terms_) add(lam, -c);
  return *this;
}

FockVector& FockVector::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [lam, x] : terms_) x *= c;
  return *this;
}

FockVector operator*(const LaurentPoly& c, FockVector v) { return v *= c; }
FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }

const char* to_string(ExponentConvention c) {
  return c == ExponentConvention::above ? "above" : "below";
}

namespace {

void for_each_subset(const std::vector<Box>& boxes, int k,
                     const std::function<void(const std::vector<Box>&)>& fn) {
  std::vector<Box> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(chosen.size()) == k) {
      fn(chosen);
      return;
    }
    for (std::size_t i = start; i < boxes.size(); ++i) {
      chosen.push_back(boxes[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

int count_beside(const std::vector<Box>& boxes, const Box& g, ExponentConvention conv) {
  return static_cast<int>(std::count_if(boxes.begin(), boxes.end(), [&](const Box& b) {
    return conv == ExponentConvention::above ? b.row < g.row : b.row > g.row;
  }));
}

}  // namespace

FockVector apply_f(int i, int k, const FockVector& v, ExponentConvention convention) {
  const int r = v.r();
  if (i < 0 || i >= r) throw std::domain_error("apply_f: residue out of range");
  if (k < 1) throw std::domain_error("apply_f: divided power must be positive");
  FockVector out(r);
  for (const auto& [lam, c] : v.terms()) {
    const auto addable = addable_boxes(lam, i, r);
    const auto removable = removable_boxes(lam, i, r);
    for_each_subset(addable, k, [&](const std::vector<Box>& added) {
      Partition mu = lam;
      for (const Box& b : added) mu = add_box(mu, b);
      const auto addable_mu = addable_boxes(mu, i, r);
      int exponent = 0;
      for (const Box& g : added)
        exponent += count_beside(addable_mu, g, convention) - count_beside(removable, g, convention);
      out.add(mu, c.shifted(exponent));
    });
  }
  return out;
}

FockVector first_approximation(const Partition& lam, int r) {
  FockVector v(r, Partition{});
  for (const auto& step : ladder_sequence(lam, r)) v = apply_f(step.residue, step.count, v);
  return v;
}

namespace {

std::vector<Partition> processing_order(int n, std::uint64_t seed) {
  std::vector<Partition> parts = partitions_of(n);
  if (seed == 0) return parts;
  // Random linear extension of dominance: repeatedly pick a random maximal element.
  std::mt19937_64 rng(seed);
  std::vector<Partition> out;
  std::vector<Partition> rest = parts;
  while (!rest.empty()) {
    std::vector<std::size_t> maximal;
    for (std::size_t a = 0; a < rest.size(); ++a) {
      bool is_max = true;
      for (std::size_t b = 0; b < rest.size() && is_max; ++b)
        if (a != b && dominates(rest[b], rest[a])) is_max = false;
      if (is_max) maximal.push_back(a);
    }
    std::uniform_int_distribution<std::size_t> pick(0, maximal.size() - 1);
    const std::size_t chosen = maximal[pick(rng)];
    out.push_back(rest[chosen]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(chosen));
  }
  return out;
}

LaurentPoly positive_part(const LaurentPoly& p) { return p.is_zero() ? p : p.slice(1, p.high()); }
LaurentPoly negative_part(const LaurentPoly& p) { return p.is_zero() ? p : p.slice(p.low(), -1); }

// Solves bar(G) = G, G = |lam> + sum over later partitions, with the
// off-leading coefficients taken from the positive (or negative) powers.
FockVector bar_invariant_column(const Partition& lam, int r, const std::vector<Partition>& order,
                                detail::BarInvolution& bar, bool positive) {
  FockVector g(r, lam);
  const auto start = std::find(order.begin(), order.end(), lam);
  for (auto it = std::next(start); it != order.end(); ++it) {
    const Partition& mu = *it;
    LaurentPoly rhs;
    for (const auto& [nu, d] : g.terms()) {
      const LaurentPoly a = bar.bar_of_basis(nu).coeff(mu);
      if (!a.is_zero()) rhs += d.bar() * a;
    }
    ensure(rhs == -rhs.bar(), "canonical basis: bar-invariance system is inconsistent at " +
                                  lam.to_string() + " / " + mu.to_string());
    g.add(mu, positive ? positive_part(rhs) : negative_part(rhs));
  }
  return g;
}

// The ladder correction loop for an r-regular mu, using the final columns of
// all partitions after mu in the order.
FockVector ladder_column(const Partition& mu, int r, const std::vector<Partition>& order,
                         const std::map<Partition, FockVector>& done) {
  FockVector x = first_approximation(mu, r);
  ensure(x.coeff(mu) == LaurentPoly(1), "ladder monomial does not have leading term |mu>");
  const std::size_t cap = 4 * order.size() * order.size() + 16;
  for (std::size_t iter = 0;; ++iter) {
    ensure(iter < cap, "ladder correction loop exceeded its iteration cap");
    const Partition* offender = nullptr;
    for (const Partition& lam : order) {
      if (lam == mu) continue;
      const LaurentPoly c = x.coeff(lam);
      if (!c.is_zero() && c.low() <= 0) {
        offender = &lam;
        break;
      }
    }
    if (!offender) break;
    const LaurentPoly alpha = x.coeff(*offender);
    // Bar-symmetric polynomial agreeing with alpha in degrees <= 0.
    const LaurentPoly low = alpha.slice(alpha.low(), 0);
    const LaurentPoly sym = low + low.slice(low.low(), -1).bar();
    auto it = done.find(*offender);
    ensure(it != done.end(), "ladder correction needs a column that is not yet known: " +
                                 offender->to_string());
    x -= sym * it->second;
  }
  return x;
}

}  // namespace

DMatrix canonical_basis_plus(int n, int r, std::uint64_t order_seed) {
  if (n < 0) throw std::domain_error("canonical_basis_plus: n must be nonnegative");
  if (r < 2) throw std::domain_error("canonical_basis_plus: r must be at least 2");
  const std::vector<Partition> order = processing_order(n, order_seed);
  detail::BarInvolution bar(r);
  std::map<Partition, FockVector> done;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Partition& mu = *it;
    FockVector solved = bar_invariant_column(mu, r, order, bar, true);
    if (is_regular(mu, r)) {
      FockVector ladder = ladder_column(mu, r, order, done);
      ensure(ladder == solved, "ladder and bar-invariant canonical bases disagree at " + mu.to_string());
    }
    done.emplace(mu, std::move(solved));
  }
  DMatrix d(n, r);
  for (const auto& [mu, g] : done)
    for (const auto& [lam, c] : g.terms()) d.set(lam, mu, c);
  check_unitriangular(d);
  return d;
}

DMatrix canonical_basis_minus(int n, int r) {
  const DMatrix d = canonical_basis_plus(n, r);
  const std::vector<Partition>& order = d.order();
  // Invert the unitriangular matrix D(-q): column mu of the inverse, solved
  // from the bottom of the dominance order upward.
  DMatrix inv(n, r);
  for (const Partition& mu : order) {
    const auto mu_pos = std::find(order.begin(), order.end(), mu);
    inv.set(mu, mu, 1);
    for (auto it = std::next(mu_pos); it != order.end(); ++it) {
      const Partition& lam = *it;
      LaurentPoly s;
      for (auto jt = mu_pos; jt != it; ++jt) {
        const LaurentPoly a = d.at(lam, *jt);
        if (a.is_zero()) continue;
        s += a.negate_variable() * inv.at(*jt, mu);
      }
      inv.set(lam, mu, -s);
    }
  }
  DMatrix e(n, r);
  for (const auto& [key, c] : inv.entries()) e.set(conjugate(key.first), conjugate(key.second), c);
  return e;
}

}  // namespace jantzenlab
