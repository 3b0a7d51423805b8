#include <doctest.h>

#include <random>
#include <stdexcept>

#include "jantzenlab/errors.hpp"
#include "jantzenlab/fock.hpp"
#include "jantzenlab/kl.hpp"
#include "oracles.hpp"

using namespace jantzenlab;

namespace {

AffinePermutation W(std::vector<int> window) { return AffinePermutation(std::move(window)); }

}  // namespace

TEST_CASE("finite Kazhdan-Lusztig polynomials of S_4") {
  KLTable t(4);
  const AffinePermutation e = AffinePermutation::identity(4);
  CHECK(t.kl_poly(e, W({3, 4, 1, 2})) == LaurentPoly(0, {1, 1}));
  CHECK(t.kl_poly(e, W({4, 2, 3, 1})) == LaurentPoly(0, {1, 1}));
  CHECK(t.kl_poly(e, W({4, 3, 2, 1})) == LaurentPoly(1));
  CHECK(t.kl_poly(W({1, 3, 2, 4}), W({3, 4, 1, 2})) == LaurentPoly(0, {1, 1}));
  CHECK(t.kl_poly(W({2, 1, 3, 4}), W({3, 4, 1, 2})) == LaurentPoly(1));
  CHECK(t.kl_poly(W({2, 1, 3, 4}), W({1, 3, 2, 4})).is_zero());
  CHECK(t.mu(W({1, 3, 2, 4}), W({3, 4, 1, 2})) == 1);
}

TEST_CASE("affine Kazhdan-Lusztig polynomials agree with the R-polynomial recursion") {
  for (int m : {2, 3}) {
    KLTable table(m);
    oracle::RPolyKL slow(m);
    const auto ball = oracle::cayley_ball(m, m == 2 ? 8 : 6);
    for (const auto& [w, d] : ball)
      for (const AffinePermutation& x : lower_interval(w)) CHECK(table.kl_poly(x, w) == slow.kl(x, w));
  }
}

TEST_CASE("structural identities") {
  KLTable table(3);
  const auto ball = oracle::cayley_ball(3, 6);
  for (const auto& [w, d] : ball) {
    CHECK(table.kl_poly(w, w) == LaurentPoly(1));
    for (const auto& [x, dx] : ball) {
      const LaurentPoly p = table.kl_poly(x, w);
      if (!bruhat_leq(x, w)) {
        CHECK(p.is_zero());
        CHECK_THROWS_AS(table.normalized_kl(x, w), std::domain_error);
        continue;
      }
      CHECK(p.coeff(0) == 1);
      CHECK(2 * p.high() <= std::max(0, d - dx - 1));
      CHECK(p.has_integer_coeffs());
      // Ptilde_{x,w}(t) = t^{l(w)-l(x)} P_{x,w}(t^{-2}).
      CHECK(table.normalized_kl(x, w) == p.substitute_power(-2).shifted(d - dx));
    }
  }
  CHECK(table.verify_invariants() == table.size());
  CHECK(table.size() > 0);
}

TEST_CASE("coset invariance on random triples") {
  std::mt19937_64 rng(2024);
  KLTable table(3);
  const auto finite = finite_weyl_group(3);
  for (int trial = 0; trial < 200; ++trial) {
    const AffinePermutation w = oracle::random_coset_rep(rng, 3, 8);
    REQUIRE(is_q_coset_rep(w));
    const auto& lower = table.lower(w);
    const AffinePermutation& x = lower[rng() % lower.size()];
    const AffinePermutation& y = finite[rng() % finite.size()];
    CHECK(bruhat_leq(y * x, w));
    CHECK(table.kl_poly(y * x, w) == table.kl_poly(x, w));
  }
}

TEST_CASE("inverse polynomials satisfy orthogonality") {
  KLTable table(3);
  const auto ball = oracle::cayley_ball(3, 5);
  for (const auto& [w, d] : ball)
    for (const AffinePermutation& z : table.lower(w)) CHECK(table.orthogonality_holds(z, w));
  const AffinePermutation w = AffinePermutation::from_word({0, 1, 2, 1}, 3);
  CHECK(table.inverse_kl(w, w) == LaurentPoly(1));
  const auto interval = table.lower(w);
  const auto q = inverse_kl(interval, table);
  for (const auto& [key, val] : q) CHECK(val == table.inverse_kl(key.first, key.second));
  // Not convex: s_1 s_2 and e without s_1 or s_2.
  const std::vector<AffinePermutation> gap{AffinePermutation::identity(3), AffinePermutation::from_word({1, 2}, 3)};
  CHECK_THROWS_AS(inverse_kl(gap, table), std::domain_error);
}

TEST_CASE("memo export and import") {
  KLTable a(3);
  const auto ball = oracle::cayley_ball(3, 5);
  for (const auto& [w, d] : ball)
    for (const AffinePermutation& x : a.lower(w)) a.kl_poly(x, w);
  const auto memo = a.export_memo();
  CHECK(std::is_sorted(memo.begin(), memo.end(), [](const auto& l, const auto& r) {
    return std::tie(std::get<0>(l), std::get<1>(l)) < std::tie(std::get<0>(r), std::get<1>(r));
  }));
  KLTable b(3);
  b.import_memo(memo);
  CHECK(b.size() == a.size());
  CHECK(b.export_memo() == memo);
  KLTable bad(3);
  bad.import_memo({{AffinePermutation::identity(3), AffinePermutation::identity(3), LaurentPoly(2)}});
  CHECK_THROWS_AS(bad.verify_invariants(), InternalError);
  a.clear();
  CHECK(a.size() == 0);
}

TEST_CASE("orbit data") {
  for (int r : {3, 4})
    for (int n = 1; n <= 4; ++n)
      for (const Partition& lam : partitions_of(n)) {
        const OrbitData od = orbit_data(lam, n, r);
        CHECK(od.weight == embed_partition(lam, n, n, -r));
        CHECK(is_dot_antidominant(od.nu));
        CHECK(dot_act(od.w, od.nu, -r) == od.weight);
      }
}

TEST_CASE("decomposition matrices from inverse KL polynomials") {
  for (auto [n, r] : {std::pair{2, 3}, {3, 3}, {3, 4}, {4, 3}, {4, 4}, {3, 5}}) {
    KLRunStats stats;
    KLOptions opts;
    opts.stats = &stats;
    opts.jobs = 2;
    const DMatrix d = d_matrix_kl(n, r, opts);
    CHECK(d == canonical_basis_plus(n, r));
    CHECK(stats.orbits > 0);
    CHECK(stats.memo_entries_checked > 0);
    if (!d.is_identity()) {
      CHECK(stats.orthogonality_checks > 0);
      CHECK(stats.coset_invariance_checks > 0);
    }
  }
  KLTable shared(3);
  KLOptions opts;
  opts.table = &shared;
  const DMatrix first = d_matrix_kl(3, 3, opts);
  CHECK(shared.size() > 0);
  CHECK(d_matrix_kl(3, 3, opts) == first);
  KLTable wrong(4);
  opts.table = &wrong;
  CHECK_THROWS_AS(d_matrix_kl(3, 3, opts), std::domain_error);
  CHECK_THROWS_AS(d_matrix_kl(3, 2), std::domain_error);
  CHECK_THROWS_AS(d_matrix_kl(0, 3), std::domain_error);
}
