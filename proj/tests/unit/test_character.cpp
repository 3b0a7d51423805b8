#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "jantzenlab/character.hpp"

using namespace jantzenlab;

namespace {

struct Root {
  RootOffset offset;
  int multiplicity;
};

// Positive affine roots of sl_m with delta-depth <= depth, as offsets (k, c_1..c_{m-1}).
std::vector<Root> positive_roots(int m, int depth) {
  std::vector<Root> out;
  for (int k = 0; k <= depth; ++k) {
    for (int a = 1; a <= m; ++a)
      for (int b = a + 1; b <= m; ++b) {
        RootOffset pos(static_cast<std::size_t>(m), 0), neg(static_cast<std::size_t>(m), 0);
        pos[0] = k;
        neg[0] = k;
        for (int i = a; i < b; ++i) {
          pos[static_cast<std::size_t>(i)] = 1;
          neg[static_cast<std::size_t>(i)] = -1;
        }
        out.push_back({pos, 1});
        if (k > 0) out.push_back({neg, 1});
      }
    if (k > 0) {
      RootOffset imag(static_cast<std::size_t>(m), 0);
      imag[0] = k;
      out.push_back({imag, m - 1});
    }
  }
  // Roots with positive depth first, then the finite positive roots.
  std::stable_partition(out.begin(), out.end(), [](const Root& r) { return r.offset[0] > 0; });
  return out;
}

// Kostant partition function: the number of ways to write `target` as a sum of
// positive roots, counted with multiplicity.
std::int64_t kostant(const RootOffset& target, const std::vector<Root>& roots) {
  std::vector<RootOffset> coins;
  for (const Root& r : roots)
    for (int j = 0; j < r.multiplicity; ++j) coins.push_back(r.offset);
  std::map<std::pair<std::size_t, RootOffset>, std::int64_t> memo;
  std::function<std::int64_t(std::size_t, const RootOffset&)> count = [&](std::size_t idx,
                                                                       const RootOffset& rest) -> std::int64_t {
    if (rest[0] < 0) return 0;
    if (idx == coins.size()) {
      for (int v : rest)
        if (v != 0) return 0;
      return 1;
    }
    if (coins[idx][0] == 0) {
      // Only finite positive roots remain: the remainder must be a nonnegative
      // combination of them.
      if (rest[0] != 0) return 0;
      for (std::size_t i = 1; i < rest.size(); ++i)
        if (rest[i] < 0) return 0;
    }
    auto key = std::make_pair(idx, rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::int64_t total = 0;
    RootOffset cur = rest;
    for (int j = 0; j < 64; ++j) {
      bool bad = cur[0] < 0;
      if (coins[idx][0] == 0)
        for (std::size_t i = 1; i < cur.size(); ++i) bad = bad || cur[i] < 0;
      if (bad) break;
      total += count(idx + 1, cur);
      for (std::size_t i = 0; i < cur.size(); ++i) cur[i] -= coins[idx][i];
    }
    memo.emplace(key, total);
    return total;
  };
  return count(0, target);
}

AffineWeight weight_of(const Partition& lam, int m, int kappa) { return embed_partition(lam, lam.size(), m, kappa); }

}  // namespace

TEST_CASE("simple root offsets") {
  CHECK(simple_root_offset(0, 3) == RootOffset{1, -1, -1});
  CHECK(simple_root_offset(2, 3) == RootOffset{0, 0, 1});
  CHECK_THROWS_AS(simple_root_offset(3, 3), std::domain_error);
}

TEST_CASE("Verma characters match the Kostant partition function") {
  for (int m : {2, 3}) {
    const int depth = m == 2 ? 3 : 2;
    const TruncatedCharacter ch = verma_character(weight_of(Partition{1}, m, -3), depth, 3);
    const auto roots = positive_roots(m, depth);
    CHECK(ch.coeff(RootOffset(static_cast<std::size_t>(m), 0)) == 1);
    // Scan a box that contains the window.
    std::function<void(RootOffset&, std::size_t)> scan = [&](RootOffset& off, std::size_t i) {
      if (i == off.size()) {
        if (ch.in_window(off)) CHECK(ch.coeff(off) == kostant(off, roots));
        return;
      }
      const int lo = i == 0 ? 0 : -depth - 1, hi = i == 0 ? depth : ch.height;
      for (int v = lo; v <= hi; ++v) {
        off[i] = v;
        scan(off, i + 1);
      }
    };
    RootOffset off(static_cast<std::size_t>(m), 0);
    scan(off, 0);
  }
  // sl_2: delta is reached as delta itself or as (delta - alpha_1) + alpha_1.
  const TruncatedCharacter sl2 = verma_character(weight_of(Partition{1}, 2, -3), 1, 2);
  CHECK(sl2.coeff({0, 2}) == 1);
  CHECK(sl2.coeff({1, 0}) == 2);
  CHECK(sl2.coeff({1, -1}) == 1);
  CHECK(sl2.height == 2);
  CHECK(verma_character(weight_of(Partition{1}, 2, -3), 2).height == 4);
  CHECK_THROWS_AS(verma_character(weight_of(Partition{1}, 2, -3), -1), std::domain_error);
}

TEST_CASE("BGG parabolic character identity") {
  CHECK(bgg_parabolic_character_check(weight_of(Partition{1, 1}, 2, -3), 3));
  CHECK(bgg_parabolic_character_check(weight_of(Partition{2, 1}, 3, -3), 2));
  CHECK(bgg_parabolic_character_check(weight_of(Partition{3}, 3, -3), 1));
  CHECK(bgg_parabolic_character_check(weight_of(Partition{2}, 2, -4), 0));
  CHECK(bgg_parabolic_character_check(weight_of(Partition{}, 3, -5), 2));
  CHECK(bgg_parabolic_character_check(weight_of(Partition{2, 1}, 4, -3), 1));
  AffineWeight bad = weight_of(Partition{2, 1}, 3, -3);
  std::swap(bad.finite[0], bad.finite[2]);
  CHECK_THROWS_AS(bgg_parabolic_character_check(bad, 1), std::domain_error);
  AffineWeight frac = weight_of(Partition{2, 1}, 3, -3);
  frac.finite[0] += Rational(1, 2);
  frac.finite[1] -= Rational(1, 2);
  CHECK_THROWS_AS(bgg_parabolic_character_check(frac, 1), std::domain_error);
}
