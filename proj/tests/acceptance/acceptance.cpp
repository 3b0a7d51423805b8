#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "cli.hpp"
#include "jantzenlab/character.hpp"
#include "jantzenlab/errors.hpp"
#include "jantzenlab/fock.hpp"
#include "jantzenlab/jantzen.hpp"
#include "jantzenlab/kl.hpp"
#include "oracles.hpp"

using namespace jantzenlab;

namespace {

struct Run {
  int n;
  int r;
  DMatrix fock;
  DMatrix kl;
  JantzenReport jantzen;
  KLRunStats stats;
  std::size_t kl_invariants = 0;
};

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int jobs() { return static_cast<int>(std::max(1u, std::min(8u, std::thread::hardware_concurrency()))); }

std::string pair_name(int n, int r) { return "(" + std::to_string(n) + "," + std::to_string(r) + ")"; }

Run compute(int n, int r) {
  Run run{n, r, canonical_basis_plus(n, r), {}, {}, {}, 0};
  KLTable table(n);
  KLOptions ko;
  ko.jobs = jobs();
  ko.table = &table;
  ko.stats = &run.stats;
  run.kl = d_matrix_kl(n, r, ko);
  run.kl_invariants = table.verify_invariants();
  JantzenOptions jo;
  jo.jobs = jobs();
  run.jantzen = graded_decomposition(n, r, jo);
  return run;
}

template <typename Fn>
Verdict guarded(Fn&& fn) {
  Verdict v;
  try {
    fn(v);
  } catch (const std::exception& e) {
    v.fail(std::string("exception: ") + e.what());
  }
  return v;
}

Verdict criterion_main_theorem(const std::vector<std::pair<int, int>>& pairs) {
  return guarded([&](Verdict& v) {
    for (auto [n, r] : pairs) {
      std::ostringstream out, err;
      const int code = cli::run({"verify", "--n", std::to_string(n), "--r", std::to_string(r), "--no-cache", "--jobs",
                                 std::to_string(jobs())},
                                out, err);
      if (code != 0) v.fail("verify " + pair_name(n, r) + " exited " + std::to_string(code));
    }
  });
}

Verdict criterion_semisimple() {
  return guarded([&](Verdict& v) {
    for (auto [n, r] : {std::pair{3, 5}, {4, 7}}) {
      const Run run = compute(n, r);
      if (!run.fock.is_identity() || !run.kl.is_identity() || !run.jantzen.as_dmatrix().is_identity())
        v.fail(pair_name(n, r) + " is not the identity");
      for (const auto& [lam, layers] : run.jantzen.layers)
        for (const Partition& mu : partitions_of(n))
          if (layers.filtration_dim(mu, 1) != 0) v.fail(pair_name(n, r) + " has a nonzero J^1");
    }
  });
}

Verdict criterion_unitriangular(const std::vector<Run>& runs) {
  return guarded([&](Verdict& v) {
    for (const Run& run : runs) {
      check_unitriangular(run.fock);
      check_unitriangular(run.kl);
      check_unitriangular(run.jantzen.as_dmatrix());
      for (const auto& [lam, layers] : run.jantzen.layer_multiplicity)
        for (const auto& layer : layers)
          for (const auto& [mu, c] : layer)
            if (c < 0) v.fail("negative layer multiplicity at " + pair_name(run.n, run.r));
    }
  });
}

Verdict criterion_kl_structure(const std::vector<Run>& runs) {
  return guarded([&](Verdict& v) {
    for (const Run& run : runs) {
      if (run.kl_invariants == 0) v.fail("no KL entries checked at " + pair_name(run.n, run.r));
      if (!run.kl.is_identity() && run.stats.coset_invariance_checks == 0)
        v.fail("no coset invariance checks at " + pair_name(run.n, run.r));
    }
    std::mt19937_64 rng(17);
    KLTable table(3);
    const auto finite = finite_weyl_group(3);
    for (int trial = 0; trial < 200; ++trial) {
      const AffinePermutation w = oracle::random_coset_rep(rng, 3, 8);
      const auto& lower = table.lower(w);
      const AffinePermutation& x = lower[rng() % lower.size()];
      const AffinePermutation& y = finite[rng() % finite.size()];
      if (table.kl_poly(y * x, w) != table.kl_poly(x, w)) v.fail("coset invariance fails at w = " + w.to_string());
    }
    table.verify_invariants();
  });
}

Verdict criterion_orthogonality(const std::vector<Run>& runs) {
  return guarded([&](Verdict& v) {
    std::size_t checks = 0;
    for (const Run& run : runs) checks += run.stats.orthogonality_checks;
    if (checks == 0) v.fail("no orthogonality checks were made");
    KLTable table(3);
    for (const auto& [w, d] : oracle::cayley_ball(3, 5))
      for (const AffinePermutation& z : table.lower(w))
        if (!table.orthogonality_holds(z, w)) v.fail("orthogonality fails at " + w.to_string());
  });
}

Verdict criterion_determinant(const std::vector<Run>& runs) {
  return guarded([&](Verdict& v) {
    for (const Run& run : runs)
      for (const auto& [lam, layers] : run.jantzen.layers)
        for (const auto& [mu, wl] : layers.weights) {
          int sum = 0;
          for (int i = 1; i <= layers.depth(); ++i) sum += layers.filtration_dim(mu, i);
          if (sum != wl.determinant_valuation)
            v.fail("sum formula fails at " + lam.to_string() + " / " + mu.to_string());
        }
  });
}

Verdict criterion_bgg() {
  return guarded([&](Verdict& v) {
    const std::vector<std::tuple<int, Partition, int>> cases{
        {2, Partition{1, 1}, 3}, {3, Partition{2, 1}, 2}, {3, Partition{3}, 1}};
    for (const auto& [m, lam, depth] : cases)
      if (!bgg_parabolic_character_check(embed_partition(lam, lam.size(), m, -3), depth))
        v.fail("BGG identity fails for m=" + std::to_string(m) + " lam=" + lam.to_string());
  });
}

Verdict criterion_elementary_divisors() {
  return guarded([&](Verdict& v) {
    for (int r : {3, 4}) {
      std::mt19937_64 rng(500 + static_cast<unsigned>(r));
      const CycPrime p(r);
      for (int i = 0; i < 250; ++i) {
        const PolyMatrix m = oracle::random_valuation_matrix(rng, r);
        if (elementary_divisor_vals({m, p}) != oracle::minor_min_valuations(m, p))
          v.fail("elementary divisors disagree at sample " + std::to_string(i) + ", r=" + std::to_string(r));
      }
    }
  });
}

Verdict criterion_specialization(const std::vector<Run>& runs) {
  return guarded([&](Verdict& v) {
    for (const Run& run : runs) {
      const auto expected = decomposition_from_simples(run.n, run.r, run.jantzen.simples).at_one();
      if (run.fock.at_one() != expected || run.kl.at_one() != expected ||
          run.jantzen.as_dmatrix().at_one() != expected)
        v.fail("d(1) disagrees with simple characters at " + pair_name(run.n, run.r));
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  std::vector<std::pair<int, int>> pairs{{2, 3}, {2, 4}, {3, 3}, {3, 4}, {4, 3}, {4, 4}};
  if (!quick) pairs.emplace_back(5, 3);

  const auto start = std::chrono::steady_clock::now();
  std::vector<Run> runs;
  try {
    for (auto [n, r] : pairs) runs.push_back(compute(n, r));
  } catch (const std::exception& e) {
    std::cout << "FAIL setup: " << e.what() << "\n";
    return 1;
  }

  const std::vector<std::pair<std::string, Verdict>> results{
      {"1 main theorem equality", criterion_main_theorem(pairs)},
      {"2 semisimple degeneration", criterion_semisimple()},
      {"3 unitriangularity and positivity", criterion_unitriangular(runs)},
      {"4 KL structural identities", criterion_kl_structure(runs)},
      {"5 orthogonality residual", criterion_orthogonality(runs)},
      {"6 Jantzen determinant identity", criterion_determinant(runs)},
      {"7 BGG character identity", criterion_bgg()},
      {"8 elementary divisor oracle", criterion_elementary_divisors()},
      {"9 specialization consistency", criterion_specialization(runs)},
  };
  bool all = true;
  for (const auto& [name, verdict] : results) {
    std::cout << (verdict.ok ? "PASS " : "FAIL ") << name;
    if (!verdict.ok) std::cout << ": " << verdict.detail;
    std::cout << "\n";
    all = all && verdict.ok;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (quick ? "pairs: desk scale without (5,3)" : "pairs: desk scale") << ", " << secs << " s\n";
  return all ? 0 : 1;
}
