#include <doctest.h>

#include <filesystem>
#include <stdexcept>

#include "jantzenlab/cache.hpp"
#include "jantzenlab/cyclotomic.hpp"
#include "jantzenlab/fock.hpp"
#include "jantzenlab/jantzen.hpp"

using namespace jantzenlab;

TEST_CASE("the generating permutation") {
  CHECK(weyl_generator_permutation(Partition{2, 1}) == Permutation{1, 3, 2});
  CHECK(weyl_generator_permutation(Partition{3}) == Permutation{1, 2, 3});
  CHECK(weyl_generator_permutation(Partition{1, 1, 1}) == Permutation{1, 2, 3});
  CHECK(weyl_generator_permutation(Partition{2, 2}) == Permutation{1, 3, 2, 4});
  CHECK(weyl_generator_permutation(Partition{3, 1}) == Permutation{1, 4, 2, 3});
}

TEST_CASE("Gram blocks") {
  for (int n = 1; n <= 4; ++n)
    for (const Partition& lam : partitions_of(n))
      for (const Partition& mu : partitions_of(n)) {
        if (!dominates(lam, mu)) continue;
        const GramBlock b = gram_block(lam, mu, 3);
        CHECK(b.basis.size() == semistandard_tableaux(lam, mu).size());
        CHECK(b.matrix.entries.rows() == b.basis.size());
        CHECK(b.matrix.entries.is_symmetric());
        CHECK_FALSE(determinant(b.matrix.entries).is_zero());
        if (lam == mu) CHECK(b.matrix.entries(0, 0) == LaurentPoly(1));
        for (std::size_t i = 0; i < b.basis.size(); ++i)
          for (std::size_t j = 0; j < b.basis.size(); ++j) CHECK(b.matrix.entries(i, j).has_integer_coeffs());
      }
  // A reordered weight gives a Gram matrix with the same invariants.
  const GramBlock a = gram_block(Partition{2, 1}, Composition{1, 2}, 3);
  const GramBlock b = gram_block(Partition{2, 1}, Composition{2, 1}, 3);
  CHECK(elementary_divisor_vals(a.matrix) == elementary_divisor_vals(b.matrix));
  // Weight (1,1,1) of W(2,1) at r = 3.
  const GramBlock c = gram_block(Partition{2, 1}, Composition{1, 1, 1}, 3);
  CHECK(val_at(determinant(c.matrix.entries), c.matrix.prime) == 1);
  CHECK_THROWS_AS(gram_block(Partition{2, 1}, Composition{2}, 3), std::domain_error);
}

TEST_CASE("Jantzen layers") {
  const LayerData ld = jantzen_layers(Partition{2, 1}, 3, 3);
  CHECK(ld.depth() == 1);
  CHECK(ld.filtration_dim(Partition{1, 1, 1}, 0) == 2);
  CHECK(ld.filtration_dim(Partition{1, 1, 1}, 1) == 1);
  CHECK(ld.filtration_dim(Partition{1, 1, 1}, 2) == 0);
  CHECK(ld.filtration_dim(Partition{3}, 0) == 0);
  CHECK(ld.layer_character(1) == std::map<Partition, int>{{Partition{1, 1, 1}, 1}});
  for (int n = 1; n <= 4; ++n)
    for (int r : {3, 4})
      for (const Partition& lam : partitions_of(n)) {
        const LayerData layers = jantzen_layers(lam, n, r);
        for (const auto& [mu, wl] : layers.weights) {
          int sum = 0;
          for (int i = 1; i <= layers.depth(); ++i) {
            CHECK(layers.filtration_dim(mu, i) <= layers.filtration_dim(mu, i - 1));
            sum += layers.filtration_dim(mu, i);
          }
          CHECK(sum == wl.determinant_valuation);
        }
      }
  CHECK_THROWS_AS(jantzen_layers(Partition{2, 1}, 4, 3), std::domain_error);
  CHECK_THROWS_AS(jantzen_layers(Partition{2, 1}, 3, 2), std::domain_error);
}

TEST_CASE("simple characters") {
  const auto simples = simple_characters(3, 3);
  CHECK(simples.at(Partition{3}) == Character{{Partition{3}, 1}});
  CHECK(simples.at(Partition{2, 1}) == Character{{Partition{2, 1}, 1}, {Partition{1, 1, 1}, 1}});
  CHECK(simples.at(Partition{1, 1, 1}) == Character{{Partition{1, 1, 1}, 1}});
  // Semisimple case: simple = Weyl, dimensions are Kostka numbers.
  for (const auto& [lam, ch] : simple_characters(4, 5))
    for (const Partition& mu : partitions_of(4)) {
      const auto kostka = static_cast<int>(semistandard_tableaux(lam, mu).size());
      CHECK((ch.count(mu) ? ch.at(mu) : 0) == kostka);
    }
}

TEST_CASE("graded decomposition numbers") {
  for (auto [n, r] : {std::pair{2, 3}, {3, 3}, {3, 4}, {4, 3}, {4, 4}}) {
    JantzenOptions opts;
    opts.jobs = 3;
    const JantzenReport rep = graded_decomposition(n, r, opts);
    const DMatrix d = rep.as_dmatrix();
    const DMatrix fock = canonical_basis_plus(n, r);
    CHECK(d == fock);
    CHECK(decomposition_from_simples(n, r, rep.simples).at_one() == fock.at_one());
    for (const auto& [lam, layers] : rep.layer_multiplicity) {
      CHECK(layers.front() == std::map<Partition, int>{{lam, 1}});
      for (const auto& layer : layers)
        for (const auto& [mu, c] : layer) CHECK(c > 0);
    }
    CHECK(rep.graded(Partition{n}, Partition{n}) == LaurentPoly(1));
  }
  const JantzenReport semisimple = graded_decomposition(4, 7);
  CHECK(semisimple.as_dmatrix().is_identity());
  for (const auto& [lam, layers] : semisimple.layers) CHECK(layers.depth() == 0);
  CHECK_THROWS_AS(graded_decomposition(0, 3), std::domain_error);
}

TEST_CASE("Gram blocks are cached on disk") {
  const auto root = std::filesystem::temp_directory_path() / "jantzenlab-test-gram-cache";
  std::filesystem::remove_all(root);
  const DiskCache cache(root);
  JantzenOptions opts;
  opts.cache = &cache;
  const JantzenReport cold = graded_decomposition(4, 3, opts);
  CHECK(std::filesystem::exists(root / "v1" / "gram"));
  const JantzenReport warm = graded_decomposition(4, 3, opts);
  CHECK(cold.as_dmatrix() == warm.as_dmatrix());
  // The Gram matrix does not depend on r.
  CHECK(graded_decomposition(4, 4, opts).as_dmatrix() == canonical_basis_plus(4, 4));
  std::filesystem::remove_all(root);
}
