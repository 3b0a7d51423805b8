#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "jantzenlab/dmatrix.hpp"
#include "jantzenlab/hecke.hpp"
#include "jantzenlab/partition.hpp"
#include "jantzenlab/poly_matrix.hpp"

namespace jantzenlab {

class DiskCache;

/// Contravariant form on the mu-weight space of the Weyl module of shape lam,
/// in the semistandard basis.
struct GramBlock {
  Partition shape;
  Composition weight;
  std::vector<SemistandardTableau> basis;
  ValuationMatrix matrix;
};

/// Gram matrix of the mu-weight space of W_v(lam), localized at Phi_r.
GramBlock gram_block(const Partition& lam, const Composition& mu, int r);

/// The permutation w_lam used to generate the Weyl module of shape lam.
Permutation weyl_generator_permutation(const Partition& lam);

/// Elementary-divisor data of one Gram block.
struct WeightLayers {
  Partition weight;
  /// Phi_r-valuations of the elementary divisors, ascending; one per basis vector.
  std::vector<int> valuations;
  /// Valuation of the Gram determinant, computed independently.
  int determinant_valuation = 0;
  /// Rank of the Gram block at v = a primitive r-th root of unity.
  std::size_t rank_at_root = 0;
};

/// Jantzen filtration data of W_v(lam) for every weight.
struct LayerData {
  Partition lam;
  std::map<Partition, WeightLayers> weights;

  /// dim J^i W_v(lam)_mu.
  int filtration_dim(const Partition& mu, int i) const;
  /// Character of J^i / J^{i+1}, keyed by weight.
  std::map<Partition, int> layer_character(int i) const;
  int depth() const;
};

struct JantzenOptions {
  int jobs = 1;
  const DiskCache* cache = nullptr;
};

/// Jantzen layers of W_v(lam). Throws InternalError if a Gram block is degenerate
/// or the determinant identity fails.
LayerData jantzen_layers(const Partition& lam, int n, int r, const JantzenOptions& options = {});

using Character = std::map<Partition, int>;

/// Characters of the simple modules L_v(mu), from the ranks of the Gram blocks at the root.
std::map<Partition, Character> simple_characters(int n, int r, const JantzenOptions& options = {});

struct JantzenReport {
  int n = 0;
  int r = 0;
  std::map<Partition, LayerData> layers;
  std::map<Partition, Character> simples;
  /// layer_multiplicity[lam][i][mu] = [J^i W(lam) / J^{i+1} W(lam) : L(mu)].
  std::map<Partition, std::vector<std::map<Partition, int>>> layer_multiplicity;
  /// g_{lam mu}(q) = sum_i layer_multiplicity[lam][i][mu] q^i.
  std::map<std::pair<Partition, Partition>, LaurentPoly> g;
  std::size_t gram_blocks = 0;

  LaurentPoly graded(const Partition& lam, const Partition& mu) const;
  /// The matrix with entry (lam', mu') = g_{lam mu}, comparable with the other methods.
  DMatrix as_dmatrix() const;
};

/// Graded decomposition numbers of all Weyl modules of size n via Jantzen filtrations.
JantzenReport graded_decomposition(int n, int r, const JantzenOptions& options = {});

/// Decomposition matrix at q = 1 recovered from simple characters: entry (lam', mu')
/// is [W(lam) : L(mu)], obtained by peeling simple characters off ch W(lam).
DMatrix decomposition_from_simples(int n, int r, const std::map<Partition, Character>& simples);

}  // namespace jantzenlab
