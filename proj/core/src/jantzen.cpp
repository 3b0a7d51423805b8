#include "jantzenlab/jantzen.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>

#include "jantzenlab/cache.hpp"
#include "jantzenlab/errors.hpp"
#include "jantzenlab/parallel.hpp"

namespace jantzenlab {

namespace {

std::shared_ptr<const HeckeAlgebra> algebra_for(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const HeckeAlgebra>> algebras;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = algebras[n];
  if (!slot) slot = std::make_shared<HeckeAlgebra>(n);
  return slot;
}

// Block index (0-based) of each of 1..n for consecutive blocks of sizes `parts`.
std::vector<int> block_of(const std::vector<int>& parts) {
  std::vector<int> out;
  for (std::size_t b = 0; b < parts.size(); ++b)
    for (int k = 0; k < parts[b]; ++k) out.push_back(static_cast<int>(b));
  return out;
}

using CountMatrix = std::vector<std::vector<int>>;

// Row-block / column-block incidence of w for the double coset S_lam w S_mu.
CountMatrix coset_matrix(const Permutation& w, const std::vector<int>& row_block,
                         const std::vector<int>& col_block, std::size_t rows, std::size_t cols) {
  CountMatrix m(rows, std::vector<int>(cols, 0));
  for (std::size_t i = 0; i < w.size(); ++i)
    ++m[static_cast<std::size_t>(row_block[static_cast<std::size_t>(w[i] - 1)])]
       [static_cast<std::size_t>(col_block[i])];
  return m;
}

CountMatrix tableau_matrix(const SemistandardTableau& t, std::size_t rows, std::size_t cols) {
  CountMatrix m(rows, std::vector<int>(cols, 0));
  for (std::size_t a = 0; a < t.entries.size(); ++a)
    for (int v : t.entries[a]) ++m[a][static_cast<std::size_t>(v - 1)];
  return m;
}

PolyMatrix compute_gram(const Partition& lam, const Composition& mu,
                        const std::vector<SemistandardTableau>& basis) {
  const int n = lam.size();
  const auto alg = algebra_for(n);
  const SymmetricGroup& g = alg->group();
  const std::size_t k = basis.size();
  PolyMatrix gram(k, k);
  if (k == 0) return gram;

  // Murphy elements: sums of T_w over the double coset attached to each tableau.
  const std::vector<int> row_block = block_of(lam.parts());
  const std::vector<int> col_block = block_of(mu.parts);
  std::map<CountMatrix, std::vector<std::size_t>> cosets;
  for (std::size_t w = 0; w < g.order(); ++w)
    cosets[coset_matrix(g.element(w), row_block, col_block, lam.parts().size(), mu.parts.size())].push_back(w);
  std::vector<std::vector<std::size_t>> murphy(k);
  for (std::size_t s = 0; s < k; ++s) {
    auto it = cosets.find(tableau_matrix(basis[s], lam.parts().size(), mu.parts.size()));
    ensure(it != cosets.end(), "gram_block: tableau has no double coset");
    murphy[s] = it->second;
  }

  const std::size_t generator = g.index(weyl_generator_permutation(lam));
  const auto [x_conj, y_conj] = alg->x_and_y(Composition(conjugate(lam)));
  const HeckeElement tail = hecke_multiply(alg->basis(generator), y_conj);
  const LaurentPoly poincare = poincare_polynomial(mu);

  for (std::size_t b = 0; b < k; ++b) {
    HeckeElement xb = alg->zero();
    for (std::size_t w : murphy[b]) xb.add(w, 1);
    const HeckeElement yb = hecke_multiply(alg->star(xb), tail);
    // coeff[u] = coefficient of T_generator in T_u * yb, built up along reduced words.
    std::vector<HeckeElement> left(g.order(), alg->zero());
    std::vector<LaurentPoly> coeff(g.order());
    for (std::size_t u : g.by_length()) {
      if (g.length(u) == 0) {
        left[u] = yb;
      } else {
        const int i = g.reduced_word(u).front();
        left[u] = alg->left_generator(i, left[g.left_mul(i, u)]);
      }
      coeff[u] = left[u].coeff(generator);
    }
    for (std::size_t a = 0; a < k; ++a) {
      LaurentPoly c;
      for (std::size_t u : murphy[a]) c += coeff[u];
      gram(a, b) = divide_exact(c, poincare);
    }
  }
  ensure(gram.is_symmetric(), "gram_block: Gram matrix is not symmetric for " + lam.to_string() + " / " +
                                  mu.to_string());
  return gram;
}

std::string gram_cache_key(const Partition& lam, const Composition& mu) {
  return "lam=" + lam.to_string() + ";mu=" + mu.to_string();
}

PolyMatrix cached_gram(const Partition& lam, const Composition& mu,
                       const std::vector<SemistandardTableau>& basis, const DiskCache* cache) {
  if (cache) {
    if (auto hit = cache->get("gram", gram_cache_key(lam, mu))) {
      try {
        PolyMatrix m = decode_matrix(*hit);
        if (m.rows() == basis.size() && m.cols() == basis.size()) return m;
      } catch (const std::invalid_argument&) {
      }
    }
  }
  PolyMatrix m = compute_gram(lam, mu, basis);
  if (cache) cache->put("gram", gram_cache_key(lam, mu), encode_matrix(m));
  return m;
}

WeightLayers analyse_block(const Partition& lam, const Partition& mu, int r, const DiskCache* cache) {
  const auto basis = semistandard_tableaux(lam, Composition(mu));
  const ValuationMatrix vm{cached_gram(lam, Composition(mu), basis, cache), CycPrime(r)};
  WeightLayers wl;
  wl.weight = mu;
  wl.valuations = elementary_divisor_vals(vm);
  ensure(wl.valuations.size() == basis.size(),
         "Gram block is degenerate over the fraction field at " + lam.to_string() + " / " + mu.to_string());
  wl.determinant_valuation = basis.empty() ? 0 : val_at(determinant(vm.entries), vm.prime);
  const int sum = std::accumulate(wl.valuations.begin(), wl.valuations.end(), 0);
  ensure(sum == wl.determinant_valuation,
         "Jantzen determinant identity fails at " + lam.to_string() + " / " + mu.to_string());
  wl.rank_at_root = rank_mod_prime(vm);
  const auto zeros = static_cast<std::size_t>(std::count(wl.valuations.begin(), wl.valuations.end(), 0));
  ensure(wl.rank_at_root == zeros,
         "rank at the root disagrees with elementary divisors at " + lam.to_string() + " / " + mu.to_string());
  if (lam == mu) ensure(wl.valuations == std::vector<int>{0}, "leading Gram entry is not a unit at " + lam.to_string());
  return wl;
}

std::vector<std::pair<Partition, Partition>> weight_pairs(int n) {
  std::vector<std::pair<Partition, Partition>> out;
  const auto parts = partitions_of(n);
  for (const Partition& lam : parts)
    for (const Partition& mu : parts)
      if (dominates(lam, mu)) out.emplace_back(lam, mu);
  return out;
}

void check_r(int r) {
  if (r < 3) throw std::domain_error("Jantzen computations need r >= 3");
}

}  // namespace

Permutation weyl_generator_permutation(const Partition& lam) {
  const Partition conj = conjugate(lam);
  // t^lam: the row reading tableau, entry at (row i, column j) (0-based).
  std::vector<int> row_start(static_cast<std::size_t>(lam.length()), 0);
  for (int i = 1; i < lam.length(); ++i) row_start[static_cast<std::size_t>(i)] = row_start[static_cast<std::size_t>(i - 1)] + lam[i - 1];
  Permutation w(static_cast<std::size_t>(lam.size()));
  std::size_t pos = 0;
  for (int j = 0; j < conj.length(); ++j)
    for (int i = 0; i < conj[j]; ++i) w[pos++] = row_start[static_cast<std::size_t>(i)] + j + 1;
  return w;
}

GramBlock gram_block(const Partition& lam, const Composition& mu, int r) {
  if (lam.size() != mu.size()) throw std::domain_error("gram_block: sizes differ");
  GramBlock b{lam, mu, semistandard_tableaux(lam, mu), ValuationMatrix{PolyMatrix(), CycPrime(r)}};
  b.matrix.entries = compute_gram(lam, mu, b.basis);
  return b;
}

int LayerData::filtration_dim(const Partition& mu, int i) const {
  auto it = weights.find(mu);
  if (it == weights.end()) return 0;
  return static_cast<int>(std::count_if(it->second.valuations.begin(), it->second.valuations.end(),
                                        [&](int v) { return v >= i; }));
}

std::map<Partition, int> LayerData::layer_character(int i) const {
  std::map<Partition, int> out;
  for (const auto& [mu, wl] : weights) {
    const int c = static_cast<int>(std::count(wl.valuations.begin(), wl.valuations.end(), i));
    if (c) out[mu] = c;
  }
  return out;
}

int LayerData::depth() const {
  int d = 0;
  for (const auto& [mu, wl] : weights)
    if (!wl.valuations.empty()) d = std::max(d, wl.valuations.back());
  return d;
}

LayerData jantzen_layers(const Partition& lam, int n, int r, const JantzenOptions& options) {
  check_r(r);
  if (lam.size() != n) throw std::domain_error("jantzen_layers: |lam| != n");
  LayerData out{lam, {}};
  std::vector<Partition> weights;
  for (const Partition& mu : partitions_of(n))
    if (dominates(lam, mu)) weights.push_back(mu);
  std::vector<WeightLayers> results(weights.size());
  parallel_for(weights.size(), options.jobs,
               [&](std::size_t i) { results[i] = analyse_block(lam, weights[i], r, options.cache); });
  for (std::size_t i = 0; i < weights.size(); ++i) out.weights.emplace(weights[i], std::move(results[i]));
  return out;
}

namespace {

std::map<Partition, LayerData> all_layers(int n, int r, const JantzenOptions& options) {
  const auto pairs = weight_pairs(n);
  std::vector<WeightLayers> results(pairs.size());
  parallel_for(pairs.size(), options.jobs, [&](std::size_t i) {
    results[i] = analyse_block(pairs[i].first, pairs[i].second, r, options.cache);
  });
  std::map<Partition, LayerData> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto& ld = out.try_emplace(pairs[i].first, LayerData{pairs[i].first, {}}).first->second;
    ld.weights.emplace(pairs[i].second, std::move(results[i]));
  }
  return out;
}

std::map<Partition, Character> simples_from_layers(const std::map<Partition, LayerData>& layers) {
  std::map<Partition, Character> out;
  for (const auto& [nu, ld] : layers) {
    Character ch;
    for (const auto& [mu, wl] : ld.weights)
      if (wl.rank_at_root > 0) ch[mu] = static_cast<int>(wl.rank_at_root);
    ensure(ch.count(nu) && ch.at(nu) == 1, "simple module does not have a one-dimensional top weight at " +
                                               nu.to_string());
    out.emplace(nu, std::move(ch));
  }
  return out;
}

// Writes ch as a nonnegative combination of simple characters, dominant weights first.
std::map<Partition, int> peel(Character ch, const std::map<Partition, Character>& simples,
                              const std::vector<Partition>& order, const std::string& where) {
  std::map<Partition, int> mult;
  for (const Partition& nu : order) {
    const int c = ch.count(nu) ? ch.at(nu) : 0;
    ensure(c >= 0, "negative multiplicity of L(" + nu.to_string() + ") in " + where);
    if (c == 0) continue;
    mult[nu] = c;
    for (const auto& [mu, d] : simples.at(nu)) ch[mu] -= c * d;
  }
  for (const auto& [mu, d] : ch) ensure(d == 0, "character does not decompose into simples in " + where);
  return mult;
}

}  // namespace

std::map<Partition, Character> simple_characters(int n, int r, const JantzenOptions& options) {
  check_r(r);
  return simples_from_layers(all_layers(n, r, options));
}

LaurentPoly JantzenReport::graded(const Partition& lam, const Partition& mu) const {
  auto it = g.find({lam, mu});
  return it == g.end() ? LaurentPoly() : it->second;
}

DMatrix JantzenReport::as_dmatrix() const {
  DMatrix d(n, r);
  for (const auto& [key, c] : g) d.set(conjugate(key.first), conjugate(key.second), c);
  return d;
}

JantzenReport graded_decomposition(int n, int r, const JantzenOptions& options) {
  check_r(r);
  if (n < 1) throw std::domain_error("graded_decomposition: n must be positive");
  JantzenReport rep;
  rep.n = n;
  rep.r = r;
  rep.layers = all_layers(n, r, options);
  rep.simples = simples_from_layers(rep.layers);
  const auto order = partitions_of(n);
  for (const auto& [lam, ld] : rep.layers) {
    rep.gram_blocks += ld.weights.size();
    int total_dim = 0, layer_dim = 0;
    for (const auto& [mu, wl] : ld.weights) total_dim += static_cast<int>(wl.valuations.size());
    auto& per_layer = rep.layer_multiplicity[lam];
    for (int i = 0; i <= ld.depth(); ++i) {
      const Character ch = ld.layer_character(i);
      for (const auto& [mu, d] : ch) layer_dim += d;
      auto mult = peel(ch, rep.simples, order, "layer " + std::to_string(i) + " of W(" + lam.to_string() + ")");
      for (const auto& [nu, c] : mult) {
        auto& slot = rep.g[{lam, nu}];
        slot += LaurentPoly::monomial(i, c);
      }
      per_layer.push_back(std::move(mult));
    }
    ensure(layer_dim == total_dim, "Jantzen layers do not exhaust W(" + lam.to_string() + ")");
    ensure(rep.graded(lam, lam) == LaurentPoly(1), "g_{lam lam} != 1 at " + lam.to_string());
  }
  for (const auto& [key, c] : rep.g) {
    ensure(c.has_integer_coeffs() && (c.is_zero() || c.low() >= 0), "graded multiplicity is not in N[q]");
    if (key.first != key.second) ensure(c.coeff(0) == 0, "top layer has extra composition factors");
  }
  return rep;
}

DMatrix decomposition_from_simples(int n, int r, const std::map<Partition, Character>& simples) {
  const auto order = partitions_of(n);
  DMatrix d(n, r);
  for (const Partition& lam : order) {
    Character ch;
    for (const Partition& mu : order) {
      const auto k = semistandard_tableaux(lam, Composition(mu)).size();
      if (k) ch[mu] = static_cast<int>(k);
    }
    for (const auto& [nu, c] : peel(ch, simples, order, "W(" + lam.to_string() + ")"))
      d.set(conjugate(lam), conjugate(nu), c);
  }
  return d;
}

}  // namespace jantzenlab
