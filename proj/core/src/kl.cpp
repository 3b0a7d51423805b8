#include "jantzenlab/kl.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

#include "jantzenlab/errors.hpp"
#include "jantzenlab/parallel.hpp"

namespace jantzenlab {

const std::vector<AffinePermutation>& KLTable::lower(const AffinePermutation& w) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = lower_.find(w); it != lower_.end()) return *it->second;
  }
  auto fresh = std::make_unique<std::vector<AffinePermutation>>(lower_interval(w));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = lower_.try_emplace(w, std::move(fresh));
  return *it->second;
}

LaurentPoly KLTable::kl_poly(const AffinePermutation& x, const AffinePermutation& w) {
  if (x.rank() != m_ || w.rank() != m_) throw std::invalid_argument("kl_poly: rank mismatch");
  if (x == w) return 1;
  if (!bruhat_leq(x, w)) return {};
  {
    std::shared_lock lock(mutex_);
    if (auto it = kl_.find({x, w}); it != kl_.end()) return it->second;
  }
  LaurentPoly p = compute_kl(x, w);
  std::unique_lock lock(mutex_);
  kl_.try_emplace({x, w}, p);
  return p;
}

LaurentPoly KLTable::compute_kl(const AffinePermutation& x, const AffinePermutation& w) {
  const int i = left_descents(w).front();
  const AffinePermutation s = AffinePermutation::simple(i, m_);
  const AffinePermutation v = s * w;
  const AffinePermutation sx = s * x;
  const int lx = length(x);
  if (length(sx) > lx) return kl_poly(sx, w);
  LaurentPoly res = kl_poly(sx, v) + kl_poly(x, v).shifted(1);
  const int lv = length(v);
  for (const MuEntry& e : mu_list(v)) {
    if (length(s * e.z) >= length(e.z)) continue;
    if (!bruhat_leq(x, e.z)) continue;
    res -= kl_poly(x, e.z).shifted((lv - length(e.z) + 1) / 2) * Rational(e.mu);
  }
  return res;
}

int KLTable::mu(const AffinePermutation& x, const AffinePermutation& w) {
  const int d = length(w) - length(x);
  if (d <= 0 || d % 2 == 0) return 0;
  const Rational c = kl_poly(x, w).coeff((d - 1) / 2);
  ensure(c.get_den() == 1, "non-integral KL coefficient");
  return static_cast<int>(c.get_num().get_si());
}

const std::vector<KLTable::MuEntry>& KLTable::mu_list(const AffinePermutation& v) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = mu_lists_.find(v); it != mu_lists_.end()) return *it->second;
  }
  auto fresh = std::make_unique<std::vector<MuEntry>>();
  for (const AffinePermutation& z : lower(v)) {
    if (z == v) continue;
    const int c = mu(z, v);
    if (c != 0) fresh->push_back({z, c});
  }
  std::sort(fresh->begin(), fresh->end(), [](const MuEntry& a, const MuEntry& b) { return a.z < b.z; });
  std::unique_lock lock(mutex_);
  auto [it, inserted] = mu_lists_.try_emplace(v, std::move(fresh));
  return *it->second;
}

LaurentPoly KLTable::normalized_kl(const AffinePermutation& x, const AffinePermutation& w) {
  if (!bruhat_leq(x, w)) throw std::domain_error("normalized_kl: x is not below w");
  const int d = length(w) - length(x);
  LaurentPoly out;
  for (const auto& [k, c] : kl_poly(x, w).terms()) out += LaurentPoly::monomial(d - 2 * k, c);
  return out;
}

LaurentPoly KLTable::inverse_kl(const AffinePermutation& x, const AffinePermutation& z) {
  if (x == z) return 1;
  if (!bruhat_leq(z, x)) return {};
  {
    std::shared_lock lock(mutex_);
    if (auto it = inverse_.find({x, z}); it != inverse_.end()) return it->second;
  }
  // With U_{a,b} = Ptilde_{a,b}(-t): Qtilde_{x,z} = (U^{-1})_{z,x}
  //   = -sum_{z <= a < x} (U^{-1})_{z,a} U_{a,x}.
  LaurentPoly res;
  for (const AffinePermutation& a : lower(x)) {
    if (a == x || !bruhat_leq(z, a)) continue;
    res -= inverse_kl(a, z) * normalized_kl(a, x).negate_variable();
  }
  std::unique_lock lock(mutex_);
  inverse_.try_emplace({x, z}, res);
  return res;
}

bool KLTable::orthogonality_holds(const AffinePermutation& z, const AffinePermutation& w) {
  LaurentPoly sum;
  if (bruhat_leq(z, w))
    for (const AffinePermutation& x : lower(w)) {
      if (!bruhat_leq(z, x)) continue;
      sum += inverse_kl(x, z).negate_variable() * normalized_kl(x, w);
    }
  return sum == LaurentPoly(z == w ? 1 : 0);
}

std::size_t KLTable::verify_invariants() {
  std::vector<std::tuple<AffinePermutation, AffinePermutation, LaurentPoly>> entries = export_memo();
  for (const auto& [x, w, p] : entries) {
    const int d = length(w) - length(x);
    if (x == w) {
      ensure(p == LaurentPoly(1), "P_{w,w} != 1 at " + w.to_string());
      continue;
    }
    ensure(bruhat_leq(x, w) ? !p.is_zero() : p.is_zero(),
           "KL polynomial support disagrees with Bruhat order at " + x.to_string() + ", " + w.to_string());
    if (!p.is_zero()) {
      ensure(p.low() >= 0 && 2 * p.high() <= d - 1,
             "KL degree bound violated at " + x.to_string() + ", " + w.to_string());
      ensure(p.coeff(0) == 1, "KL constant term is not 1 at " + x.to_string() + ", " + w.to_string());
    }
  }
  return entries.size();
}

std::size_t KLTable::size() const {
  std::shared_lock lock(mutex_);
  return kl_.size();
}

void KLTable::clear() {
  std::unique_lock lock(mutex_);
  kl_.clear();
  inverse_.clear();
  lower_.clear();
  mu_lists_.clear();
}

std::vector<std::tuple<AffinePermutation, AffinePermutation, LaurentPoly>> KLTable::export_memo() const {
  std::vector<std::tuple<AffinePermutation, AffinePermutation, LaurentPoly>> out;
  {
    std::shared_lock lock(mutex_);
    out.reserve(kl_.size());
    for (const auto& [key, p] : kl_) out.emplace_back(key.first, key.second, p);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  return out;
}

void KLTable::import_memo(
    const std::vector<std::tuple<AffinePermutation, AffinePermutation, LaurentPoly>>& entries) {
  std::unique_lock lock(mutex_);
  for (const auto& [x, w, p] : entries) {
    if (x.rank() != m_ || w.rank() != m_) throw std::invalid_argument("import_memo: rank mismatch");
    kl_.try_emplace({x, w}, p);
  }
}

std::map<PermPair, LaurentPoly> inverse_kl(const std::vector<AffinePermutation>& interval, KLTable& table) {
  const std::set<AffinePermutation> members(interval.begin(), interval.end());
  for (const auto& x : members)
    for (const auto& z : members) {
      if (x == z || !bruhat_leq(z, x)) continue;
      for (const auto& a : table.lower(x))
        if (bruhat_leq(z, a) && !members.count(a))
          throw std::domain_error("inverse_kl: set is not convex in Bruhat order (missing " + a.to_string() + ")");
    }
  std::map<PermPair, LaurentPoly> out;
  for (const auto& x : members)
    for (const auto& z : members) {
      LaurentPoly q = table.inverse_kl(x, z);
      if (!q.is_zero()) out.emplace(PermPair{x, z}, std::move(q));
    }
  return out;
}

OrbitData orbit_data(const Partition& lam, int n, int r) {
  OrbitData d{lam, embed_partition(lam, n, n, -r), {}, {}};
  d.nu = antidominant_representative(d.weight, -r).nu;
  d.w = shortest_element(d.weight, d.nu, -r);
  return d;
}

DMatrix d_matrix_kl(int n, int r, const KLOptions& options) {
  if (n < 1) throw std::domain_error("d_matrix_kl: n must be positive");
  if (r < 3) throw std::domain_error("d_matrix_kl: r must be at least 3");
  std::unique_ptr<KLTable> own;
  KLTable* table = options.table;
  if (!table) {
    own = std::make_unique<KLTable>(n);
    table = own.get();
  }
  if (table->rank() != n) throw std::domain_error("d_matrix_kl: KL table has the wrong rank");

  const std::vector<Partition> parts = partitions_of(n);
  std::vector<OrbitData> data;
  for (const Partition& lam : parts) data.push_back(orbit_data(lam, n, r));

  std::map<AffineWeight, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < data.size(); ++i) blocks[data[i].nu].push_back(i);
  std::vector<std::vector<std::size_t>> block_list;
  for (auto& [nu, members] : blocks) block_list.push_back(members);

  const std::vector<AffinePermutation> finite = finite_weyl_group(n);
  std::vector<int> finite_len;
  for (const auto& y : finite) finite_len.push_back(length(y));

  std::mutex result_mutex;
  DMatrix d(n, r);
  KLRunStats stats;
  stats.orbits = block_list.size();

  // One task per (lam, mu) pair inside an orbit.
  std::vector<std::pair<std::size_t, std::size_t>> tasks;
  for (const auto& members : block_list)
    for (std::size_t a : members)
      for (std::size_t b : members) tasks.emplace_back(a, b);

  parallel_for(tasks.size(), options.jobs, [&](std::size_t t) {
    const OrbitData& lam = data[tasks[t].first];
    const OrbitData& mu = data[tasks[t].second];
    LaurentPoly total;
    std::size_t ortho = 0, coset = 0;
    for (std::size_t k = 0; k < finite.size(); ++k) {
      const AffinePermutation x = finite[k] * lam.w;
      const LaurentPoly q = table->inverse_kl(x, mu.w);
      if (q.is_zero()) continue;
      ensure(table->orthogonality_holds(mu.w, x),
             "orthogonality residual is nonzero at " + mu.w.to_string() + ", " + x.to_string());
      ++ortho;
      const int l = finite_len[k];
      total += q.shifted(l) * Rational(l % 2 == 0 ? 1 : -1);
    }
    if (bruhat_leq(lam.w, mu.w)) {
      const LaurentPoly p = table->kl_poly(lam.w, mu.w);
      for (const auto& y : finite) {
        ensure(table->kl_poly(y * lam.w, mu.w) == p,
               "coset invariance P_{yx,w} = P_{x,w} fails at " + lam.w.to_string() + ", " + mu.w.to_string());
        ++coset;
      }
    }
    std::lock_guard<std::mutex> lock(result_mutex);
    d.set(conjugate(lam.lam), conjugate(mu.lam), total);
    stats.orthogonality_checks += ortho;
    stats.coset_invariance_checks += coset;
  });

  stats.memo_entries_checked = table->verify_invariants();
  check_unitriangular(d);
  if (options.stats) *options.stats = stats;
  return d;
}

}  // namespace jantzenlab
