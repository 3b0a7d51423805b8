#include "jantzenlab/affine_weyl.hpp"

#include <algorithm>
#include <numeric>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "jantzenlab/errors.hpp"

namespace jantzenlab {

std::string AffineWeight::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < finite.size(); ++i) {
    if (i) out += ",";
    out += finite[i].get_str();
  }
  out += "; level " + level.get_str() + "; delta " + z.get_str() + ")";
  return out;
}

bool operator<(const AffineWeight& a, const AffineWeight& b) {
  if (a.finite != b.finite)
    return std::lexicographical_compare(a.finite.begin(), a.finite.end(), b.finite.begin(), b.finite.end());
  if (a.level != b.level) return a.level < b.level;
  return a.z < b.z;
}

AffineWeight operator+(const AffineWeight& a, const AffineWeight& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("AffineWeight: rank mismatch");
  AffineWeight out = a;
  for (std::size_t i = 0; i < a.finite.size(); ++i) out.finite[i] += b.finite[i];
  out.level += b.level;
  out.z += b.z;
  return out;
}

AffineWeight operator-(const AffineWeight& a, const AffineWeight& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("AffineWeight: rank mismatch");
  AffineWeight out = a;
  for (std::size_t i = 0; i < a.finite.size(); ++i) out.finite[i] -= b.finite[i];
  out.level -= b.level;
  out.z -= b.z;
  return out;
}

Rational pairing(const AffineWeight& a, const AffineWeight& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("pairing: rank mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.finite.size(); ++i) s += a.finite[i] * b.finite[i];
  return s + a.level * b.z + a.z * b.level;
}

AffineWeight rho(int m) {
  AffineWeight r;
  r.finite.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) r.finite[static_cast<std::size_t>(i)] = Rational(m - 1, 2) - i;
  for (auto& x : r.finite) x.canonicalize();
  r.level = m;
  r.z = 0;
  return r;
}

AffineWeight embed_partition(const Partition& lam, int n, int m, int kappa) {
  if (lam.size() != n) throw std::domain_error("embed_partition: |lam| != n");
  if (lam.length() > m) throw std::domain_error("embed_partition: too many parts for sl_m");
  if (kappa >= 0) throw std::domain_error("embed_partition: kappa must be negative");
  AffineWeight w;
  w.finite.resize(static_cast<std::size_t>(m));
  Rational shift(n, m);
  shift.canonicalize();
  for (int i = 0; i < m; ++i) w.finite[static_cast<std::size_t>(i)] = Rational(lam[i]) - shift;
  w.level = kappa - m;
  AffineWeight fin = w, twice_rho = rho(m);
  fin.level = 0;
  twice_rho.level = 0;
  for (auto& x : twice_rho.finite) x *= 2;
  w.z = -pairing(fin, fin + twice_rho) / Rational(2 * kappa);
  return w;
}

Rational shifted_coroot_pairing(const AffineWeight& w, int i) {
  const int m = w.rank();
  if (i < 0 || i >= m) throw std::domain_error("coroot index out of range");
  const AffineWeight s = w + rho(m);
  if (i == 0) return s.level - (s.finite.front() - s.finite.back());
  return s.finite[static_cast<std::size_t>(i - 1)] - s.finite[static_cast<std::size_t>(i)];
}

AffineWeight dot_reflect(int i, const AffineWeight& w, int kappa) {
  const int m = w.rank();
  if (i < 0 || i >= m) throw std::domain_error("dot_reflect: index out of range");
  if (w.level + m != kappa) throw std::domain_error("dot_reflect: weight is not at level kappa - m");
  const AffineWeight r = rho(m);
  AffineWeight s = w + r;
  if (i == 0) {
    const Rational a = s.level - (s.finite.front() - s.finite.back());
    s.finite.front() += a;
    s.finite.back() -= a;
    s.z -= a;
  } else {
    std::swap(s.finite[static_cast<std::size_t>(i - 1)], s.finite[static_cast<std::size_t>(i)]);
  }
  return s - r;
}

bool is_dot_antidominant(const AffineWeight& w) {
  for (int i = 0; i < w.rank(); ++i)
    if (shifted_coroot_pairing(w, i) > 0) return false;
  return true;
}

AntidominantResult antidominant_representative(const AffineWeight& w, int kappa) {
  if (kappa >= 0) throw std::domain_error("antidominant_representative: kappa must be negative");
  AntidominantResult res{w, {}};
  const int m = w.rank();
  constexpr std::size_t kCap = 100000;
  for (;;) {
    int step = -1;
    for (int i = 0; i < m && step < 0; ++i)
      if (shifted_coroot_pairing(res.nu, i) > 0) step = i;
    if (step < 0) break;
    ensure(res.word.size() < kCap, "antidominant_representative: step cap exceeded");
    res.nu = dot_reflect(step, res.nu, kappa);
    res.word.push_back(step);
  }
  return res;
}

AffinePermutation::AffinePermutation(std::vector<int> window) : window_(std::move(window)) {
  const int m = rank();
  if (m < 1) throw std::invalid_argument("affine permutation needs a nonempty window");
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  long long shift = 0;
  for (int i = 0; i < m; ++i) {
    const int r = ((window_[static_cast<std::size_t>(i)] - 1) % m + m) % m;
    if (seen[static_cast<std::size_t>(r)]) throw std::invalid_argument("window values collide mod m");
    seen[static_cast<std::size_t>(r)] = true;
    shift += window_[static_cast<std::size_t>(i)] - (i + 1);
  }
  if (shift != 0) throw std::invalid_argument("window does not sum to 1 + ... + m");
}

AffinePermutation AffinePermutation::identity(int m) {
  std::vector<int> w(static_cast<std::size_t>(m));
  std::iota(w.begin(), w.end(), 1);
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::simple(int i, int m) {
  if (m < 2 || i < 0 || i >= m) throw std::domain_error("simple reflection index out of range");
  std::vector<int> w(static_cast<std::size_t>(m));
  std::iota(w.begin(), w.end(), 1);
  if (i == 0) {
    w.front() = 0;
    w.back() = m + 1;
  } else {
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  }
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::from_word(const std::vector<int>& word, int m) {
  AffinePermutation w = identity(m);
  for (int i : word) w = w * simple(i, m);
  return w;
}

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

int AffinePermutation::operator()(int j) const {
  const int m = rank();
  const int k = floor_div(j - 1, m);
  return window_[static_cast<std::size_t>(j - 1 - k * m)] + k * m;
}

AffinePermutation AffinePermutation::inverse() const {
  const int m = rank();
  std::vector<int> inv(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    const int x = window_[static_cast<std::size_t>(i - 1)];
    const int k = floor_div(x - 1, m);
    inv[static_cast<std::size_t>(x - 1 - k * m)] = i - k * m;
  }
  return AffinePermutation(std::move(inv));
}

bool AffinePermutation::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (window_[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

std::string AffinePermutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(window_[i]);
  }
  return out + "]";
}

AffinePermutation operator*(const AffinePermutation& u, const AffinePermutation& w) {
  if (u.rank() != w.rank()) throw std::invalid_argument("affine permutations of different rank");
  std::vector<int> out(w.window().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = u(w.window()[i]);
  return AffinePermutation(std::move(out));
}

std::size_t AffinePermutationHash::operator()(const AffinePermutation& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : w.window()) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
    h *= 1099511628211ull;
  }
  return h;
}

int length(const AffinePermutation& w) {
  const int m = w.rank();
  const auto& win = w.window();
  int len = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      len += std::abs(floor_div(win[static_cast<std::size_t>(j)] - win[static_cast<std::size_t>(i)], m));
  return len;
}

std::vector<int> left_descents(const AffinePermutation& w) {
  const AffinePermutation inv = w.inverse();
  std::vector<int> out;
  for (int i = 0; i < w.rank(); ++i)
    if (inv(i) > inv(i + 1)) out.push_back(i);
  return out;
}

std::vector<int> right_descents(const AffinePermutation& w) {
  std::vector<int> out;
  for (int i = 0; i < w.rank(); ++i)
    if (w(i) > w(i + 1)) out.push_back(i);
  return out;
}

std::vector<int> reduced_word(const AffinePermutation& w) {
  std::vector<int> word;
  AffinePermutation cur = w;
  while (!cur.is_identity()) {
    const int i = left_descents(cur).front();
    word.push_back(i);
    cur = AffinePermutation::simple(i, w.rank()) * cur;
  }
  return word;
}

std::vector<AffinePermutation> finite_weyl_group(int m) {
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 1);
  std::vector<AffinePermutation> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_q_coset_rep(const AffinePermutation& w) {
  const int len = length(w);
  for (int i = 1; i < w.rank(); ++i)
    if (length(AffinePermutation::simple(i, w.rank()) * w) > len) return false;
  return true;
}

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<AffinePermutation, AffinePermutation>& p) const noexcept {
    AffinePermutationHash h;
    return h(p.first) * 31 + h(p.second);
  }
};

std::shared_mutex bruhat_mutex;
std::unordered_map<std::pair<AffinePermutation, AffinePermutation>, bool, PairHash> bruhat_memo;

bool bruhat_rec(const AffinePermutation& x, const AffinePermutation& w) {
  if (x == w) return true;
  const int lx = length(x), lw = length(w);
  if (lx >= lw) return false;
  if (lx == 0) return true;
  {
    std::shared_lock lock(bruhat_mutex);
    auto it = bruhat_memo.find({x, w});
    if (it != bruhat_memo.end()) return it->second;
  }
  const int i = left_descents(w).front();
  const AffinePermutation s = AffinePermutation::simple(i, w.rank());
  const AffinePermutation sw = s * w;
  const AffinePermutation sx = s * x;
  const bool result = length(sx) < lx ? bruhat_rec(sx, sw) : bruhat_rec(x, sw);
  std::unique_lock lock(bruhat_mutex);
  bruhat_memo.emplace(std::make_pair(x, w), result);
  return result;
}

}  // namespace

bool bruhat_leq(const AffinePermutation& x, const AffinePermutation& w) {
  if (x.rank() != w.rank()) throw std::invalid_argument("bruhat_leq: rank mismatch");
  return bruhat_rec(x, w);
}

void clear_bruhat_cache() {
  std::unique_lock lock(bruhat_mutex);
  bruhat_memo.clear();
}

std::vector<AffinePermutation> lower_interval(const AffinePermutation& w) {
  const int m = w.rank();
  const std::vector<int> word = reduced_word(w);
  std::unordered_set<AffinePermutation, AffinePermutationHash> set{AffinePermutation::identity(m)};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const AffinePermutation s = AffinePermutation::simple(*it, m);
    std::vector<AffinePermutation> add;
    add.reserve(set.size());
    for (const auto& x : set) add.push_back(s * x);
    set.insert(add.begin(), add.end());
  }
  return {set.begin(), set.end()};
}

AffineWeight dot_act(const AffinePermutation& w, const AffineWeight& lam, int kappa) {
  if (w.rank() != lam.rank()) throw std::invalid_argument("dot_act: rank mismatch");
  const std::vector<int> word = reduced_word(w);
  AffineWeight out = lam;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = dot_reflect(*it, out, kappa);
  return out;
}

AffinePermutation shortest_element(const AffineWeight& mu, const AffineWeight& nu, int kappa) {
  if (!is_dot_antidominant(nu)) throw std::domain_error("shortest_element: nu + rho is not antidominant");
  const AntidominantResult res = antidominant_representative(mu, kappa);
  if (res.nu != nu) throw std::domain_error("shortest_element: mu is not in the dot orbit of nu");
  const AffinePermutation w = AffinePermutation::from_word(res.word, mu.rank());
  ensure(length(w) == static_cast<int>(res.word.size()),
         "shortest_element: descent walk is not a reduced word");
  ensure(dot_act(w, nu, kappa) == mu, "shortest_element: w . nu != mu");
  return w;
}

}  // namespace jantzenlab
