#include "jantzenlab/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jantzenlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

std::string Partition::to_string() const { return join(parts_); }

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("bad partition text: " + text);
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad partition text: " + text);
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x <= 0) throw std::invalid_argument("composition parts must be positive");
}

int Composition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Composition::sorted() const {
  std::vector<int> p = parts;
  std::sort(p.begin(), p.end(), std::greater<>());
  return Partition(std::move(p));
}

std::string Composition::to_string() const { return join(parts); }

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

void gen_compositions(int n, std::vector<int>& cur, std::vector<Composition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = n; k >= 1; --k) {
    cur.push_back(k);
    gen_compositions(n - k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::domain_error("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, out);
  return out;
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw std::domain_error("compositions_of: negative size");
  std::vector<Composition> out;
  std::vector<int> cur;
  gen_compositions(n, cur, out);
  return out;
}

bool dominates(const Partition& mu, const Partition& lam) {
  if (mu.size() != lam.size()) throw std::domain_error("dominates: partitions of different sizes");
  int sm = 0, sl = 0;
  const int len = std::max(mu.length(), lam.length());
  for (int i = 0; i < len; ++i) {
    sm += mu[i];
    sl += lam[i];
    if (sl > sm) return false;
  }
  return true;
}

Partition conjugate(const Partition& lam) {
  std::vector<int> out(static_cast<std::size_t>(lam[0]), 0);
  for (int p : lam.parts())
    for (int i = 0; i < p; ++i) ++out[static_cast<std::size_t>(i)];
  return Partition(std::move(out));
}

int residue(const Box& b, int r) {
  if (r < 1) throw std::domain_error("residue: modulus must be positive");
  return (((b.col - b.row) % r) + r) % r;
}

std::vector<Box> addable_boxes(const Partition& lam) {
  std::vector<Box> out;
  for (int i = 0; i <= lam.length(); ++i)
    if (i == 0 || lam[i] < lam[i - 1]) out.push_back({i + 1, lam[i] + 1});
  return out;
}

std::vector<Box> removable_boxes(const Partition& lam) {
  std::vector<Box> out;
  for (int i = 0; i < lam.length(); ++i)
    if (lam[i] > lam[i + 1]) out.push_back({i + 1, lam[i]});
  return out;
}

namespace {

std::vector<Box> with_residue(std::vector<Box> boxes, int i, int r) {
  if (i < 0 || i >= r) throw std::domain_error("residue index out of range");
  std::erase_if(boxes, [&](const Box& b) { return residue(b, r) != i; });
  return boxes;
}

}  // namespace

std::vector<Box> addable_boxes(const Partition& lam, int i, int r) {
  return with_residue(addable_boxes(lam), i, r);
}

std::vector<Box> removable_boxes(const Partition& lam, int i, int r) {
  return with_residue(removable_boxes(lam), i, r);
}

Partition add_box(const Partition& lam, const Box& b) {
  std::vector<int> p = lam.parts();
  if (b.row == lam.length() + 1 && b.col == 1)
    p.push_back(1);
  else if (b.row <= lam.length() && lam[b.row - 1] + 1 == b.col)
    ++p[static_cast<std::size_t>(b.row - 1)];
  else
    throw std::invalid_argument("add_box: box is not adjacent");
  return Partition(std::move(p));
}

Partition remove_box(const Partition& lam, const Box& b) {
  if (b.row > lam.length() || lam[b.row - 1] != b.col)
    throw std::invalid_argument("remove_box: box is not at a row end");
  std::vector<int> p = lam.parts();
  --p[static_cast<std::size_t>(b.row - 1)];
  return Partition(std::move(p));
}

bool is_regular(const Partition& lam, int r) {
  int run = 0;
  for (int i = 0; i < lam.length(); ++i) {
    run = (i > 0 && lam[i] == lam[i - 1]) ? run + 1 : 1;
    if (run >= r) return false;
  }
  return true;
}

int ladder_index(const Box& b, int r) { return b.row + (r - 1) * (b.col - 1); }

std::vector<LadderStep> ladder_sequence(const Partition& lam, int r) {
  if (r < 2) throw std::domain_error("ladder_sequence: r must be at least 2");
  std::map<int, LadderStep> ladders;
  for (int row = 1; row <= lam.length(); ++row)
    for (int col = 1; col <= lam[row - 1]; ++col) {
      const Box b{row, col};
      auto& step = ladders[ladder_index(b, r)];
      step.residue = residue(b, r);
      ++step.count;
    }
  std::vector<LadderStep> out;
  out.reserve(ladders.size());
  for (const auto& [idx, step] : ladders) out.push_back(step);
  return out;
}

namespace {

struct TableauFill {
  const Partition& shape;
  const Composition& type;
  std::vector<std::vector<int>> t;
  std::vector<int> remaining;
  std::vector<SemistandardTableau> out;

  void fill(int row, int col) {
    if (row == shape.length()) {
      out.push_back({shape, type, t});
      return;
    }
    if (col == shape[row]) {
      fill(row + 1, 0);
      return;
    }
    const int lo_left = col > 0 ? t[row][col - 1] : 1;
    const int lo_up = row > 0 ? t[row - 1][col] + 1 : 1;
    for (int v = std::max(lo_left, lo_up); v <= type.length(); ++v) {
      if (remaining[v - 1] == 0) continue;
      --remaining[v - 1];
      t[row][col] = v;
      fill(row, col + 1);
      ++remaining[v - 1];
    }
  }
};

}  // namespace

std::vector<SemistandardTableau> semistandard_tableaux(const Partition& shape, const Composition& type) {
  if (shape.size() != type.size())
    throw std::domain_error("semistandard_tableaux: shape and type have different sizes");
  TableauFill f{shape, type, {}, type.parts, {}};
  for (int p : shape.parts()) f.t.emplace_back(static_cast<std::size_t>(p), 0);
  f.fill(0, 0);
  return std::move(f.out);
}

}  // namespace jantzenlab
