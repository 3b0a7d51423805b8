#pragma once

#include <compare>
#include <string>
#include <vector>

namespace jantzenlab {

/// A weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped. Throws std::invalid_argument if not a partition.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based), or 0 past the end.
  int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  /// "3,1"; the empty partition prints as "".
  std::string to_string() const;
  static Partition parse(const std::string& text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// A sequence of positive integers.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p);
  Composition(std::initializer_list<int> p) : Composition(std::vector<int>(p)) {}
  Composition(const Partition& p) : parts(p.parts()) {}  // NOLINT(google-explicit-constructor)

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  Partition sorted() const;
  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

struct Box {
  int row = 1;
  int col = 1;

  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

struct SemistandardTableau {
  Partition shape;
  Composition type;
  /// entries[i][j] is the value in row i+1, column j+1; values start at 1.
  std::vector<std::vector<int>> entries;

  friend bool operator==(const SemistandardTableau&, const SemistandardTableau&) = default;
};

/// All partitions of n in lexicographically decreasing order, which refines dominance.
std::vector<Partition> partitions_of(int n);

/// All compositions of n with positive parts.
std::vector<Composition> compositions_of(int n);

/// True iff mu dominates lam. Throws std::domain_error when |mu| != |lam|.
bool dominates(const Partition& mu, const Partition& lam);

Partition conjugate(const Partition& lam);

/// (col - row) mod r.
int residue(const Box& b, int r);

/// All boxes that can be added to lam, top row first.
std::vector<Box> addable_boxes(const Partition& lam);
std::vector<Box> addable_boxes(const Partition& lam, int i, int r);
/// All boxes that can be removed from lam, top row first.
std::vector<Box> removable_boxes(const Partition& lam);
std::vector<Box> removable_boxes(const Partition& lam, int i, int r);

/// lam with b added (b must be addable) or removed (b must be removable).
Partition add_box(const Partition& lam, const Box& b);
Partition remove_box(const Partition& lam, const Box& b);

/// True iff no part is repeated r or more times.
bool is_regular(const Partition& lam, int r);

struct LadderStep {
  int residue = 0;
  int count = 0;

  friend bool operator==(const LadderStep&, const LadderStep&) = default;
};

/// Ladder index of box (row, col): row + (r-1)(col-1).
int ladder_index(const Box& b, int r);

/// Ladders met by lam, in increasing ladder index, with their residue and box count.
std::vector<LadderStep> ladder_sequence(const Partition& lam, int r);

/// Semistandard tableaux of the given shape and content, in lexicographic order
/// of their row reading. Throws std::domain_error when the sizes differ.
std::vector<SemistandardTableau> semistandard_tableaux(const Partition& shape, const Composition& type);

}  // namespace jantzenlab
