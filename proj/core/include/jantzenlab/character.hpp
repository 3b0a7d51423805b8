#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "jantzenlab/affine_weyl.hpp"

namespace jantzenlab {

/// Offset below a reference weight: the weight reference - k delta - sum_i c_i alpha_i,
/// stored as {k, c_1, ..., c_{m-1}} with alpha_i the finite simple roots.
using RootOffset = std::vector<int>;

/// Character truncated to delta-depth <= depth and finite root coordinates <= height.
struct TruncatedCharacter {
  int m = 0;
  int depth = 0;
  int height = 0;
  AffineWeight reference;
  std::map<RootOffset, std::int64_t> coeffs;

  std::int64_t coeff(const RootOffset& offset) const;
  bool in_window(const RootOffset& offset) const;
};

/// Offset of the simple root alpha_i (i = 0 is delta - theta).
RootOffset simple_root_offset(int i, int m);

/// Verma module character e^lam prod (1 - e^{-beta})^{-mult beta} over positive
/// affine roots, truncated as in TruncatedCharacter. A negative height selects depth + 2.
TruncatedCharacter verma_character(const AffineWeight& lam, int depth, int height = -1);

/// Checks sum_{y in S_m} (-1)^{l(y)} ch N(y . lam) against the parabolic Verma
/// character ch V(lam) * prod over depth >= 1 roots, inside the truncation window.
/// Throws std::domain_error unless the finite part of lam is dominant integral.
bool bgg_parabolic_character_check(const AffineWeight& lam, int depth);

}  // namespace jantzenlab
