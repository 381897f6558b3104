#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "incexc/scalar.hpp"

namespace incexc {

/// What a Bonferroni bracket encloses.
///   Tail:  Pr(X >= k), terms S_{j+k}
///   Point: Pr(X = k-1), terms S_{j+k-1}
///   UnionOfIntersections: Pr(union over k-subsets of A_{i1} & ... & A_{ik}), terms S_{j+k,n}
enum class BracketTarget { Tail, Point, UnionOfIntersections };

std::string_view to_string(BracketTarget target);

/// Index of the first moment used by the alternating sum for this target.
std::size_t first_moment_index(BracketTarget target, std::size_t k);

/// Truncations of the alternating series at depth 2d+1 (lower) and 2r (upper).
/// In interval mode lower.lower() and upper.upper() form the reported enclosure.
struct Bracket {
  std::size_t k = 1;
  std::size_t d = 0;
  std::size_t r = 0;
  BracketTarget target = BracketTarget::Tail;
  Scalar lower;
  Scalar upper;

  Rat enclosure_lower() const { return lower.lower(); }
  Rat enclosure_upper() const { return upper.upper(); }
  Rat width() const { return enclosure_upper() - enclosure_lower(); }
  bool contains(const Rat& x) const { return enclosure_lower() <= x && x <= enclosure_upper(); }
  bool is_exact() const { return lower.is_exact() && upper.is_exact(); }
};

/// sum_{j=0}^{last} (-1)^j C(j+k-1, k-1) moments[first + j]; moments must
/// hold index first + last.
Scalar alternating_partial_sum(std::span<const Scalar> moments, std::size_t k, std::size_t first,
                               std::size_t last);

/// Bracket from a moment list. Throws InsufficientPrefix when `moments` does
/// not reach the deepest index used.
Bracket make_bracket(std::span<const Scalar> moments, std::size_t k, std::size_t d, std::size_t r,
                     BracketTarget target);

}  // namespace incexc
