#pragma once

#include <cstddef>
#include <vector>

#include "incexc/numerics.hpp"
#include "incexc/pmf.hpp"
#include "incexc/sieve.hpp"
#include "incexc/space.hpp"

namespace incexc {

/// One cell B_U of the partition induced by a finite family: the sample
/// points lying in exactly the events indexed by U and in no other.
struct AtomCell {
  std::vector<std::size_t> signature;  // sorted 0-based event indices (U)
  std::vector<std::size_t> atoms;      // sample atoms in the cell
  Rat weight;                          // Pr(B_U)
};

/// Partition of a finite space by membership signature. For a finite family
/// the limsup set is empty, so the cells cover the whole space and the
/// occupancy weights T_0..T_n sum to exactly 1.
struct AtomDecomposition {
  std::size_t events = 0;
  std::vector<AtomCell> cells;  // ordered by (|U|, U)
  std::vector<Rat> t;           // T_0..T_n

  /// Pr(B_U) for any U (0 when no atom realizes U).
  Rat cell_weight(const std::vector<std::size_t>& signature) const;
  /// Pr(A_U) = sum over V containing U of Pr(B_V).
  Rat intersection_weight(const std::vector<std::size_t>& signature) const;
};

/// One pass over the atoms, grouping by membership bitset. Only signatures
/// realized by at least one atom get a cell.
AtomDecomposition decompose_finite_family(const EventFamily& fam);

/// T_j = sum of Pr(B_U) over |U| = j, for j = 0..n.
std::vector<Rat> compute_tj(const AtomDecomposition& dec);

/// The occupancy count X = #{i : omega in A_i} as an explicit pmf.
ZPlusPmf occupancy_pmf(const AtomDecomposition& dec);

struct SkTkCheck {
  std::size_t k = 0;
  Rat sieve_value;      // S_{k,n} from the sieve
  Rat occupancy_value;  // sum_j C(j+k, k) T_{j+k}
  bool equal = false;
};

struct SkTkReport {
  std::vector<SkTkCheck> checks;  // k = 1..k_max
  bool all_equal() const;
};

SkTkReport verify_sk_tk_identity(const EventFamily& fam, std::size_t k_max, const SieveOptions& opts = {});

}  // namespace incexc
