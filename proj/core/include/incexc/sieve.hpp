#pragma once

#include <cstddef>
#include <vector>

#include "incexc/bracket.hpp"
#include "incexc/numerics.hpp"
#include "incexc/space.hpp"

namespace incexc {

struct SieveOptions {
  /// Full-sieve operations refuse families with more events (EventCapExceeded).
  std::size_t max_events = 24;
  /// Worker threads for subset enumeration; 0 picks hardware concurrency.
  unsigned threads = 0;
};

/// Partial binomial moments of the first n events (n = family size).
struct SieveResult {
  std::size_t k = 1;
  std::size_t n = 0;
  std::vector<Rat> skn_prefix;  // S_{k,n}, S_{k+1,n}, ..., S_{n,n}
  Rat union_prob;
};

/// S_{k,n}: sum over all k-subsets of Pr(A_{i1} & ... & A_{ik}); 0 when k > n.
/// S_{0,n} = 1 by convention.
Rat compute_skn(const EventFamily& fam, std::size_t k, const SieveOptions& opts = {});

/// S_{0,n}, ..., S_{n,n} in a single pass over all subsets.
std::vector<Rat> compute_all_skn(const EventFamily& fam, const SieveOptions& opts = {});

/// Pr(A_1 | ... | A_n) by direct bitset union. This is the oracle side of the
/// identity, independent of the subset sums.
Rat union_prob_bruteforce(const EventFamily& fam);

/// Pr of the union over all k-subsets of their intersections, by brute-force
/// union of intersection bitsets. Throws BadK for k = 0.
Rat union_of_k_intersections(const EventFamily& fam, std::size_t k, const SieveOptions& opts = {});

struct IdentityReport {
  Rat lhs;
  Rat rhs;
  bool equal = false;
};

/// lhs = brute-force union, rhs = sum_k (-1)^{k-1} S_{k,n}. A mismatch is an
/// internal error, never a property of the input.
IdentityReport verify_finite_identity(const EventFamily& fam, const SieveOptions& opts = {});

/// Finite Bonferroni bracket around union_of_k_intersections(fam, k).
/// Throws BadK unless 1 <= k <= n.
Bracket bonferroni_bracket_finite(const EventFamily& fam, std::size_t k, std::size_t d, std::size_t r,
                                  const SieveOptions& opts = {});

/// Same, from precomputed S_{0,n}..S_{n,n}.
Bracket bonferroni_bracket_finite(const std::vector<Rat>& all_skn, std::size_t k, std::size_t d, std::size_t r);

SieveResult run_sieve(const EventFamily& fam, std::size_t k, const SieveOptions& opts = {});

}  // namespace incexc
