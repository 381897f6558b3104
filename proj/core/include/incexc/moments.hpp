#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "incexc/bracket.hpp"
#include "incexc/pmf.hpp"

namespace incexc {

struct SeriesOptions {
  /// Largest moment index evaluate_series may use before giving up.
  std::size_t max_terms = 1'000'000;
};

/// S_j = E[C(X, j)] = sum_{i >= j} C(i, j) T_i for j = 0..k_max. Exact for
/// explicit and geometric pmfs, certified enclosures for poisson. The result
/// carries the family's tail certificate, its divergence witness when one
/// exists in closed form, and the pmf itself for later extension.
BinomialMomentSeq sk_from_pmf(const ZPlusPmf& pmf, std::size_t k_max);

/// Bonferroni bracket for Pr(X >= k) (Tail) or Pr(X = k-1) (Point) from the
/// stored prefix. Throws BadK, InsufficientPrefix, or InvalidParameter for
/// the Union target.
Bracket bracket(const BinomialMomentSeq& s, std::size_t k, std::size_t d, std::size_t r, BracketTarget target);

/// Bracket at matched depth d = r with width <= eps, growing d as needed.
/// Requires check_exact_condition(s, k) to certify convergence (NoCertificate
/// otherwise). Throws WidthNotAchievable when the width cannot reach eps
/// within opts.max_terms or the prefix cannot be extended.
Bracket evaluate_series(const BinomialMomentSeq& s, std::size_t k, BracketTarget target, const Rat& eps,
                        const SeriesOptions& opts = {});

enum class VerdictStatus { CertifiedConverges, CertifiedDiverges, Inconclusive };

std::string_view to_string(VerdictStatus status);

struct ConvergenceVerdict {
  std::size_t k = 1;
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::string witness;
  /// Non-rigorous diagnostics over the stored prefix: the last l^{k-1} S_l
  /// for the exact condition, max S_l^{1/l} over the upper half of the prefix
  /// for Takacs.
  std::optional<double> diagnostic;
};

/// Decides lim l^{k-1} S_l = 0 from closed-form tail information only:
///   converges if the certificate has rho < 1 (or C = 0), or rho = 1 and alpha <= -k;
///   diverges  if the witness has C > 0 and rho > 1, or rho = 1 and alpha >= 1 - k;
///   otherwise inconclusive. Never extrapolates from the finite prefix.
ConvergenceVerdict check_exact_condition(const BinomialMomentSeq& s, std::size_t k);

/// limsup S_l^{1/l} < 1: converges if the certificate has rho < 1 (or C = 0),
/// diverges if the witness has C > 0 and rho >= 1.
ConvergenceVerdict check_takacs(const BinomialMomentSeq& s);

struct FinitenessEntry {
  std::size_t k = 0;
  bool finite = false;
  Scalar value;
  /// sum_{k <= p <= 2l-2} C(p, k) T_p + S_l, an upper bound on S_k (pmf-backed only).
  std::optional<Scalar> comparison_bound;
};

struct FinitenessReport {
  std::size_t l = 0;
  std::vector<FinitenessEntry> entries;  // k = 1..l-1
  bool all_finite() const;
};

/// Given S_l finite, reports S_k finite for every k < l, with the comparison
/// bound when the sequence is backed by a pmf.
FinitenessReport finiteness_cascade(const BinomialMomentSeq& s, std::size_t l);

}  // namespace incexc
