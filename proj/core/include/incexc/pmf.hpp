#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "incexc/interval.hpp"
#include "incexc/numerics.hpp"
#include "incexc/scalar.hpp"

namespace incexc {

enum class PmfKind { Explicit, Geometric, Poisson };

std::string_view to_string(PmfKind kind);

/// Distribution of a Z+-valued random variable X, T_j = Pr(X = j).
///   explicit:  T_0..T_m given, exactly normalized
///   geometric: T_j = (1 - p) p^j, 0 <= p < 1
///   poisson:   T_j = e^{-lambda} lambda^j / j!, lambda >= 0 (interval-valued)
class ZPlusPmf {
 public:
  static ZPlusPmf explicit_weights(std::vector<Rat> weights);
  static ZPlusPmf geometric(Rat p);
  static ZPlusPmf poisson(Rat lambda, unsigned precision_bits = Interval::kDefaultPrecision);

  PmfKind kind() const { return kind_; }
  const std::vector<Rat>& weights() const { return weights_; }
  const Rat& param() const { return param_; }
  unsigned precision() const { return precision_; }
  bool is_exact() const { return kind_ != PmfKind::Poisson; }

  /// Largest j with T_j > 0 for explicit pmfs; nullopt for infinite support.
  std::optional<std::size_t> support_max() const;

  /// n0: the first index with Pr(X <= n0) > 0.
  std::size_t first_positive_index() const;

  /// Pr(X = j) up to the common factor e^{-lambda} for poisson; exact for
  /// every kind. Used where that factor cancels (conditioning).
  Rat relative_weight(std::size_t j) const;

 private:
  ZPlusPmf() = default;
  PmfKind kind_ = PmfKind::Explicit;
  std::vector<Rat> weights_;
  Rat param_;
  unsigned precision_ = Interval::kDefaultPrecision;
};

/// T_j: exact for explicit and geometric pmfs, a certified enclosure for poisson.
Scalar pmf_weight(const ZPlusPmf& pmf, std::size_t j);

/// X conditioned on X <= n, as an explicit pmf on {0..n}. Throws ZeroMass
/// when Pr(X <= n) = 0, i.e. n < first_positive_index().
ZPlusPmf truncate_conditional(const ZPlusPmf& pmf, std::size_t n);

/// Closed-form bound S_l <= scale * ratio^l * l^exponent for every l > cutoff.
/// The same shape is used for lower bounds (divergence witnesses).
struct TailCertificate {
  std::size_t cutoff = 0;
  Rat scale;
  Rat ratio;
  long exponent = 0;

  /// scale * ratio^l * l^exponent, exactly; requires l >= 1.
  Rat evaluate(std::size_t l) const;

  friend bool operator==(const TailCertificate&, const TailCertificate&) = default;
};

/// Binomial moments S_0..S_J (S_0 = 1) with optional closed-form tail
/// information and the pmf they were computed from, if any.
class BinomialMomentSeq {
 public:
  /// Validates S_0 = 1, nonnegativity, and that any certificate (upper) or
  /// witness (lower) agrees with the stored values beyond its cutoff.
  explicit BinomialMomentSeq(std::vector<Scalar> values,
                             std::optional<TailCertificate> certificate = std::nullopt,
                             std::optional<TailCertificate> divergence_witness = std::nullopt,
                             std::optional<ZPlusPmf> source = std::nullopt);

  const std::vector<Scalar>& values() const { return values_; }
  const Scalar& operator[](std::size_t k) const { return values_[k]; }
  std::size_t size() const { return values_.size(); }
  std::size_t max_index() const { return values_.size() - 1; }
  bool is_exact() const;

  const std::optional<TailCertificate>& certificate() const { return certificate_; }
  const std::optional<TailCertificate>& divergence_witness() const { return witness_; }
  const std::optional<ZPlusPmf>& source() const { return source_; }

 private:
  std::vector<Scalar> values_;
  std::optional<TailCertificate> certificate_;
  std::optional<TailCertificate> witness_;
  std::optional<ZPlusPmf> source_;
};

}  // namespace incexc
