#include "incexc/pmf.hpp"

#include "incexc/error.hpp"

namespace incexc {

std::string_view to_string(PmfKind kind) {
  switch (kind) {
    case PmfKind::Explicit: return "explicit";
    case PmfKind::Geometric: return "geometric";
    case PmfKind::Poisson: return "poisson";
  }
  return "unknown";
}

ZPlusPmf ZPlusPmf::explicit_weights(std::vector<Rat> weights) {
  if (weights.empty()) throw Error(ErrorCode::NotNormalized, "explicit pmf has no weights");
  Rat total;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (weights[j].sign() < 0) {
      throw Error(ErrorCode::NegativeWeight, "T_" + std::to_string(j) + " = " + weights[j].str());
    }
    total += weights[j];
  }
  if (total != Rat(1)) throw Error(ErrorCode::NotNormalized, "pmf weights sum to " + total.str());
  ZPlusPmf pmf;
  pmf.kind_ = PmfKind::Explicit;
  pmf.weights_ = std::move(weights);
  return pmf;
}

ZPlusPmf ZPlusPmf::geometric(Rat p) {
  if (p.sign() < 0 || p >= Rat(1)) {
    throw Error(ErrorCode::InvalidParameter, "geometric parameter must satisfy 0 <= p < 1, got " + p.str());
  }
  ZPlusPmf pmf;
  pmf.kind_ = PmfKind::Geometric;
  pmf.param_ = std::move(p);
  return pmf;
}

ZPlusPmf ZPlusPmf::poisson(Rat lambda, unsigned precision_bits) {
  if (lambda.sign() < 0) {
    throw Error(ErrorCode::InvalidParameter, "poisson parameter must be >= 0, got " + lambda.str());
  }
  ZPlusPmf pmf;
  pmf.kind_ = PmfKind::Poisson;
  pmf.param_ = std::move(lambda);
  pmf.precision_ = precision_bits;
  return pmf;
}

std::optional<std::size_t> ZPlusPmf::support_max() const {
  if (kind_ == PmfKind::Explicit) {
    std::size_t m = 0;
    for (std::size_t j = 0; j < weights_.size(); ++j) {
      if (!weights_[j].is_zero()) m = j;
    }
    return m;
  }
  if (param_.is_zero()) return 0;  // geometric p = 0 and poisson lambda = 0 are point masses at 0
  return std::nullopt;
}

std::size_t ZPlusPmf::first_positive_index() const {
  if (kind_ == PmfKind::Explicit) {
    for (std::size_t j = 0; j < weights_.size(); ++j) {
      if (!weights_[j].is_zero()) return j;
    }
  }
  return 0;
}

Rat ZPlusPmf::relative_weight(std::size_t j) const {
  switch (kind_) {
    case PmfKind::Explicit:
      return j < weights_.size() ? weights_[j] : Rat(0);
    case PmfKind::Geometric:
      return (Rat(1) - param_) * pow(param_, j);
    case PmfKind::Poisson:
      return pow(param_, j) / Rat(factorial(j));
  }
  return Rat(0);
}

Scalar pmf_weight(const ZPlusPmf& pmf, std::size_t j) {
  if (pmf.is_exact()) return Scalar(pmf.relative_weight(j));
  const Interval e = exp(-Interval(pmf.param(), pmf.precision()));
  return Scalar(e * Interval(pmf.relative_weight(j), pmf.precision()));
}

ZPlusPmf truncate_conditional(const ZPlusPmf& pmf, std::size_t n) {
  std::vector<Rat> w;
  w.reserve(n + 1);
  Rat mass;
  for (std::size_t k = 0; k <= n; ++k) {
    w.push_back(pmf.relative_weight(k));
    mass += w.back();
  }
  if (mass.is_zero()) {
    throw Error(ErrorCode::ZeroMass, "Pr(X <= " + std::to_string(n) + ") = 0; first admissible cutoff is n0 = " +
                                         std::to_string(pmf.first_positive_index()));
  }
  for (auto& x : w) x /= mass;
  return ZPlusPmf::explicit_weights(std::move(w));
}

Rat TailCertificate::evaluate(std::size_t l) const {
  if (l == 0) throw Error(ErrorCode::InvalidParameter, "tail bound evaluated at l = 0");
  Rat r = scale * pow(ratio, l);
  const Rat lp = pow(Rat(BigInt(static_cast<unsigned long>(l))), static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? r / lp : r * lp;
}

BinomialMomentSeq::BinomialMomentSeq(std::vector<Scalar> values, std::optional<TailCertificate> certificate,
                                     std::optional<TailCertificate> divergence_witness,
                                     std::optional<ZPlusPmf> source)
    : values_(std::move(values)),
      certificate_(std::move(certificate)),
      witness_(std::move(divergence_witness)),
      source_(std::move(source)) {
  if (values_.empty()) throw Error(ErrorCode::InvalidParameter, "binomial moment sequence needs S_0");
  if (!values_[0].contains(Rat(1))) throw Error(ErrorCode::InvalidParameter, "S_0 must equal 1");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k].upper().sign() < 0) {
      throw Error(ErrorCode::NegativeWeight, "S_" + std::to_string(k) + " is negative");
    }
  }
  if (certificate_) {
    if (certificate_->scale.sign() < 0 || certificate_->ratio.sign() < 0) {
      throw Error(ErrorCode::InvalidCertificate, "tail certificate needs C >= 0 and rho >= 0");
    }
    for (std::size_t l = std::max<std::size_t>(certificate_->cutoff + 1, 1); l < values_.size(); ++l) {
      if (values_[l].lower() > certificate_->evaluate(l)) {
        throw Error(ErrorCode::InvalidCertificate, "S_" + std::to_string(l) + " exceeds the certified tail bound");
      }
    }
  }
  if (witness_) {
    for (std::size_t l = std::max<std::size_t>(witness_->cutoff + 1, 1); l < values_.size(); ++l) {
      if (values_[l].upper() < witness_->evaluate(l)) {
        throw Error(ErrorCode::InvalidCertificate, "S_" + std::to_string(l) + " is below the divergence witness");
      }
    }
  }
}

bool BinomialMomentSeq::is_exact() const {
  for (const auto& v : values_) {
    if (!v.is_exact()) return false;
  }
  return true;
}

}  // namespace incexc
