#include "incexc/moments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "incexc/error.hpp"

namespace incexc {

namespace {

Rat power_of_two(long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(std::labs(e)));
  return e >= 0 ? Rat(p) : Rat(BigInt(1), p);
}

// S_k = e^{-lambda} * sum_{i >= k} C(i, k) lambda^i / i!. The sum is taken
// exactly up to a cutoff past which consecutive terms shrink by at least a
// factor 2, so the remainder is at most twice the first omitted term.
Scalar poisson_moment(const Rat& lambda, std::size_t k, const Interval& e_minus_lambda) {
  if (k == 0) return Scalar(Rat(1));
  const unsigned prec = e_minus_lambda.precision();
  const Rat rel_tol = power_of_two(-static_cast<long>(prec) - 8);
  const Rat two_lambda = lambda * Rat(2);
  Rat term = pow(lambda, k) / Rat(factorial(k));
  Rat partial;
  Rat tail;
  for (std::size_t i = k;; ++i) {
    partial += term;
    const Rat next = term * lambda / Rat(BigInt(static_cast<unsigned long>(i + 1 - k)));
    if (Rat(BigInt(static_cast<unsigned long>(i + 2 - k))) >= two_lambda &&
        (next.is_zero() || next * Rat(2) <= partial * rel_tol)) {
      tail = next * Rat(2);
      break;
    }
    term = next;
  }
  return Scalar(e_minus_lambda * Interval(partial, partial + tail, prec));
}

TailCertificate poisson_certificate(const Rat& lambda) {
  // lambda / (l + 1) <= 1/2 for every l >= J, so S_l <= S_J 2^{J-l}
  const Rat two_lambda = lambda * Rat(2);
  BigInt j_ceil = two_lambda.num() / two_lambda.den();
  if (Rat(j_ceil) < two_lambda) j_ceil += 1;
  const auto cutoff = static_cast<std::size_t>(j_ceil.get_ui());
  const Rat s_cutoff = pow(lambda, cutoff) / Rat(factorial(cutoff));
  return TailCertificate{cutoff, s_cutoff * power_of_two(static_cast<long>(cutoff)), Rat(BigInt(1), BigInt(2)), 0};
}

bool certificate_forces_decay(const TailCertificate& c, std::size_t k) {
  if (c.scale.is_zero() || c.ratio < Rat(1)) return true;
  return c.ratio == Rat(1) && c.exponent <= -static_cast<long>(k);
}

bool witness_forbids_decay(const TailCertificate& w, std::size_t k) {
  if (w.scale.sign() <= 0) return false;
  if (w.ratio > Rat(1)) return true;
  return w.ratio == Rat(1) && w.exponent + static_cast<long>(k) - 1 >= 0;
}

std::string describe(const TailCertificate& c) {
  std::ostringstream os;
  os << "S_l " << "<= " << c.scale.str() << " * (" << c.ratio.str() << ")^l * l^" << c.exponent << " for l > "
     << c.cutoff;
  return os.str();
}

double log_binom(double n, double m) { return std::lgamma(n + 1) - std::lgamma(m + 1) - std::lgamma(n - m + 1); }

double log_rat(const Rat& x) {
  // log(num) - log(den) without overflowing doubles
  long e_num = 0;
  long e_den = 0;
  const double m_num = mpz_get_d_2exp(&e_num, x.num().get_mpz_t());
  const double m_den = mpz_get_d_2exp(&e_den, x.den().get_mpz_t());
  return std::log(m_num) - std::log(m_den) + static_cast<double>(e_num - e_den) * std::log(2.0);
}

}  // namespace

BinomialMomentSeq sk_from_pmf(const ZPlusPmf& pmf, std::size_t k_max) {
  std::vector<Scalar> values;
  values.reserve(k_max + 1);
  switch (pmf.kind()) {
    case PmfKind::Explicit: {
      const auto& t = pmf.weights();
      for (std::size_t j = 0; j <= k_max; ++j) {
        Rat s;
        for (std::size_t i = j; i < t.size(); ++i) s += Rat(binom(i, j)) * t[i];
        values.emplace_back(std::move(s));
      }
      const std::size_t m = pmf.support_max().value_or(0);
      return BinomialMomentSeq(std::move(values), TailCertificate{m, Rat(0), Rat(0), 0}, std::nullopt, pmf);
    }
    case PmfKind::Geometric: {
      // sum_{i >= j} C(i, j) x^i = x^j / (1 - x)^{j + 1} for |x| < 1
      const Rat& p = pmf.param();
      const Rat q = Rat(1) - p;
      for (std::size_t j = 0; j <= k_max; ++j) values.emplace_back(q * pow(p, j) / pow(q, j + 1));
      const TailCertificate closed{0, Rat(1), p / q, 0};
      return BinomialMomentSeq(std::move(values), closed, closed, pmf);
    }
    case PmfKind::Poisson: {
      const Interval e = exp(-Interval(pmf.param(), pmf.precision()));
      for (std::size_t j = 0; j <= k_max; ++j) values.push_back(poisson_moment(pmf.param(), j, e));
      return BinomialMomentSeq(std::move(values), poisson_certificate(pmf.param()), std::nullopt, pmf);
    }
  }
  throw Error(ErrorCode::InvalidParameter, "unknown pmf kind");
}

Bracket bracket(const BinomialMomentSeq& s, std::size_t k, std::size_t d, std::size_t r, BracketTarget target) {
  if (target == BracketTarget::UnionOfIntersections) {
    throw Error(ErrorCode::InvalidParameter, "moment brackets target 'tail' or 'point'");
  }
  if (k < 1) throw Error(ErrorCode::BadK, "k must be >= 1");
  return make_bracket(s.values(), k, d, r, target);
}

Bracket evaluate_series(const BinomialMomentSeq& s, std::size_t k, BracketTarget target, const Rat& eps,
                        const SeriesOptions& opts) {
  if (k < 1) throw Error(ErrorCode::BadK, "k must be >= 1");
  if (eps.sign() <= 0) throw Error(ErrorCode::InvalidParameter, "eps must be positive");
  if (target == BracketTarget::UnionOfIntersections) {
    throw Error(ErrorCode::InvalidParameter, "series targets are 'tail' or 'point'");
  }
  const auto verdict = check_exact_condition(s, k);
  if (verdict.status != VerdictStatus::CertifiedConverges) {
    throw Error(ErrorCode::NoCertificate, "convergence at level k = " + std::to_string(k) +
                                              " is not certified (" + std::string(to_string(verdict.status)) + ")");
  }
  const TailCertificate& cert = *s.certificate();
  const std::size_t first = first_moment_index(target, k);
  const double log_eps = log_rat(eps);
  const bool cert_vanishes = cert.scale.is_zero() || cert.ratio.is_zero();
  const double log_scale = cert_vanishes ? 0.0 : log_rat(cert.scale);
  const double log_ratio = cert_vanishes ? 0.0 : log_rat(cert.ratio);

  std::optional<BinomialMomentSeq> extended;
  std::size_t scan_from = 0;
  for (std::size_t d = 0;; ++d) {
    // matched-depth width is C(2d+k, k-1) * S_{first + 2d + 1}
    const std::size_t idx = first + 2 * d + 1;
    if (idx > opts.max_terms) {
      throw Error(ErrorCode::WidthNotAchievable, "width " + eps.str() + " not reached within " +
                                                     std::to_string(opts.max_terms) + " terms");
    }
    const BinomialMomentSeq& cur = extended ? *extended : s;
    bool candidate = false;
    if (idx <= cur.max_index()) {
      candidate = Rat(binom(2 * d + k, k - 1)) * cur[idx].upper() <= eps;
    } else if (idx > cert.cutoff) {
      if (cert_vanishes) {
        candidate = true;
      } else {
        const auto di = static_cast<double>(idx);
        const double lb = log_binom(static_cast<double>(2 * d + k), static_cast<double>(k - 1)) + log_scale +
                          di * log_ratio + static_cast<double>(cert.exponent) * std::log(di);
        candidate = lb <= log_eps;
      }
    }
    if (!candidate) continue;
    if (idx > cur.max_index()) {
      if (!s.source()) {
        throw Error(ErrorCode::WidthNotAchievable,
                    "stored prefix ends at S_" + std::to_string(s.max_index()) + " and the sequence has no source pmf");
      }
      extended = sk_from_pmf(*s.source(), idx);
    }
    // the certificate only bounds the width from above; the actual moments
    // may reach eps at a shallower depth
    const BinomialMomentSeq& seq = extended ? *extended : s;
    for (std::size_t dd = scan_from; dd <= d; ++dd) {
      Bracket b = bracket(seq, k, dd, dd, target);
      if (b.width() <= eps) return b;
    }
    scan_from = d + 1;
  }
}

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::CertifiedConverges: return "certified_converges";
    case VerdictStatus::CertifiedDiverges: return "certified_diverges";
    case VerdictStatus::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

ConvergenceVerdict check_exact_condition(const BinomialMomentSeq& s, std::size_t k) {
  if (k < 1) throw Error(ErrorCode::BadK, "k must be >= 1");
  ConvergenceVerdict v;
  v.k = k;
  const bool converges = s.certificate() && certificate_forces_decay(*s.certificate(), k);
  const bool diverges = s.divergence_witness() && witness_forbids_decay(*s.divergence_witness(), k);
  if (converges && diverges) {
    throw Error(ErrorCode::InvalidCertificate, "tail certificate and divergence witness contradict each other");
  }
  if (converges) {
    v.status = VerdictStatus::CertifiedConverges;
    v.witness = describe(*s.certificate()) + ", so l^" + std::to_string(k - 1) + " S_l -> 0";
  } else if (diverges) {
    v.status = VerdictStatus::CertifiedDiverges;
    const auto& w = *s.divergence_witness();
    std::ostringstream os;
    os << "S_l >= " << w.scale.str() << " * (" << w.ratio.str() << ")^l * l^" << w.exponent << " for l > "
       << w.cutoff << ", so l^" << (k - 1) << " S_l does not tend to 0";
    v.witness = os.str();
  } else {
    v.status = VerdictStatus::Inconclusive;
    v.witness = "no closed-form tail information decides lim l^" + std::to_string(k - 1) + " S_l";
  }
  if (s.max_index() >= 1) {
    const std::size_t l = s.max_index();
    v.diagnostic = std::pow(static_cast<double>(l), static_cast<double>(k - 1)) * s[l].upper().to_double();
  }
  return v;
}

ConvergenceVerdict check_takacs(const BinomialMomentSeq& s) {
  ConvergenceVerdict v;
  v.k = 1;
  const auto& c = s.certificate();
  const auto& w = s.divergence_witness();
  if (c && (c->scale.is_zero() || c->ratio < Rat(1))) {
    v.status = VerdictStatus::CertifiedConverges;
    v.witness = describe(*c) + ", so limsup S_l^(1/l) <= " + (c->scale.is_zero() ? std::string("0") : c->ratio.str()) +
                " < 1";
  } else if (w && w->scale.sign() > 0 && w->ratio >= Rat(1)) {
    v.status = VerdictStatus::CertifiedDiverges;
    v.witness = "S_l >= " + w->scale.str() + " * (" + w->ratio.str() + ")^l * l^" + std::to_string(w->exponent) +
                ", so limsup S_l^(1/l) >= " + w->ratio.str() + " >= 1";
  } else {
    v.status = VerdictStatus::Inconclusive;
    v.witness = "no closed-form tail information decides limsup S_l^(1/l)";
  }
  double root = 0.0;
  bool any = false;
  for (std::size_t l = std::max<std::size_t>(1, s.size() / 2); l < s.size(); ++l) {
    const double x = s[l].upper().to_double();
    if (x > 0) {
      root = std::max(root, std::pow(x, 1.0 / static_cast<double>(l)));
      any = true;
    }
  }
  if (any || s.max_index() >= 1) v.diagnostic = root;
  return v;
}

bool FinitenessReport::all_finite() const {
  return std::all_of(entries.begin(), entries.end(), [](const FinitenessEntry& e) { return e.finite; });
}

FinitenessReport finiteness_cascade(const BinomialMomentSeq& s, std::size_t l) {
  if (l < 1) throw Error(ErrorCode::BadK, "l must be >= 1");
  std::optional<BinomialMomentSeq> extended;
  if (l > s.max_index()) {
    if (!s.source()) {
      throw Error(ErrorCode::InsufficientPrefix, "S_" + std::to_string(l) + " is not available");
    }
    extended = sk_from_pmf(*s.source(), l);
  }
  const BinomialMomentSeq& seq = extended ? *extended : s;
  FinitenessReport rep;
  rep.l = l;
  for (std::size_t k = 1; k < l; ++k) {
    FinitenessEntry e;
    e.k = k;
    e.value = seq[k];
    e.finite = true;  // stored moments are finite by construction
    if (seq.source()) {
      // C(p, k) <= C(p, l) for p >= 2l - 1, so the tail of S_k is dominated by S_l
      Scalar bound = seq[l];
      for (std::size_t p = k; p + 2 <= 2 * l; ++p) bound += Scalar(Rat(binom(p, k))) * pmf_weight(*seq.source(), p);
      e.finite = e.value.lower() <= bound.upper();
      e.comparison_bound = std::move(bound);
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace incexc
