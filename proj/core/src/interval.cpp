#include "incexc/interval.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "incexc/error.hpp"

namespace incexc {

namespace {

unsigned joint_precision(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

Rat to_rat(mpfr_srcptr x) {
  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, x);
  Rat r(BigInt(mpq_numref(q)), BigInt(mpq_denref(q)));
  mpq_clear(q);
  return r;
}

std::string to_decimal_string(mpfr_srcptr x, mpfr_rnd_t rnd) {
  if (mpfr_zero_p(x)) return "0";
  // digits sufficient to distinguish neighbouring values at this precision
  const auto digits = static_cast<std::size_t>(std::ceil(mpfr_get_prec(x) * 0.30103)) + 2;
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, x, rnd);
  std::string mantissa(s);
  mpfr_free_str(s);
  std::string sign;
  if (!mantissa.empty() && mantissa.front() == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  return sign + "0." + mantissa + "e" + std::to_string(e);
}

}  // namespace

Interval::Interval(unsigned precision_bits) {
  if (precision_bits < MPFR_PREC_MIN) throw Error(ErrorCode::InvalidParameter, "precision too small");
  mpfr_init2(lo_, precision_bits);
  mpfr_init2(hi_, precision_bits);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rat& x, unsigned precision_bits) : Interval(precision_bits) {
  mpfr_set_q(lo_, x.raw(), MPFR_RNDD);
  mpfr_set_q(hi_, x.raw(), MPFR_RNDU);
}

Interval::Interval(const Rat& lo, const Rat& hi, unsigned precision_bits) : Interval(precision_bits) {
  if (lo > hi) throw Error(ErrorCode::InvalidParameter, "interval lower endpoint exceeds upper");
  mpfr_set_q(lo_, lo.raw(), MPFR_RNDD);
  mpfr_set_q(hi_, hi.raw(), MPFR_RNDU);
}

Interval Interval::from_strings(const std::string& lo, const std::string& hi, unsigned precision_bits) {
  Interval r(precision_bits);
  char* end = nullptr;
  if (mpfr_strtofr(r.lo_, lo.c_str(), &end, 10, MPFR_RNDD); end == lo.c_str() || *end != '\0') {
    throw Error(ErrorCode::ParseError, "bad interval endpoint '" + lo + "'");
  }
  if (mpfr_strtofr(r.hi_, hi.c_str(), &end, 10, MPFR_RNDU); end == hi.c_str() || *end != '\0') {
    throw Error(ErrorCode::ParseError, "bad interval endpoint '" + hi + "'");
  }
  if (mpfr_greater_p(r.lo_, r.hi_)) throw Error(ErrorCode::InvalidParameter, "interval lo > hi");
  return r;
}

Interval::Interval(const Interval& other) {
  mpfr_init2(lo_, mpfr_get_prec(other.lo_));
  mpfr_init2(hi_, mpfr_get_prec(other.hi_));
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other) {}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, mpfr_get_prec(other.lo_));
    mpfr_set_prec(hi_, mpfr_get_prec(other.hi_));
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  if (this != &other) {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Rat Interval::lower() const { return to_rat(lo_); }
Rat Interval::upper() const { return to_rat(hi_); }

bool Interval::contains(const Rat& x) const {
  return mpfr_cmp_q(lo_, x.raw()) <= 0 && mpfr_cmp_q(hi_, x.raw()) >= 0;
}

bool Interval::contains(const Interval& other) const {
  return mpfr_lessequal_p(lo_, other.lo_) && mpfr_greaterequal_p(hi_, other.hi_);
}

std::string Interval::lower_string() const { return to_decimal_string(lo_, MPFR_RNDD); }
std::string Interval::upper_string() const { return to_decimal_string(hi_, MPFR_RNDU); }

double Interval::midpoint_approx() const {
  return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

Interval Interval::operator-() const {
  Interval r(precision());
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(joint_precision(a, b));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(joint_precision(a, b));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const unsigned prec = joint_precision(a, b);
  Interval r(prec);
  mpfr_t down, up;
  mpfr_init2(down, prec);
  mpfr_init2(up, prec);
  bool first = true;
  for (mpfr_srcptr x : {a.lo_, a.hi_}) {
    for (mpfr_srcptr y : {b.lo_, b.hi_}) {
      mpfr_mul(down, x, y, MPFR_RNDD);
      mpfr_mul(up, x, y, MPFR_RNDU);
      if (first || mpfr_less_p(down, r.lo_)) mpfr_set(r.lo_, down, MPFR_RNDD);
      if (first || mpfr_greater_p(up, r.hi_)) mpfr_set(r.hi_, up, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(down);
  mpfr_clear(up);
  return r;
}

Interval exp(const Interval& x) {
  Interval r(x.precision());
  mpfr_exp(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval pow(const Interval& x, unsigned long n) {
  Interval r(x.precision());
  if (n == 0) {
    mpfr_set_ui(r.lo_, 1, MPFR_RNDD);
    mpfr_set_ui(r.hi_, 1, MPFR_RNDU);
    return r;
  }
  const bool odd = (n % 2) == 1;
  if (odd || mpfr_sgn(x.lo_) >= 0) {
    mpfr_pow_ui(r.lo_, x.lo_, n, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, x.hi_, n, MPFR_RNDU);
  } else if (mpfr_sgn(x.hi_) <= 0) {
    mpfr_pow_ui(r.lo_, x.hi_, n, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, x.lo_, n, MPFR_RNDU);
  } else {
    // even power of an interval straddling zero
    mpfr_t a, b;
    mpfr_init2(a, x.precision());
    mpfr_init2(b, x.precision());
    mpfr_pow_ui(a, x.lo_, n, MPFR_RNDU);
    mpfr_pow_ui(b, x.hi_, n, MPFR_RNDU);
    mpfr_set_zero(r.lo_, 1);
    mpfr_max(r.hi_, a, b, MPFR_RNDU);
    mpfr_clear(a);
    mpfr_clear(b);
  }
  return r;
}

Interval hull(const Interval& a, const Interval& b) {
  Interval r(joint_precision(a, b));
  mpfr_min(r.lo_, a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(r.hi_, a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

}  // namespace incexc
