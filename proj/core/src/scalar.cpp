#include "incexc/scalar.hpp"

#include <algorithm>

#include "incexc/error.hpp"

namespace incexc {

namespace {

unsigned joint_precision(const Scalar& a, const Scalar& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

const Rat& Scalar::exact() const {
  if (const auto* r = std::get_if<Rat>(&value_)) return *r;
  throw Error(ErrorCode::InvalidParameter, "scalar is an enclosure, not an exact value");
}

Interval Scalar::enclosure(unsigned precision_bits) const {
  if (const auto* r = std::get_if<Rat>(&value_)) return Interval(*r, precision_bits);
  return std::get<Interval>(value_);
}

unsigned Scalar::precision() const {
  if (const auto* iv = std::get_if<Interval>(&value_)) return iv->precision();
  return Interval::kDefaultPrecision;
}

Rat Scalar::lower() const {
  if (const auto* r = std::get_if<Rat>(&value_)) return *r;
  return std::get<Interval>(value_).lower();
}

Rat Scalar::upper() const {
  if (const auto* r = std::get_if<Rat>(&value_)) return *r;
  return std::get<Interval>(value_).upper();
}

bool Scalar::contains(const Rat& x) const {
  if (const auto* r = std::get_if<Rat>(&value_)) return *r == x;
  return std::get<Interval>(value_).contains(x);
}

int Scalar::certain_sign() const {
  if (const auto* r = std::get_if<Rat>(&value_)) return r->sign();
  const auto& iv = std::get<Interval>(value_);
  if (mpfr_sgn(iv.lo()) > 0) return 1;
  if (mpfr_sgn(iv.hi()) < 0) return -1;
  if (mpfr_zero_p(iv.lo()) && mpfr_zero_p(iv.hi())) return 0;
  return 2;
}

std::string Scalar::str() const {
  if (const auto* r = std::get_if<Rat>(&value_)) return r->str();
  const auto& iv = std::get<Interval>(value_);
  return "[" + iv.lower_string() + ", " + iv.upper_string() + "]";
}

std::string Scalar::decimal(int sig_digits) const {
  if (const auto* r = std::get_if<Rat>(&value_)) return r->to_decimal(sig_digits);
  const auto& iv = std::get<Interval>(value_);
  return "[" + iv.lower().to_decimal(sig_digits) + ", " + iv.upper().to_decimal(sig_digits) + "]";
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Rat>(&value_)) return Scalar(-*r);
  return Scalar(-std::get<Interval>(value_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(a.exact() + b.exact());
  const unsigned p = joint_precision(a, b);
  return Scalar(a.enclosure(p) + b.enclosure(p));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(a.exact() - b.exact());
  const unsigned p = joint_precision(a, b);
  return Scalar(a.enclosure(p) - b.enclosure(p));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(a.exact() * b.exact());
  const unsigned p = joint_precision(a, b);
  return Scalar(a.enclosure(p) * b.enclosure(p));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() != b.is_exact()) return false;
  if (a.is_exact()) return a.exact() == b.exact();
  return a.lower() == b.lower() && a.upper() == b.upper();
}

}  // namespace incexc
