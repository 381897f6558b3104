#pragma once

#include <string>
#include <variant>

#include "incexc/interval.hpp"
#include "incexc/numerics.hpp"

namespace incexc {

/// Either an exact rational or a certified enclosure. Arithmetic stays exact
/// while both operands are exact and falls back to interval arithmetic as
/// soon as one side is an enclosure.
class Scalar {
 public:
  Scalar() : value_(Rat(0)) {}
  Scalar(Rat x) : value_(std::move(x)) {}        // NOLINT(google-explicit-constructor)
  Scalar(Interval x) : value_(std::move(x)) {}   // NOLINT(google-explicit-constructor)

  bool is_exact() const { return std::holds_alternative<Rat>(value_); }
  /// Throws Error{InvalidParameter} for an enclosure.
  const Rat& exact() const;
  Interval enclosure(unsigned precision_bits = Interval::kDefaultPrecision) const;
  unsigned precision() const;

  /// Exact rational bounds: the value itself, or the interval endpoints.
  Rat lower() const;
  Rat upper() const;
  Rat width() const { return upper() - lower(); }

  bool contains(const Rat& x) const;
  int certain_sign() const;  // -1/0/+1, or 2 when the sign is not determined

  /// "p/q" for exact values, "[lo, hi]" with decimal endpoints otherwise.
  std::string str() const;
  std::string decimal(int sig_digits = 12) const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<Rat, Interval> value_;
};

}  // namespace incexc
