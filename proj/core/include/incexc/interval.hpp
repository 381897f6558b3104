#pragma once

#include <mpfr.h>

#include <string>

#include "incexc/numerics.hpp"

namespace incexc {

/// Closed interval [lo, hi] with MPFR endpoints. Every operation rounds lo
/// toward -inf and hi toward +inf, so the exact result of the corresponding
/// real operation is always enclosed. Mixed-precision operations run at the
/// larger precision.
class Interval {
 public:
  static constexpr unsigned kDefaultPrecision = 128;

  explicit Interval(unsigned precision_bits = kDefaultPrecision);
  /// Tightest enclosure of x (degenerate when x is dyadic and fits).
  explicit Interval(const Rat& x, unsigned precision_bits = kDefaultPrecision);
  /// Enclosure of [lo, hi]; throws Error{InvalidParameter} if lo > hi.
  Interval(const Rat& lo, const Rat& hi, unsigned precision_bits = kDefaultPrecision);

  /// Parses decimal endpoints (outward rounded).
  static Interval from_strings(const std::string& lo, const std::string& hi,
                               unsigned precision_bits = kDefaultPrecision);

  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(lo_)); }

  // Endpoints as exact rationals.
  Rat lower() const;
  Rat upper() const;
  Rat width() const { return upper() - lower(); }

  bool contains(const Rat& x) const;
  bool contains(const Interval& other) const;
  bool is_degenerate() const { return mpfr_equal_p(lo_, hi_) != 0; }

  /// Decimal endpoint strings, lo rounded down and hi rounded up, with enough
  /// digits that re-parsing yields an enclosure of this interval.
  std::string lower_string() const;
  std::string upper_string() const;

  double midpoint_approx() const;

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);

  friend Interval exp(const Interval& x);
  friend Interval pow(const Interval& x, unsigned long n);
  friend Interval hull(const Interval& a, const Interval& b);

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

Interval exp(const Interval& x);
Interval pow(const Interval& x, unsigned long n);

/// Hull of two intervals.
Interval hull(const Interval& a, const Interval& b);

}  // namespace incexc
