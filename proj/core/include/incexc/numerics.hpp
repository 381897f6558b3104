#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace incexc {

using BigInt = mpz_class;

/// Exact rational number, always kept in canonical form (den > 0,
/// gcd(|num|, den) = 1). Serializes as "p/q", or "p" when q = 1.
class Rat {
 public:
  Rat() = default;
  template <std::integral T>
  Rat(T value) : q_(BigInt(static_cast<long>(value))) {}  // NOLINT(google-explicit-constructor)
  Rat(const BigInt& value) : q_(value) {}                   // NOLINT(google-explicit-constructor)
  Rat(const BigInt& num, const BigInt& den);

  /// Accepts "p/q", plain integers, and exact decimal / scientific notation
  /// ("0.25", "1e-9"). Throws Error{ParseError}.
  static Rat parse(std::string_view text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  std::string str() const { return q_.get_str(); }
  /// Presentation only: rounded to `sig_digits` significant digits.
  std::string to_decimal(int sig_digits = 12) const;
  double to_double() const { return q_.get_d(); }

  mpq_srcptr raw() const { return q_.get_mpq_t(); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rat(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

Rat pow(const Rat& base, unsigned long exponent);
Rat abs(const Rat& x);

/// C(n, k); zero when k > n.
BigInt binom(unsigned long n, unsigned long k);

BigInt factorial(unsigned long n);

}  // namespace incexc
