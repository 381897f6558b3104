#include "incexc/numerics.hpp"

#include <mpfr.h>

#include <cctype>
#include <vector>

#include "incexc/error.hpp"

namespace incexc {

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::InvalidParameter, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidParameter, "division by zero");
  q_ /= o.q_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(whole) + "'");
  }
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty rational");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_integer(text.substr(0, slash), whole);
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw Error(ErrorCode::ParseError, "bad denominator in '" + std::string(whole) + "'");
    }
    const BigInt den(std::string(den_text), 10);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(whole) + "'");
    return Rat(num, den);
  }

  // decimal with optional exponent
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    const BigInt ev = parse_integer(text.substr(e + 1), whole);
    if (!ev.fits_slong_p() || abs(ev) > 100000) {
      throw Error(ErrorCode::ParseError, "exponent out of range in '" + std::string(whole) + "'");
    }
    exponent = ev.get_si();
    text = text.substr(0, e);
  }
  std::string digits;
  long frac_len = 0;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view ip = text.substr(0, dot);
    const std::string_view fp = text.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty())) {
      throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(whole) + "'");
    }
    digits = std::string(ip) + std::string(fp);
    frac_len = static_cast<long>(fp.size());
  } else {
    if (!all_digits(text)) throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(whole) + "'");
    digits = std::string(text);
  }
  BigInt num(digits, 10);
  if (negative) num = -num;
  const long scale = exponent - frac_len;
  if (scale >= 0) return Rat(BigInt(num * pow10(static_cast<unsigned long>(scale))));
  return Rat(num, pow10(static_cast<unsigned long>(-scale)));
}

std::string Rat::to_decimal(int sig_digits) const {
  mpfr_t x;
  mpfr_init2(x, 256);
  mpfr_set_q(x, raw(), MPFR_RNDN);
  std::vector<char> buf(64 + static_cast<std::size_t>(sig_digits));
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", sig_digits, x);
  mpfr_clear(x);
  return std::string(buf.data());
}

Rat pow(const Rat& base, unsigned long exponent) {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), exponent);
  return Rat(n, d);
}

Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

BigInt binom(unsigned long n, unsigned long k) {
  if (k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace incexc
