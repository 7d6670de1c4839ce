#pragma once

#include <gmpxx.h>

#include <compare>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "beads/error.hpp"

namespace beads {

// Exact rational number. Always in lowest terms with a positive denominator;
// every arithmetic result is canonicalized eagerly.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : value_(num, den) {
    if (den == 0) throw Error(ErrorKind::MalformedRational, "zero denominator");
    value_.canonicalize();
  }
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  // Exact binary value of a finite double.
  static Rational from_double(double d) {
    if (!std::isfinite(d)) throw Error(ErrorKind::DomainError, "non-finite value");
    return Rational(mpq_class(d));
  }

  // 2^e for any integer e.
  static Rational pow2(long e) {
    mpz_class p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
    return e >= 0 ? Rational(mpq_class(p)) : Rational(mpq_class(mpz_class(1), p));
  }

  // Canonical "p/q" or plain integer "p". Rejects "2/4", "1/-2", "+1", "01".
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_integer_literal(num, true) ||
        (slash != std::string_view::npos && !is_integer_literal(den, false))) {
      throw Error(ErrorKind::MalformedRational, "cannot parse rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (d == 0) throw Error(ErrorKind::MalformedRational, "zero denominator in '" + std::string(text) + "'");
    if (n == 0 && (d != 1 || num.front() == '-')) throw Error(ErrorKind::NonCanonicalRational, "'" + std::string(text) + "' is not in lowest terms");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1) throw Error(ErrorKind::NonCanonicalRational, "'" + std::string(text) + "' is not in lowest terms");
    return Rational(mpq_class(n, d));
  }

  // Accepts everything parse() does plus finite decimals such as "-1.25".
  static Rational parse_real(std::string_view text) {
    auto dot = text.find('.');
    if (dot == std::string_view::npos) return parse(text);
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    std::string_view digits = negative ? whole.substr(1) : whole;
    auto all_digits = [](std::string_view s) {
      if (s.empty()) return false;
      for (char c : s)
        if (c < '0' || c > '9') return false;
      return true;
    };
    if (!all_digits(digits) || !all_digits(frac)) {
      throw Error(ErrorKind::MalformedRational, "cannot parse decimal '" + std::string(text) + "'");
    }
    mpz_class n(std::string(digits) + std::string(frac), 10);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(negative ? mpq_class(-q) : q);
  }

  std::string str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  double to_double() const { return value_.get_d(); }
  const mpq_class& raw() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sgn(value_) == 0; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::DomainError, "division by zero");
    value_ /= o.value_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  static bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return s.size() == 1 || s.front() != '0';
  }

  mpq_class value_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

}  // namespace beads

template <>
struct std::hash<beads::Rational> {
  std::size_t operator()(const beads::Rational& r) const {
    return std::hash<std::string>{}(r.str());
  }
};
