#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

namespace defectforms {

/// Exact rational number.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline and
/// combined with 128-bit intermediates; anything larger spills into a shared,
/// immutable GMP rational. The representation is always canonical: the
/// denominator is positive, numerator and denominator are coprime, and a value
/// that fits inline is never stored in the big form.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long long numerator, long long denominator);
  explicit Rational(const mpq_class& value);
  explicit Rational(const mpz_class& value);

  /// Parses "p" or "p/q" with optional sign; throws DomainError on junk or q = 0.
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;
  double to_double() const;
  std::string to_string() const;

  Rational operator-() const;
  Rational reciprocal() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  static Rational from_i128(__int128 num, __int128 den);
  static Rational from_mpq_canonical(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace defectforms
