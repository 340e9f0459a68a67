#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "defectforms/multipoly.hpp"

namespace defectforms {

/// Settings of the hybrid exact/probabilistic zero test.
struct ZeroTestConfig {
  std::uint64_t seed = 0x5eed'defec7ULL;
  int num_points = 8;
  /// Sample coordinates are p/q with |p| <= coord_bound and 1 <= q <= coord_bound.
  int coord_bound = 1000;
  /// Numerators of total degree at most this are decided exactly.
  int max_expand_degree = 12;

  /// Throws DomainError when num_points < 4 or a bound is not positive.
  void validate() const;
};

/// Exact rational function of x, y, z.
///
/// The numerator is an expanded MultiPoly. The denominator is kept as a
/// product of powers of primitive, non-constant polynomials with positive
/// leading coefficient; all rational content lives in the numerator. This
/// gives a cheap least common denominator for sums and lets exact trial
/// division cancel known factors, without any multivariate gcd. Because the
/// numerator is expanded, the value is zero exactly when the numerator is.
class ScalarField {
 public:
  struct Factor {
    MultiPoly base;
    int exponent;
  };

  ScalarField() = default;
  ScalarField(const Rational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  ScalarField(int c) : num_(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  ScalarField(MultiPoly p) : num_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  /// num / den; throws DomainError when den is the zero polynomial.
  ScalarField(const MultiPoly& num, const MultiPoly& den);

  /// Coordinate function x_{axis+1}, axis 0-based.
  static ScalarField coordinate(int axis) { return ScalarField(MultiPoly::variable(axis)); }

  const MultiPoly& numerator() const { return num_; }
  /// The expanded denominator polynomial (1 for polynomials).
  MultiPoly denominator() const;
  const std::vector<Factor>& denominator_factors() const { return den_; }

  bool is_polynomial() const { return den_.empty(); }
  /// Exact structural test; see is_zero(f, cfg) for the configured test.
  bool is_exactly_zero() const { return num_.is_zero(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  Rational constant_value() const { return num_.constant_term(); }
  /// Total degree of numerator plus denominator, a size measure.
  int degree() const;

  ScalarField operator-() const;
  friend ScalarField operator+(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator-(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator*(const ScalarField& a, const ScalarField& b);
  /// Throws DomainError when b is identically zero.
  friend ScalarField operator/(const ScalarField& a, const ScalarField& b);
  ScalarField& operator+=(const ScalarField& o) { return *this = *this + o; }
  ScalarField& operator-=(const ScalarField& o) { return *this = *this - o; }
  ScalarField& operator*=(const ScalarField& o) { return *this = *this * o; }
  ScalarField pow(unsigned exponent) const;

  /// Structural identity of the canonical representation.
  friend bool operator==(const ScalarField& a, const ScalarField& b);

  /// Canonical text accepted back by parse_scalar.
  std::string to_string() const;

 private:
  void insert_factor(const MultiPoly& p, int exponent);
  void cancel();

  MultiPoly num_;
  std::vector<Factor> den_;
};

/// Exact partial derivative along coordinate axis 0..2.
ScalarField differentiate(const ScalarField& f, int axis);

/// Exact value at p; throws PoleError when the denominator vanishes there.
Rational evaluate(const ScalarField& f, const Point& p);

/// Floating-point value; no pole check.
double evaluate(const ScalarField& f, const std::array<double, 3>& p);

/// Hybrid zero test: exact below cfg.max_expand_degree, seeded sampling above.
bool is_zero(const ScalarField& f, const ZeroTestConfig& cfg = {});

/// Seeded sample points avoiding every denominator factor of the given fields.
/// Throws SamplingExhausted after 64 attempts for one point.
std::vector<Point> sample_points(const ZeroTestConfig& cfg, const std::vector<const ScalarField*>& avoid);

}  // namespace defectforms
