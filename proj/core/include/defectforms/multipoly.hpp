#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "defectforms/rational.hpp"

namespace defectforms {

/// A point of R^3 with exact rational coordinates.
struct Point {
  Rational x1, x2, x3;

  const Rational& operator[](int axis) const { return axis == 0 ? x1 : axis == 1 ? x2 : x3; }
};

/// Packed exponent triple (i, j, k) of x^i y^j z^k.
///
/// The packing stores the total degree in the top bits, so comparing two
/// packed values as integers is graded-lexicographic order with x > y > z.
using Monomial = std::uint64_t;

constexpr Monomial make_monomial(int i, int j, int k) {
  return (static_cast<Monomial>(i + j + k) << 48) | (static_cast<Monomial>(i) << 32) |
         (static_cast<Monomial>(j) << 16) | static_cast<Monomial>(k);
}

constexpr int monomial_exponent(Monomial m, int axis) {
  return static_cast<int>((m >> (32 - 16 * axis)) & 0xffff);
}

constexpr int monomial_degree(Monomial m) { return static_cast<int>(m >> 48); }

/// Sparse polynomial in x, y, z with rational coefficients.
///
/// Terms are kept sorted by decreasing monomial (graded lex) and no stored
/// coefficient is zero, so the zero polynomial is the empty term list and
/// structural equality is polynomial equality.
class MultiPoly {
 public:
  struct Term {
    Monomial monomial;
    Rational coeff;
  };

  MultiPoly() = default;
  MultiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(int constant) : MultiPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  /// The coordinate function x_{axis+1} (axis is 0-based).
  static MultiPoly variable(int axis);
  static MultiPoly monomial(int i, int j, int k, const Rational& coeff = 1);
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial == 0); }
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const { return terms_.empty() ? -1 : monomial_degree(terms_.front().monomial); }
  int degree_in(int axis) const;
  Rational coefficient(int i, int j, int k) const;
  Rational constant_term() const;
  const Term& leading() const { return terms_.front(); }
  const Term& trailing() const { return terms_.back(); }

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(unsigned exponent) const;

  MultiPoly derivative(int axis) const;

  /// Quotient when `divisor` divides this polynomial exactly, nullopt otherwise.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

  /// Positive-or-negative rational c such that this / c has coprime integer
  /// coefficients and a positive leading coefficient. Zero maps to 1.
  Rational content() const;

  Rational evaluate(const Point& p) const;
  double evaluate(const std::array<double, 3>& p) const;

  /// Human-readable text accepted back by the scalar parser.
  std::string to_string(const std::array<const char*, 3>& names = {"x", "y", "z"}) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend std::strong_ordering operator<=>(const MultiPoly& a, const MultiPoly& b);

 private:
  std::vector<Term> terms_;
};

}  // namespace defectforms
