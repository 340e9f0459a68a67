#pragma once

#include <cstdint>
#include <random>

#include "defectforms/exterior.hpp"

namespace defectforms {

/// Seeded generator of random polynomials, forms, matrices and coframes.
///
/// Only the raw 64-bit stream of std::mt19937_64 is used, mapped to ranges
/// by modulo, so sequences are identical across standard libraries.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }
  /// Uniform in [lo, hi].
  int uniform_int(int lo, int hi);
  /// True with probability num/den.
  bool chance(int num, int den) { return uniform_int(1, den) <= num; }

  /// Nonzero integer in [-bound, bound].
  Rational nonzero_integer(int bound);

  /// Sum of up to `terms` monomials of total degree <= max_degree with
  /// integer coefficients in [-coeff_bound, coeff_bound].
  MultiPoly poly(int max_degree, int terms, int coeff_bound = 3);
  /// Polynomial, or with `rational` set and probability 1/2, a quotient by a
  /// denominator positive on all of R^3 (1 + square terms).
  ScalarField field(int max_degree, int terms, bool rational = false);

  /// Each coefficient zero with probability 1/3, otherwise field(...).
  Form form(int degree, int max_degree, int terms, bool rational = false);
  TensorForm tensor_form(int degree, int upper, int lower, int max_degree, int terms, bool rational = false);

  /// Antisymmetric matrix with entries of degree <= max_degree.
  ScalarMatrix antisymmetric(int max_degree, int terms);
  /// L*U with unit triangular factors whose off-diagonal entries have degree
  /// <= entry_degree: determinant 1, polynomial inverse.
  ScalarMatrix unimodular(int entry_degree, int terms);
  /// Unimodular coframe; with `rational`, one row is scaled by a positive
  /// non-constant polynomial so the inverse has denominators.
  Coframe coframe(int entry_degree, bool rational = false);

 private:
  std::mt19937_64 rng_;
};

}  // namespace defectforms
