#include "defectforms/random.hpp"

namespace defectforms {

int RandomSource::uniform_int(int lo, int hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng_() % span);
}

Rational RandomSource::nonzero_integer(int bound) {
  int v = uniform_int(1, bound);
  return chance(1, 2) ? Rational(v) : Rational(-v);
}

MultiPoly RandomSource::poly(int max_degree, int terms, int coeff_bound) {
  std::vector<MultiPoly::Term> t;
  for (int n = 0; n < terms; ++n) {
    int deg = uniform_int(0, max_degree);
    int i = uniform_int(0, deg);
    int j = uniform_int(0, deg - i);
    t.push_back({make_monomial(i, j, deg - i - j), nonzero_integer(coeff_bound)});
  }
  return MultiPoly::from_terms(std::move(t));
}

ScalarField RandomSource::field(int max_degree, int terms, bool rational) {
  MultiPoly num = poly(max_degree, terms);
  if (!rational || chance(1, 2)) return num;
  int axis = uniform_int(0, 2);
  MultiPoly v = MultiPoly::variable(axis) + MultiPoly(uniform_int(-2, 2));
  MultiPoly den = MultiPoly(uniform_int(1, 2)) + v * v;
  return ScalarField(num, den);
}

Form RandomSource::form(int degree, int max_degree, int terms, bool rational) {
  Form f(degree);
  for (std::size_t s = 0; s < f.size(); ++s)
    if (!chance(1, 3)) f[s] = field(max_degree, terms, rational);
  return f;
}

TensorForm RandomSource::tensor_form(int degree, int upper, int lower, int max_degree, int terms, bool rational) {
  TensorForm t(degree, upper, lower);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = form(degree, max_degree, terms, rational);
  return t;
}

ScalarMatrix RandomSource::antisymmetric(int max_degree, int terms) {
  ScalarMatrix s;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      if (chance(1, 4)) continue;
      s[a][b] = poly(max_degree, terms);
      s[b][a] = -s[a][b];
    }
  return s;
}

ScalarMatrix RandomSource::unimodular(int entry_degree, int terms) {
  ScalarMatrix l = identity_matrix(), u = identity_matrix();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < a; ++b) {
      if (!chance(2, 3)) continue;
      l[a][b] = poly(entry_degree, terms, 2);
      if (chance(2, 3)) u[b][a] = poly(entry_degree, terms, 2);
    }
  return l * u;
}

Coframe RandomSource::coframe(int entry_degree, bool rational) {
  ScalarMatrix e = unimodular(entry_degree, 2);
  if (rational) {
    int row = uniform_int(0, 2);
    int axis = uniform_int(0, 2);
    MultiPoly v = MultiPoly::variable(axis);
    ScalarField scale = MultiPoly(uniform_int(1, 3)) + v * v;
    for (int i = 0; i < 3; ++i) e[row][i] *= scale;
  }
  return Coframe(e);
}

}  // namespace defectforms
