#include "defectforms/fixtures.hpp"

#include "defectforms/errors.hpp"

namespace defectforms {
namespace {

ScalarMatrix shear_gauge() {
  ScalarMatrix l = identity_matrix();
  l[0][1] = ScalarField::coordinate(0);
  return l;
}

ScalarMatrix z_rotation_generator() {
  ScalarMatrix s;
  s[0][1] = ScalarField::coordinate(2);
  s[1][0] = -ScalarField::coordinate(2);
  return s;
}

// Terms in lower-numbered coordinates only, so dF is unit triangular.
std::array<ScalarField, 3> triangular_potential(RandomSource& rng) {
  std::array<ScalarField, 3> f;
  for (int a = 0; a < 3; ++a) {
    MultiPoly g;
    for (int t = 0; t < 2; ++t) {
      int i = a > 0 ? rng.uniform_int(0, 2) : 0;
      int j = a > 1 ? rng.uniform_int(0, 2 - i) : 0;
      if (i + j == 0) continue;
      g = g + MultiPoly::monomial(i, j, 0, rng.nonzero_integer(2));
    }
    f[static_cast<std::size_t>(a)] = ScalarField(MultiPoly::variable(a) + g);
  }
  return f;
}

}  // namespace

Geometry fixture_g0() { return Geometry(Coframe::identity(), TensorForm(1, 1, 1)); }

Geometry fixture_g1() { return Geometry(Coframe::identity(), gauge_connection(GaugeField(shear_gauge()))); }

Geometry fixture_g2() {
  return Geometry(Coframe::identity(), gauge_connection(cayley_rotation(z_rotation_generator())));
}

Geometry fixture_g3() {
  GaugeField l(shear_gauge());
  std::array<ScalarField, 3> f{ScalarField::coordinate(0), ScalarField::coordinate(1), ScalarField::coordinate(2)};
  return Geometry(symmetric_coframe(l, f), gauge_connection(l));
}

Geometry fixture_g4() {
  ScalarField f = ScalarField(1) + ScalarField::coordinate(0);
  return Geometry(Coframe::identity(), gauge_connection(conformal_gauge(f, z_rotation_generator())));
}

Geometry named_fixture(const std::string& name) {
  if (name == "g0") return fixture_g0();
  if (name == "g1") return fixture_g1();
  if (name == "g2") return fixture_g2();
  if (name == "g3") return fixture_g3();
  if (name == "g4") return fixture_g4();
  throw DomainError("unknown fixture '" + name + "'");
}

Geometry fixture_linear_cartesian() {
  Form k = Form::dx(0) + ScalarField(2) * Form::dx(2);
  TensorForm w(1, 1, 1);
  w.at({0, 1}) = k;
  w.at({1, 0}) = -k;
  return Geometry(Coframe::identity(), w);
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"g0", "g1", "g2", "g3", "g4"};
  return names;
}

std::string to_string(FixtureFamily family) {
  switch (family) {
    case FixtureFamily::MetricAffine: return "metric-affine";
    case FixtureFamily::RiemannCartan: return "riemann-cartan";
    case FixtureFamily::SemiMetric: return "semi-metric";
    case FixtureFamily::GeneralTeleparallel: return "general-teleparallel";
    case FixtureFamily::Cayley: return "cayley";
    case FixtureFamily::Symmetric: return "symmetric";
    case FixtureFamily::Conformal: return "conformal";
    case FixtureFamily::FlatRiemannCartan: return "flat-riemann-cartan";
  }
  return "?";
}

TensorForm random_connection(RandomSource& rng, int max_degree, bool antisymmetric) {
  TensorForm w(1, 1, 1);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (antisymmetric && a >= b) continue;
      w.at({a, b}) = rng.form(1, max_degree, 2);
      if (antisymmetric) w.at({b, a}) = -w.at({a, b});
    }
  return w;
}

Geometry random_geometry(RandomSource& rng, FixtureFamily family) {
  switch (family) {
    case FixtureFamily::MetricAffine:
      return Geometry(rng.coframe(1), random_connection(rng, 2, false));
    case FixtureFamily::RiemannCartan:
      return Geometry(rng.coframe(1), random_connection(rng, 2, true));
    case FixtureFamily::SemiMetric: {
      TensorForm w = random_connection(rng, 2, true);
      Form phi = rng.form(1, 2, 2);
      for (int a = 0; a < 3; ++a) w.at({a, a}) = phi;
      return Geometry(rng.coframe(1), w);
    }
    case FixtureFamily::GeneralTeleparallel:
      return Geometry(rng.coframe(1), gauge_connection(GaugeField(rng.unimodular(1, 2))));
    case FixtureFamily::Cayley:
      return Geometry(rng.coframe(1), gauge_connection(cayley_rotation(rng.antisymmetric(1, 2))));
    case FixtureFamily::Symmetric: {
      GaugeField l(rng.unimodular(1, 2));
      return Geometry(symmetric_coframe(l, triangular_potential(rng)), gauge_connection(l));
    }
    case FixtureFamily::FlatRiemannCartan: {
      ScalarMatrix s;
      s[0][1] = ScalarField::coordinate(rng.uniform_int(0, 2)) * rng.nonzero_integer(1);
      s[1][0] = -s[0][1];
      Coframe e = symmetric_coframe(cayley_rotation(s), triangular_potential(rng));
      return Geometry(e, random_connection(rng, 1, true));
    }
    case FixtureFamily::Conformal: {
      ScalarField f = ScalarField(MultiPoly(rng.uniform_int(2, 4)) + MultiPoly::variable(rng.uniform_int(0, 2)));
      ScalarMatrix s;
      int a = rng.uniform_int(0, 2), b = (a + 1) % 3;
      s[a][b] = ScalarField::coordinate(rng.uniform_int(0, 2));
      s[b][a] = -s[a][b];
      return Geometry(rng.coframe(1), gauge_connection(conformal_gauge(f, s)));
    }
  }
  throw DomainError("unknown fixture family");
}

}  // namespace defectforms
