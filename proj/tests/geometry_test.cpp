#include <gtest/gtest.h>

#include <thread>

#include "defectforms/errors.hpp"
#include "defectforms/fixtures.hpp"
#include "defectforms/geometry.hpp"

using namespace defectforms;

namespace {

Form F(const char* text) { return parse_form(text); }
ScalarField S(const char* text) { return parse_scalar(text); }

TensorForm delta_form(int upper, int lower) {
  TensorForm t(0, upper, lower);
  for (int a = 0; a < 3; ++a) t.at({a, a}) = Form(ScalarField(1));
  return t;
}

}  // namespace

TEST(CartanTensors, G0IsFlat) {
  const auto& c = cartan_tensors(fixture_g0());
  EXPECT_TRUE(c.Q.is_exactly_zero());
  EXPECT_TRUE(c.T.is_exactly_zero());
  EXPECT_TRUE(c.R.is_exactly_zero());
}

TEST(CartanTensors, G1Values) {
  Geometry g = fixture_g1();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a == 0 && b == 1)
        EXPECT_EQ(g.omega().at({a, b}), F("dx1"));
      else
        EXPECT_TRUE(g.omega().at({a, b}).is_exactly_zero());
    }
  const auto& c = cartan_tensors(g);
  EXPECT_EQ(c.Q.at({0, 1}), F("1/2*dx1"));
  EXPECT_EQ(c.Q.at({1, 0}), F("1/2*dx1"));
  EXPECT_EQ(c.T.at({0}), F("dx1^dx2"));
  TensorForm q_expected(1, 0, 2), t_expected(2, 1, 0);
  q_expected.at({0, 1}) = q_expected.at({1, 0}) = F("1/2*dx1");
  t_expected.at({0}) = F("dx1^dx2");
  EXPECT_EQ(c.Q, q_expected);
  EXPECT_EQ(c.T, t_expected);
  EXPECT_TRUE(c.R.is_exactly_zero());
}

TEST(CartanTensors, CurvatureMatchesDefinition) {
  RandomSource rng(31);
  for (int n = 0; n < 5; ++n) {
    Geometry g = random_geometry(rng, FixtureFamily::MetricAffine);
    TensorForm w = g.omega();
    TensorForm expected = d(w);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) expected.at({a, b}) += wedge(w.at({a, c}), w.at({c, b}));
    EXPECT_TRUE(is_zero(cartan_tensors(g).R - expected));
  }
}

TEST(CartanTensors, CacheIsSharedAndThreadSafe) {
  Geometry g = fixture_g4();
  Geometry copy = g;
  std::vector<std::thread> threads;
  std::vector<const CartanTensors*> seen(4);
  for (int i = 0; i < 4; ++i)
    threads.emplace_back([&, i] { seen[static_cast<std::size_t>(i)] = &(i % 2 ? g : copy).cartan(); });
  for (auto& t : threads) t.join();
  for (auto* p : seen) EXPECT_EQ(p, seen[0]);
  Geometry fresh(g.frame(), g.omega());
  EXPECT_EQ(fresh.cartan().T, g.cartan().T);
}

TEST(CovariantDerivative, Examples) {
  Geometry g1 = fixture_g1();
  TensorForm f = Form(S("x^2*y"));
  EXPECT_EQ(cov_d(g1, f), d(f));
  EXPECT_TRUE(cov_d(g1, delta_form(1, 1)).is_exactly_zero());
  TensorForm dd = cov_d(g1, delta_form(0, 2));
  EXPECT_EQ(dd.at({0, 1}), -F("dx1"));
  EXPECT_TRUE(is_zero(dd + ScalarField(2) * cartan_tensors(g1).Q));
  RandomSource rng(32);
  Geometry g = random_geometry(rng, FixtureFamily::MetricAffine);
  EXPECT_TRUE(is_zero(cov_d(g, delta_form(1, 1))));
  EXPECT_TRUE(is_zero(cov_d(g, delta_form(0, 2)) + ScalarField(2) * cartan_tensors(g).Q));
  EXPECT_TRUE(is_zero(cov_d(g, delta_form(2, 0)) - ScalarField(2) * with_valence(cartan_tensors(g).Q, 2, 0)));
}

TEST(CovariantDerivative, LeibnizOnDisjointSlots) {
  RandomSource rng(33);
  for (int n = 0; n < 5; ++n) {
    Geometry g = random_geometry(rng, FixtureFamily::MetricAffine);
    TensorForm a = rng.tensor_form(1, 1, 0, 2, 2);
    TensorForm b = rng.tensor_form(n % 2, 0, 1, 2, 2);
    TensorForm lhs = cov_d(g, wedge(a, b));
    TensorForm rhs = wedge(cov_d(g, a), b) - wedge(a, cov_d(g, b));
    EXPECT_TRUE(is_zero(lhs - rhs));
  }
}

TEST(LeviCivita, Examples) {
  EXPECT_TRUE(levi_civita(Coframe::identity()).is_exactly_zero());
  ScalarMatrix e = identity_matrix();
  e[2][1] = S("x");
  Coframe frame(e);
  TensorForm lc = levi_civita(frame);
  EXPECT_FALSE(lc.is_exactly_zero());
  EXPECT_TRUE(is_zero(lc + swap_indices(lc)));
  for (int a = 0; a < 3; ++a) {
    Form s = d(frame.e(a));
    for (int b = 0; b < 3; ++b) s += wedge(lc.at({a, b}), frame.e(b));
    EXPECT_TRUE(s.is_exactly_zero());
  }
}

TEST(LeviCivita, RandomFrames) {
  RandomSource rng(34);
  for (int n = 0; n < 6; ++n) {
    Coframe frame = rng.coframe(1, n % 3 == 2);
    TensorForm lc = levi_civita(frame);
    EXPECT_TRUE(is_zero(lc + swap_indices(lc)));
    for (int a = 0; a < 3; ++a) {
      Form s = d(frame.e(a));
      for (int b = 0; b < 3; ++b) s += wedge(lc.at({a, b}), frame.e(b));
      EXPECT_TRUE(is_zero(s));
    }
  }
}

TEST(ConnectionSplit, G0AndG1) {
  const auto& s0 = connection_split(fixture_g0());
  EXPECT_TRUE(s0.defect.is_exactly_zero());
  EXPECT_TRUE(s0.levi_civita.is_exactly_zero());

  Geometry g1 = fixture_g1();
  const auto& s = connection_split(g1);
  EXPECT_EQ(s.contortion.at({0, 1}), F("dx1"));
  EXPECT_EQ(s.contortion.at({1, 0}), -F("dx1"));
  EXPECT_TRUE(s.disformation.at({0, 1}).is_exactly_zero());
  EXPECT_EQ(s.disformation.at({1, 0}), F("dx1"));
  TensorForm sym = symmetric_part(s.defect), anti = antisymmetric_part(s.defect);
  EXPECT_EQ(sym.at({0, 1}), F("1/2*dx1"));
  EXPECT_EQ(anti.at({0, 1}), F("1/2*dx1"));
  EXPECT_TRUE(is_zero(with_valence(s.levi_civita, 0, 2) + s.defect - with_valence(g1.omega(), 0, 2)));
}

TEST(ConnectionSplit, MetricTeleparallelContortionGivesTorsion) {
  Geometry g2 = fixture_g2();
  const auto& s = connection_split(g2);
  EXPECT_TRUE(is_zero(s.defect - s.contortion));
  for (int a = 0; a < 3; ++a) {
    Form kt(2);
    for (int b = 0; b < 3; ++b) kt += wedge(s.contortion.at({a, b}), g2.frame().e(b));
    EXPECT_TRUE(is_zero(kt - cartan_tensors(g2).T.at({a})));
  }
}

TEST(ConnectionSplit, InvariantsOnRandomGeometries) {
  RandomSource rng(35);
  for (int n = 0; n < 6; ++n) {
    Geometry g = random_geometry(rng, n % 2 ? FixtureFamily::MetricAffine : FixtureFamily::GeneralTeleparallel);
    const auto& s = connection_split(g);
    EXPECT_TRUE(is_zero(with_valence(s.levi_civita, 0, 2) + s.defect - with_valence(g.omega(), 0, 2)));
    EXPECT_TRUE(is_zero(s.contortion + swap_indices(s.contortion)));
    EXPECT_TRUE(is_zero(symmetric_part(s.defect) - cartan_tensors(g).Q));
  }
}

TEST(CurvatureSplit, Reassembly) {
  RandomSource rng(36);
  for (int n = 0; n < 4; ++n) {
    Geometry g = random_geometry(rng, FixtureFamily::MetricAffine);
    CurvatureSplit cs = curvature_split(g);
    const auto& r = cartan_tensors(g).R;
    EXPECT_TRUE(is_zero(cs.antisym + cs.sym - with_valence(r, 0, 2)));
    EXPECT_TRUE(is_zero(cs.riemannian + cs.nonriemannian - r));
  }
  CurvatureSplit g2 = curvature_split(fixture_g2());
  EXPECT_TRUE(is_zero(g2.sym));
  CurvatureSplit g1 = curvature_split(fixture_g1());
  EXPECT_TRUE(is_zero(g1.antisym + g1.sym));
}

TEST(Bianchi, ResidualsVanish) {
  std::vector<Geometry> geoms{fixture_g0(), fixture_g1(), fixture_g4()};
  RandomSource rng(37);
  for (int n = 0; n < 4; ++n) geoms.push_back(random_geometry(rng, FixtureFamily::MetricAffine));
  for (const auto& g : geoms) {
    BianchiResiduals r = bianchi_residuals(g);
    EXPECT_TRUE(is_zero(r.res1));
    EXPECT_TRUE(is_zero(r.res2));
    EXPECT_TRUE(is_zero(r.res3));
  }
  BianchiResiduals r1 = bianchi_residuals(fixture_g1());
  EXPECT_TRUE(r1.res1.is_exactly_zero() && r1.res2.is_exactly_zero() && r1.res3.is_exactly_zero());
}

TEST(Classify, Fixtures) {
  EXPECT_EQ(classify(fixture_g0()), GeometryClass::Minkowski);
  EXPECT_EQ(classify(fixture_g1()), GeometryClass::GeneralTeleparallel);
  EXPECT_EQ(classify(fixture_g2()), GeometryClass::MetricTeleparallel);
  EXPECT_EQ(classify(fixture_g3()), GeometryClass::SymmetricTeleparallel);
  EXPECT_EQ(classify(fixture_g4()), GeometryClass::GeneralTeleparallel);
  EXPECT_EQ(to_string(GeometryClass::RiemannWeyl), "RiemannWeyl");
}

TEST(Generators, GaugeExamples) {
  EXPECT_TRUE(gauge_connection(GaugeField(identity_matrix())).is_exactly_zero());
  ScalarMatrix s;
  s[0][1] = S("z");
  s[1][0] = S("-z");
  GaugeField rot = cayley_rotation(s);
  EXPECT_EQ(rot.matrix()[0][0], S("(1 - z^2)/(1 + z^2)"));
  EXPECT_EQ(rot.matrix()[0][1], S("-2*z/(1 + z^2)"));
  EXPECT_EQ(rot.matrix()[1][0], S("2*z/(1 + z^2)"));
  EXPECT_EQ(rot.matrix()[2][2], ScalarField(1));
  EXPECT_TRUE(is_zero(transpose(rot.matrix()) * rot.matrix() - identity_matrix()));
  EXPECT_EQ(cayley_rotation(ScalarMatrix{}).matrix(), identity_matrix());

  ScalarMatrix bad;
  bad[0][1] = S("z");
  EXPECT_THROW(cayley_rotation(bad), DomainError);
  ScalarMatrix singular;
  singular[0][1] = S("1");
  singular[1][0] = S("-1");
  singular[0][0] = S("-1");
  EXPECT_THROW(cayley_rotation(singular), DomainError);
}

TEST(Generators, SymmetricAndConformalExamples) {
  Geometry g3 = fixture_g3();
  EXPECT_EQ(g3.frame().e(0), F("dx1 - x*dx2"));
  EXPECT_TRUE(cartan_tensors(g3).T.is_exactly_zero());

  GaugeField conf = conformal_gauge(S("1 + x"), ScalarMatrix{});
  Geometry g(Coframe::identity(), gauge_connection(conf));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Form expected = a == b ? F("dx1/(1 + x)") : Form(1);
      EXPECT_TRUE(is_zero(cartan_tensors(g).Q.at({a, b}) - expected));
    }
  EXPECT_THROW(conformal_gauge(ScalarField(0), ScalarMatrix{}), DomainError);
  EXPECT_THROW(Coframe(ScalarMatrix{}), DomainError);
}

TEST(Generators, RandomFamiliesHaveTheirFlatness) {
  RandomSource rng(38);
  for (int n = 0; n < 3; ++n) {
    Geometry gt = random_geometry(rng, FixtureFamily::GeneralTeleparallel);
    EXPECT_TRUE(is_zero(cartan_tensors(gt).R));
    Geometry cay = random_geometry(rng, FixtureFamily::Cayley);
    EXPECT_TRUE(is_zero(cartan_tensors(cay).R));
    EXPECT_TRUE(is_zero(cartan_tensors(cay).Q));
    Geometry sym = random_geometry(rng, FixtureFamily::Symmetric);
    EXPECT_TRUE(is_zero(cartan_tensors(sym).R));
    EXPECT_TRUE(is_zero(cartan_tensors(sym).T));
    Geometry conf = random_geometry(rng, FixtureFamily::Conformal);
    const auto& q = cartan_tensors(conf).Q;
    EXPECT_TRUE(is_zero(cartan_tensors(conf).R));
    Form trace = q.at({0, 0}) + q.at({1, 1}) + q.at({2, 2});
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        Form tf = q.at({a, b});
        if (a == b) tf -= ScalarField(Rational(1, 3)) * trace;
        EXPECT_TRUE(is_zero(tf));
      }
  }
}
