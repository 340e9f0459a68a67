#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "defectforms/defects.hpp"
#include "defectforms/errors.hpp"
#include "defectforms/fixtures.hpp"

using namespace defectforms;

namespace {

using Vec = std::array<double, 3>;
using Num3 = std::array<std::array<std::array<double, 3>, 3>, 3>;
using Num2 = std::array<std::array<double, 3>, 3>;

int eps(int a, int b, int c) { return (a - b) * (b - c) * (c - a) / 2; }

// omega^a_b(d/dx^i) at p, straight from the coordinate coefficients.
Num3 omega_at(const TensorForm& w, const Vec& p) {
  Num3 o{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int i = 0; i < 3; ++i) o[a][b][i] = evaluate(w.at({a, b}).at(1u << i), p);
  return o;
}

// Brute-force densities for an identity coframe: torsion and curvature from
// omega by central differences, then the epsilon contractions in doubles.
struct NumericDensities {
  Num2 alpha{}, theta{};
  Num3 zeta{};
};

NumericDensities numeric_densities(const TensorForm& w, const Vec& p) {
  const double h = 1e-4;
  Num3 o = omega_at(w, p);
  std::array<Num3, 3> dw{};  // dw[j][a][b][i] = d_j omega^a_{b i}
  for (int j = 0; j < 3; ++j) {
    Vec lo = p, hi = p;
    lo[j] -= h;
    hi[j] += h;
    Num3 ol = omega_at(w, lo), oh = omega_at(w, hi);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int i = 0; i < 3; ++i) dw[j][a][b][i] = (oh[a][b][i] - ol[a][b][i]) / (2 * h);
  }
  double T[3][3][3], R[3][3][3][3];
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        T[a][i][j] = o[a][j][i] - o[a][i][j];
        for (int b = 0; b < 3; ++b) {
          double r = dw[i][a][b][j] - dw[j][a][b][i];
          for (int c = 0; c < 3; ++c) r += o[a][c][i] * o[c][b][j] - o[a][c][j] * o[c][b][i];
          R[a][b][i][j] = r;
        }
      }
  NumericDensities n;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int m = 0; m < 3; ++m)
        for (int k = 0; k < 3; ++k) {
          int e = eps(a, m, k);
          n.alpha[a][b] += 0.5 * e * T[b][m][k];
          for (int c = 0; c < 3; ++c)
            for (int d = 0; d < 3; ++d)
              n.theta[a][b] += 0.25 * e * eps(b, c, d) * 0.5 * (R[c][d][m][k] - R[d][c][m][k]);
          for (int c = 0; c < 3; ++c) n.zeta[a][b][c] += 0.5 * eps(c, m, k) * 0.5 * (R[a][b][m][k] + R[b][a][m][k]);
        }
  return n;
}

ScalarMatrix random_traceless(RandomSource& rng) {
  ScalarMatrix t;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != b || a < 2) t[a][b] = rng.field(2, 2);
  t[2][2] = -t[0][0] - t[1][1];
  return t;
}

bool same(const DefectDensities& a, const DefectDensities& b) {
  bool ok = is_zero(a.alpha - b.alpha) && is_zero(a.theta - b.theta);
  for (int k = 0; k < 3; ++k) ok = ok && is_zero(a.zeta[k] - b.zeta[k]);
  return ok;
}

const ClaimResult& find(const std::vector<ClaimResult>& rs, const std::string& id) {
  auto it = std::find_if(rs.begin(), rs.end(), [&](const ClaimResult& r) { return r.claim_id == id; });
  if (it == rs.end()) throw DomainError("missing claim " + id);
  return *it;
}

const std::set<std::string> kReported{"APPA-1", "APPA-2", "APPA-3", "APPA-5", "APPA-6", "APPA-7",
                                      "GT-ALPHA-ROUTES", "GT-DALPHA", "GT-DIVALPHA", "GT-DIVALPHA-PRINTED", "GT-DIVTHETA",
                                      "GT-DTHETA-A", "GT-DTHETA-B"};

}  // namespace

TEST(Constants, SolvedFromC) {
  TheoryParams p = solve_constants(1);
  EXPECT_EQ(p.A, Rational(1, 3));
  EXPECT_EQ(p.B, Rational(-1, 15));
  for (Rational c : {Rational(1), Rational(2, 3), Rational(-3)}) {
    TheoryParams q = solve_constants(c);
    EXPECT_EQ(3 * q.A * c, Rational(1));
    EXPECT_EQ(5 * q.A * c + 10 * q.B * c, Rational(1));
    EXPECT_EQ(q.C, c);
  }
  EXPECT_THROW(solve_constants(0), DomainError);
}

TEST(GtMaps, ThetaRoundTrip) {
  RandomSource rng(21);
  for (Rational c : {Rational(1), Rational(2, 3), Rational(-3)}) {
    TheoryParams p = solve_constants(c);
    for (int n = 0; n < 7; ++n) {
      Coframe frame = rng.coframe(1);
      ScalarMatrix th = random_traceless(rng);
      TensorForm q = gt_q_from_theta(th, p, frame);
      EXPECT_TRUE(is_zero(gt_theta(q, frame, p) - th)) << to_string(th);
      TensorForm qc = frame_components(q, frame);
      for (int a = 0; a < 3; ++a) {
        ScalarField second, weyl, axial;
        for (int b = 0; b < 3; ++b) {
          second += comp(qc, {a, b, b});
          weyl += comp(qc, {b, b, a});
          for (int m = 0; m < 3; ++m)
            if (int e = epsilon(a, b, m)) axial += e * th[b][m];
        }
        EXPECT_TRUE(is_zero(second));
        EXPECT_TRUE(is_zero(weyl - ScalarField(5 * c) * axial));
      }
    }
  }
}

TEST(GtMaps, TraceRejected) {
  ScalarMatrix th;
  th[0][0] = ScalarField(1);
  EXPECT_THROW(gt_q_from_theta(th, {}, Coframe::identity()), DomainError);
}

TEST(RcwMaps, ReconstructsCartanTensors) {
  RandomSource rng(31);
  for (int n = 0; n < 10; ++n) {
    Geometry g = random_geometry(rng, n % 2 ? FixtureFamily::MetricAffine : FixtureFamily::SemiMetric);
    DefectDensities d = rcw_densities(g);
    EXPECT_TRUE(same(d, rcw_densities_from_components(g)));
    RcwForms f = rcw_reconstruct(d, g.frame());
    TensorForm rl = with_valence(g.cartan().R, 0, 2);
    EXPECT_TRUE(is_zero(f.T - g.cartan().T));
    EXPECT_TRUE(is_zero(f.R_antisym - antisymmetric_part(rl)));
    EXPECT_TRUE(is_zero(f.R_sym - symmetric_part(rl)));
  }
}

TEST(RcwMaps, AgreesWithFiniteDifferenceOracle) {
  RandomSource rng(41);
  std::vector<Geometry> gs{fixture_g1(), fixture_g2(), fixture_g4()};
  for (int n = 0; n < 4; ++n) gs.emplace_back(Coframe::identity(), random_connection(rng, 2, false));
  const Vec p{0.3, -0.7, 0.4};
  for (const auto& g : gs) {
    DefectDensities d = rcw_densities(g);
    NumericDensities o = numeric_densities(g.omega(), p);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        EXPECT_NEAR(evaluate(d.alpha[a][b], p), o.alpha[a][b], 1e-6);
        EXPECT_NEAR(evaluate(d.theta[a][b], p), o.theta[a][b], 1e-6);
        for (int c = 0; c < 3; ++c) EXPECT_NEAR(evaluate(d.zeta[a][b][c], p), o.zeta[a][b][c], 1e-6);
      }
  }
}

TEST(GtMaps, TorsionRoundTrip) {
  RandomSource rng(51);
  const FixtureFamily fams[] = {FixtureFamily::GeneralTeleparallel, FixtureFamily::Cayley, FixtureFamily::Symmetric,
                                FixtureFamily::Conformal};
  for (int n = 0; n < 8; ++n) {
    Geometry g = random_geometry(rng, fams[n % 4]);
    for (Rational c : {Rational(1), Rational(-3)}) {
      TheoryParams p = solve_constants(c);
      DefectDensities d = gt_densities(g, p);
      EXPECT_TRUE(is_zero(gt_torsion_from_densities(d.alpha, d.theta, p, g.frame()) - g.cartan().T));
    }
  }
  for (const auto& name : fixture_names()) {
    Geometry g = named_fixture(name);
    DefectDensities d = gt_densities(g, {});
    EXPECT_TRUE(is_zero(gt_torsion_from_densities(d.alpha, d.theta, {}, g.frame()) - g.cartan().T)) << name;
  }
}

TEST(GtMaps, MetricTeleparallelReducesToDislocationsOnly) {
  RandomSource rng(61);
  for (int n = 0; n < 4; ++n) {
    Geometry g = random_geometry(rng, FixtureFamily::Cayley);
    DefectDensities gt = gt_densities(g, {});
    EXPECT_TRUE(is_zero(gt.theta));
    EXPECT_TRUE(is_zero(gt.alpha - rcw_densities(g).alpha));
    EXPECT_TRUE(is_zero(gt.alpha - gt_alpha_antisymmetric_route(g)));
  }
}

TEST(GtMaps, G1Values) {
  Geometry g = fixture_g1();
  DefectDensities rcw = rcw_densities(g);
  EXPECT_EQ(rcw.alpha[2][0], ScalarField(1));
  EXPECT_TRUE(is_zero(rcw.theta));
  NumericDensities o = numeric_densities(g.omega(), {0.1, 0.2, 0.3});
  EXPECT_NEAR(o.alpha[2][0], 1.0, 1e-9);
  for (Rational c : {Rational(1), Rational(2, 3), Rational(-3)}) {
    ScalarMatrix th = gt_theta(g, solve_constants(c));
    EXPECT_EQ(th[2][0], ScalarField(Rational(-1) / (6 * c)));
    EXPECT_TRUE(th[0][2].is_exactly_zero());
  }
  ScalarMatrix al = gt_alpha(g, {});
  EXPECT_EQ(al[2][0], ScalarField(Rational(1, 3)));
  EXPECT_EQ(al[0][2], ScalarField(Rational(1, 6)));
  ScalarMatrix other = gt_alpha_antisymmetric_route(g);
  EXPECT_EQ(other[2][0], ScalarField(Rational(1, 2)));
  EXPECT_TRUE(other[0][2].is_exactly_zero());
}

TEST(GtMaps, Admissibility) {
  Admissibility a0 = gt_admissibility(fixture_g0(), {});
  EXPECT_TRUE(a0.p_zero && a0.q_in_image && a0.r_zero);
  Admissibility a1 = gt_admissibility(fixture_g1(), {});
  EXPECT_FALSE(a1.p_zero);
  EXPECT_FALSE(a1.q_in_image);
  EXPECT_TRUE(a1.r_zero);
  Admissibility a2 = gt_admissibility(fixture_g2(), {});
  EXPECT_TRUE(a2.p_zero && a2.q_in_image && a2.r_zero);
  RandomSource rng(71);
  Admissibility am = gt_admissibility(random_geometry(rng, FixtureFamily::MetricAffine), {});
  EXPECT_FALSE(am.r_zero);
}

TEST(Claims, RegistryOnNamedFixtures) {
  for (const auto& name : fixture_names()) {
    auto rs = run_claims(named_fixture(name), {"all"});
    EXPECT_TRUE(std::is_sorted(rs.begin(), rs.end(),
                               [](const ClaimResult& a, const ClaimResult& b) { return a.claim_id < b.claim_id; }));
    EXPECT_TRUE(passed(rs)) << name;
    for (const auto& r : rs) {
      if (r.status == ClaimStatus::Report) EXPECT_TRUE(kReported.count(r.claim_id)) << name << " " << r.claim_id;
      if (r.claim_id.find("ORACLE") != std::string::npos) EXPECT_EQ(r.status, ClaimStatus::Pass) << format_claim(r);
    }
    // every teleparallel fixture has R = 0 so the GT claims run
    EXPECT_NE(find(rs, "GT-DIVTHETA").status, ClaimStatus::Skip);
  }
}

TEST(Claims, ContinuityHoldsOnRandomGeometries) {
  RandomSource rng(81);
  const FixtureFamily fams[] = {FixtureFamily::MetricAffine, FixtureFamily::RiemannCartan, FixtureFamily::SemiMetric};
  for (int n = 0; n < 9; ++n) {
    Geometry g = random_geometry(rng, fams[n % 3]);
    auto rs = run_claims(g, {"rcw-continuity", "semi-metric", "metric", "bianchi"});
    for (const auto& r : rs) EXPECT_NE(r.status, ClaimStatus::Fail) << format_claim(r);
    for (const char* id : {"CC1", "CC2", "CC3", "CC4", "B1", "B2", "B3"}) EXPECT_EQ(find(rs, id).status, ClaimStatus::Pass);
    bool semi = n % 3 != 0;
    EXPECT_EQ(find(rs, "SM1").status, semi ? ClaimStatus::Pass : ClaimStatus::Skip);
    EXPECT_EQ(find(rs, "MC2").status, n % 3 == 1 ? ClaimStatus::Pass : ClaimStatus::Skip);
  }
}

TEST(Claims, ComponentOraclesAndEpsilonIdentity) {
  RandomSource rng(91);
  for (int n = 0; n < 3; ++n) {
    auto rs = run_claims(random_geometry(rng, FixtureFamily::MetricAffine), {"component"});
    for (const auto& r : rs) EXPECT_NE(r.status, ClaimStatus::Fail) << format_claim(r);
    EXPECT_EQ(find(rs, "APPA-4").status, ClaimStatus::Pass);
    for (const char* id : {"APPA-ORACLE-Q", "APPA-ORACLE-T", "APPA-ORACLE-R", "APPA-ORACLE-HODGE"})
      EXPECT_EQ(find(rs, id).status, ClaimStatus::Pass);
  }
}

TEST(Claims, OracleMapCoversClaims) {
  for (const char* id : {"CC1", "CC4", "SM3", "MC1", "APPA-7"}) EXPECT_FALSE(oracle_claims(id).empty()) << id;
  EXPECT_TRUE(oracle_claims("B1").empty());
}

TEST(Claims, UnknownSuiteRejected) {
  EXPECT_THROW(run_claims(fixture_g0(), {"nope"}), DomainError);
  EXPECT_EQ(claim_suites().size(), 7u);
}

TEST(Claims, SkipsOutsideGeometryClass) {
  RandomSource rng(101);
  auto rs = run_claims(random_geometry(rng, FixtureFamily::MetricAffine), {"gt", "metric", "semi-metric", "linear"});
  for (const auto& r : rs) EXPECT_EQ(r.status, ClaimStatus::Skip) << r.claim_id;
}

TEST(Claims, DivergenceOfDislocationsOnMetricTeleparallel) {
  RandomSource rng(111);
  for (int n = 0; n < 3; ++n) {
    auto rs = run_claims(random_geometry(rng, FixtureFamily::Cayley), {"gt"});
    EXPECT_EQ(find(rs, "GT-DIVALPHA").status, ClaimStatus::Pass);
    EXPECT_EQ(find(rs, "GT-DIVTHETA").status, ClaimStatus::Pass);
    EXPECT_EQ(find(rs, "GT-ALPHA-ROUTES").status, ClaimStatus::Pass);
  }
}

TEST(LinearLimit, QuadraticConvergence) {
  RandomSource rng(121);
  for (int n = 0; n < 3; ++n) {
    Geometry g = random_geometry(rng, FixtureFamily::FlatRiemannCartan);
    LinearResiduals big = linearized_continuity(g, Rational(1, 16));
    LinearResiduals small = linearized_continuity(g, Rational(1, 32));
    if (big.res1 > 1e-10) EXPECT_NEAR(big.res1 / small.res1, 4.0, 0.5);
    if (big.res2 > 1e-10) EXPECT_NEAR(big.res2 / small.res2, 4.0, 0.5);
    auto rs = run_claims(g, {"linear"});
    EXPECT_EQ(find(rs, "LIN1").status, ClaimStatus::Pass) << find(rs, "LIN1").note;
    EXPECT_EQ(find(rs, "LIN2").status, ClaimStatus::Pass) << find(rs, "LIN2").note;
  }
}

TEST(LinearLimit, ExactOnConstantTorsion) {
  LinearResiduals r = linearized_continuity(fixture_linear_cartesian(), Rational(1, 16));
  EXPECT_EQ(r.res1, 0.0);
  EXPECT_EQ(r.res2, 0.0);
}
