// Acceptance gate: one line per criterion, sub-check detail under failures.
// Exit status is 0 when every failing sub-check is on the documented
// unattainable list below, 1 otherwise.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "defectforms/defects.hpp"
#include "defectforms/fixtures.hpp"
#include "defectforms/irreducible.hpp"
#include "defectforms/random.hpp"
#include "defectforms/transport.hpp"
#include "runner.hpp"

using namespace defectforms;

namespace {

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

using Checks = std::vector<Check>;

// Sub-checks that cannot pass as stated; they are still evaluated and printed.
const std::set<std::string> kUnattainable{"2:printed-sign-odd-degree", "7:printed-nonmetricity-count"};

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// --- shared random geometries -------------------------------------------

const std::vector<Geometry>& metric_affine_20() {
  static const std::vector<Geometry> gs = [] {
    RandomSource rng(1001);
    std::vector<Geometry> out;
    for (int n = 0; n < 20; ++n) out.emplace_back(rng.coframe(1, n % 4 == 0), random_connection(rng, 2, false));
    return out;
  }();
  return gs;
}

// --- 1 --------------------------------------------------------------------

int parity(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  int inv = (a > b) + (a > c) + (b > c);
  return inv % 2 ? -1 : 1;
}

int kd(int a, int b) { return a == b; }

Checks c1() {
  bool values = true, full = true, one = true, two = true, det = true;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) values = values && epsilon(a, b, c) == parity(a, b, c);
  int s = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) s += epsilon(a, b, c) * epsilon(a, b, c);
  full = s == 6;
  for (int c = 0; c < 3; ++c)
    for (int m = 0; m < 3; ++m) {
      int t = 0;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) t += epsilon(a, b, c) * epsilon(a, b, m);
      one = one && t == 2 * delta(m, c);
    }
  for (int b = 0; b < 3; ++b)
    for (int c = 0; c < 3; ++c)
      for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m) {
          int t = 0;
          for (int a = 0; a < 3; ++a) t += epsilon(a, b, c) * epsilon(a, l, m);
          two = two && t == delta(l, b) * delta(m, c) - delta(l, c) * delta(m, b);
        }
  // determinant of deltas by the Leibniz sum over permutations
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l)
            for (int m = 0; m < 3; ++m) {
              const int row[3] = {a, b, c}, col[3] = {k, l, m};
              int dv = 0;
              for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 3; ++q)
                  for (int r = 0; r < 3; ++r)
                    if (int sg = parity(p, q, r)) dv += sg * kd(row[0], col[p]) * kd(row[1], col[q]) * kd(row[2], col[r]);
              det = det && epsilon(a, b, c) * epsilon(k, l, m) == dv;
            }
  return {{"values", values, ""},
          {"full-contraction", full, ""},
          {"double-contraction", one, ""},
          {"single-contraction", two, ""},
          {"determinant", det, ""}};
}

// --- 2 --------------------------------------------------------------------

Checks c2() {
  RandomSource rng(2002);
  bool sym = true, printed = true, iota_star = true, euler = true, d1 = true, d2 = true, d3 = true, d4 = true, exact = true;
  std::string printed_detail;
  int exact_cases = 0;
  for (int n = 0; n < 20; ++n) {
    Coframe fr = rng.coframe(1, n % 3 == 0);
    int p = n % 4;
    Form l = rng.form(p, 2, 3), g = rng.form(p, 2, 3);
    Form lhs = wedge(l, hodge(g, fr)), rhs = wedge(g, hodge(l, fr));
    sym = sym && is_zero(lhs - rhs);
    bool pr = is_zero(lhs - ((p * p) % 2 ? -rhs : rhs));
    if (!pr && printed) printed_detail = "fails at degree " + std::to_string(p);
    printed = printed && pr;
    if (p < 3)
      for (int a = 0; a < 3; ++a) iota_star = iota_star && is_zero(interior(fr.X(a), hodge(l, fr)) - hodge(wedge(l, fr.e(a)), fr));
    if (p > 0) {
      Form s(p);
      for (int a = 0; a < 3; ++a) s += wedge(fr.e(a), interior(fr.X(a), l));
      euler = euler && is_zero(s - ScalarField(p) * l);
    }
    if (n < 3) {
      // low-degree cases decided by full expansion
      exact = exact && (lhs - rhs).is_exactly_zero();
      if (p > 0) {
        Form e(p);
        for (int a = 0; a < 3; ++a) e += wedge(fr.e(a), interior(fr.X(a), l));
        exact = exact && (e - ScalarField(p) * l).is_exactly_zero();
      }
      ++exact_cases;
    }
    Form vol = hodge(Form(ScalarField(1)), fr);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        d1 = d1 && is_zero(wedge(fr.e(a), hodge(fr.e(b), fr)) - ScalarField(delta(a, b)) * vol);
        for (int c = 0; c < 3; ++c) {
          Form ebc = wedge(fr.e(b), fr.e(c));
          d2 = d2 && is_zero(wedge(fr.e(a), hodge(ebc, fr)) + ScalarField(delta(a, b)) * hodge(fr.e(c), fr) -
                             ScalarField(delta(a, c)) * hodge(fr.e(b), fr));
          d3 = d3 && is_zero(wedge(fr.e(a), ebc) - ScalarField(epsilon(a, b, c)) * vol);
          d4 = d4 && is_zero(wedge(hodge(fr.e(a), fr), hodge(ebc, fr)) - ScalarField(epsilon(a, b, c)) * vol);
        }
      }
  }
  return {{"symmetric-pairing", sym, ""},
          {"printed-sign-odd-degree", printed, printed_detail},
          {"interior-of-dual", iota_star, ""},
          {"degree-count", euler, ""},
          {"frame-dual-pairing", d1, ""},
          {"frame-dual-two-form", d2, ""},
          {"triple-wedge", d3, ""},
          {"dual-wedge-dual", d4, ""},
          {"full-expansion-" + std::to_string(exact_cases) + "-cases", exact, ""}};
}

// --- 3, 4, 5 ------------------------------------------------------------

Checks c3() {
  bool dd = true, b1 = true, b2 = true, b3 = true;
  for (const Geometry& g : metric_affine_20()) {
    dd = dd && d(d(coframe_form(g.frame()))).is_exactly_zero() && d(d(g.omega())).is_exactly_zero();
    BianchiResiduals r = bianchi_residuals(g);
    b1 = b1 && is_zero(r.res1);
    b2 = b2 && is_zero(r.res2);
    b3 = b3 && is_zero(r.res3);
  }
  return {{"d-squared", dd, ""}, {"first-bianchi", b1, ""}, {"second-bianchi", b2, ""}, {"third-bianchi", b3, ""}};
}

Checks c4() {
  bool re = true, lc = true, k = true, st = true, lq = true;
  for (const Geometry& g : metric_affine_20()) {
    const ConnectionSplit& s = g.split();
    const Coframe& fr = g.frame();
    re = re && is_zero(with_valence(s.levi_civita, 0, 2) + s.defect - with_valence(g.omega(), 0, 2));
    lc = lc && is_zero(symmetric_part(with_valence(s.levi_civita, 0, 2)));
    k = k && is_zero(symmetric_part(s.contortion));
    TensorForm de = d(coframe_form(fr));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) de.at({a}) += wedge(s.levi_civita.at({a, b}), fr.e(b));
    st = st && is_zero(de);
    lq = lq && is_zero(symmetric_part(s.defect) - g.cartan().Q);
  }
  return {{"reassembly", re, ""},
          {"levi-civita-antisymmetric", lc, ""},
          {"contortion-antisymmetric", k, ""},
          {"torsion-free-structure", st, ""},
          {"defect-symmetric-part", lq, ""}};
}

Checks c5() {
  bool one = true, two = true, sym = true;
  for (const Geometry& g : metric_affine_20()) {
    CurvatureSplit cs = curvature_split(g);
    one = one && is_zero(cs.riemannian + cs.nonriemannian - g.cartan().R);
    two = two && is_zero(cs.antisym + cs.sym - with_valence(g.cartan().R, 0, 2));
  }
  RandomSource rng(5005);
  for (int n = 0; n < 5; ++n) {
    Geometry g = random_geometry(rng, n % 2 ? FixtureFamily::RiemannCartan : FixtureFamily::Cayley);
    sym = sym && is_zero(g.cartan().Q) && is_zero(curvature_split(g).sym);
  }
  return {{"riemannian-split", one, ""}, {"symmetry-split", two, ""}, {"metric-symmetric-curvature", sym, ""}};
}

// --- 6 --------------------------------------------------------------------

bool trace_free_q_zero(const Geometry& g) {
  const TensorForm& q = g.cartan().Q;
  Form tr(1);
  for (int a = 0; a < 3; ++a) tr += q.at({a, a});
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (!is_zero(q.at({a, b}) - (a == b ? ScalarField(Rational(1, 3)) * tr : Form(1)))) return false;
  return true;
}

Checks c6() {
  RandomSource rng(6006);
  bool gauge = true, cay = true, sym = true, conf = true;
  for (int n = 0; n < 10; ++n) {
    Geometry g = random_geometry(rng, FixtureFamily::GeneralTeleparallel);
    gauge = gauge && is_zero(g.cartan().R);
    Geometry c = random_geometry(rng, FixtureFamily::Cayley);
    cay = cay && is_zero(c.cartan().R) && is_zero(c.cartan().Q);
    Geometry s = random_geometry(rng, FixtureFamily::Symmetric);
    sym = sym && is_zero(s.cartan().R) && is_zero(s.cartan().T);
    Geometry f = random_geometry(rng, FixtureFamily::Conformal);
    conf = conf && is_zero(f.cartan().R) && trace_free_q_zero(f);
  }
  return {{"gauge", gauge, ""}, {"cayley", cay, ""}, {"symmetric-coframe", sym, ""}, {"conformal", conf, ""}};
}

// --- 7 --------------------------------------------------------------------

Checks c7() {
  bool tc = true, qc = true;
  std::string bad;
  for (const Geometry& g : metric_affine_20()) {
    for (const auto& r : certify(torsion_pieces(g), g.cartan().T, g.frame()))
      if (r.status != ClaimStatus::Pass) tc = false, bad = r.claim_id;
    for (const auto& r : certify(nonmetricity_pieces(g), g.cartan().Q, g.frame()))
      if (r.status != ClaimStatus::Pass) qc = false, bad = r.claim_id;
  }
  RandomSource rng(7007);
  Coframe fr = rng.coframe(1, true);
  Point p{Rational(4, 9), Rational(-3, 7), Rational(2, 5)};
  std::vector<int> tr = torsion_piece_ranks(fr, p), qr = nonmetricity_piece_ranks(fr, p);
  const std::vector<int> printed{3, 9, 3, 3};
  return {{"torsion-certificates", tc, bad},
          {"nonmetricity-certificates", qc, bad},
          {"torsion-count", tr == std::vector<int>{5, 3, 1}, "ranks " + join(tr)},
          {"printed-nonmetricity-count", qr == printed, "ranks " + join(qr) + ", printed " + join(printed)}};
}

// --- 8 --------------------------------------------------------------------

ScalarMatrix random_traceless(RandomSource& rng) {
  ScalarMatrix t;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != b || a < 2) t[a][b] = rng.field(2, 2);
  t[2][2] = -t[0][0] - t[1][1];
  return t;
}

Checks c8() {
  bool consts = true, rt = true, p0 = true, weyl = true;
  const Rational cs[] = {Rational(1), Rational(2, 3), Rational(-3)};
  for (const Rational& c : cs) {
    TheoryParams t = solve_constants(c);
    consts = consts && t.A == Rational(1) / (3 * c) && t.B == Rational(-1) / (15 * c) && t.K == c && t.C == c;
  }
  RandomSource rng(8008);
  for (int n = 0; n < 20; ++n) {
    Rational c = cs[n % 3];
    TheoryParams t = solve_constants(c);
    Coframe fr = rng.coframe(1, n % 5 == 0);
    ScalarMatrix th = random_traceless(rng);
    TensorForm q = gt_q_from_theta(th, t, fr);
    rt = rt && is_zero(gt_theta(q, fr, t) - th);
    TensorForm qc = frame_components(q, fr);
    for (int a = 0; a < 3; ++a) {
      ScalarField second, w, axial;
      for (int b = 0; b < 3; ++b) {
        second += comp(qc, {a, b, b});
        w += comp(qc, {b, b, a});
        for (int m = 0; m < 3; ++m)
          if (int e = epsilon(a, b, m)) axial += e * th[b][m];
      }
      p0 = p0 && is_zero(second);
      weyl = weyl && is_zero(w - ScalarField(5 * c) * axial);
    }
  }
  return {{"constants", consts, ""}, {"theta-round-trip", rt, ""}, {"second-trace-zero", p0, ""}, {"weyl-trace", weyl, ""}};
}

// --- 9 --------------------------------------------------------------------

Checks c9() {
  RandomSource rng(9009);
  bool rcw = true, gt = true, red = true;
  for (int n = 0; n < 10; ++n) {
    Geometry g = random_geometry(rng, FixtureFamily::MetricAffine);
    RcwForms f = rcw_reconstruct(rcw_densities(g), g.frame());
    TensorForm rl = with_valence(g.cartan().R, 0, 2);
    rcw = rcw && is_zero(f.T - g.cartan().T) && is_zero(f.R_antisym - antisymmetric_part(rl)) &&
          is_zero(f.R_sym - symmetric_part(rl));
  }
  for (int n = 0; n < 10; ++n) {
    Geometry g = random_geometry(rng, FixtureFamily::GeneralTeleparallel);
    TheoryParams p = solve_constants(n % 2 ? Rational(2, 3) : Rational(1));
    DefectDensities d = gt_densities(g, p);
    gt = gt && is_zero(gt_torsion_from_densities(d.alpha, d.theta, p, g.frame()) - g.cartan().T);
    // theta is recovered from the Q it generates
    gt = gt && is_zero(gt_theta(gt_q_from_theta(d.theta, p, g.frame()), g.frame(), p) - d.theta);
  }
  for (int n = 0; n < 5; ++n) {
    Geometry g = random_geometry(rng, FixtureFamily::Cayley);
    red = red && is_zero(gt_alpha(g, {}) - rcw_densities(g).alpha);
  }
  return {{"rcw-round-trip", rcw, ""}, {"gt-round-trip", gt, ""}, {"metric-reduction", red, ""}};
}

// --- 10 -------------------------------------------------------------------

using Vec = std::array<double, 3>;

// Index-loop oracle for an identity coframe: T, Q from the coordinate
// coefficients of omega and their central differences, then the density
// contractions in doubles.
struct Oracle {
  double alpha_rcw[3][3]{}, theta_gt[3][3]{}, alpha_gt[3][3]{};
};

Oracle g1_oracle(const Geometry& g, double c, const Vec& p) {
  double o[3][3][3];
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int i = 0; i < 3; ++i) o[a][b][i] = evaluate(g.omega().at({a, b}).at(1u << i), p);
  double T[3][3][3], Q[3][3][3], w[3]{};
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        T[a][i][j] = o[a][j][i] - o[a][i][j];
        Q[a][i][j] = 0.5 * (o[a][i][j] + o[i][a][j]);
      }
  for (int cc = 0; cc < 3; ++cc)
    for (int a = 0; a < 3; ++a) w[cc] += Q[a][a][cc];
  const double A = 1 / (3 * c), B = -1 / (15 * c);
  Oracle r;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int m = 0; m < 3; ++m)
        for (int k = 0; k < 3; ++k) {
          r.alpha_rcw[a][b] += 0.5 * parity(a, m, k) * T[b][m][k];
          r.theta_gt[a][b] += A * parity(a, m, k) * Q[b][m][k];
        }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int m = 0; m < 3; ++m) r.theta_gt[a][b] += B * parity(a, b, m) * w[m];
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) r.alpha_gt[a][b] = r.alpha_rcw[a][b] + 4 * c * r.theta_gt[a][b] - c * r.theta_gt[b][a];
  return r;
}

Checks c10() {
  Geometry g = fixture_g1();
  const Vec pt{0.3, -0.7, 1.1};
  Oracle o = g1_oracle(g, 1.0, pt);
  auto near = [](double a, double b) { return std::abs(a - b) <= 1e-12; };
  bool oracle = near(o.alpha_rcw[2][0], 1) && near(o.theta_gt[2][0], -1.0 / 6) && near(o.alpha_gt[2][0], 1.0 / 3) &&
                near(o.alpha_gt[0][2], 1.0 / 6);
  for (double c : {2.0 / 3, -3.0}) oracle = oracle && near(g1_oracle(g, c, pt).theta_gt[2][0], -1 / (6 * c));

  bool t = g.cartan().T.at({0}) == wedge(Form::dx(0), Form::dx(1));
  for (int a = 1; a < 3; ++a) t = t && g.cartan().T.at({a}).is_exactly_zero();
  bool q = g.cartan().Q.at({0, 1}) == ScalarField(Rational(1, 2)) * Form::dx(0);
  bool rcw = rcw_densities(g).alpha[2][0] == ScalarField(1);
  bool th = true;
  for (Rational c : {Rational(1), Rational(2, 3), Rational(-3)})
    th = th && gt_theta(g, solve_constants(c))[2][0] == ScalarField(Rational(-1) / (6 * c));
  ScalarMatrix al = gt_alpha(g, {});
  bool a = al[2][0] == ScalarField(Rational(1, 3)) && al[0][2] == ScalarField(Rational(1, 6));
  return {{"index-loop-oracle", oracle, ""},
          {"torsion", t, ""},
          {"nonmetricity", q, ""},
          {"rcw-alpha", rcw, ""},
          {"gt-theta", th, ""},
          {"gt-alpha", a, ""}};
}

// --- 11 -------------------------------------------------------------------

std::map<std::string, ClaimResult> by_id(const std::vector<ClaimResult>& rs) {
  std::map<std::string, ClaimResult> m;
  for (const auto& r : rs) m[r.claim_id] = r;
  return m;
}

Checks c11() {
  RandomSource rng(11011);
  std::vector<Geometry> fx;
  for (const auto& n : fixture_names()) fx.push_back(named_fixture(n));
  for (auto fam : {FixtureFamily::MetricAffine, FixtureFamily::Conformal, FixtureFamily::Conformal,
                   FixtureFamily::Conformal, FixtureFamily::SemiMetric, FixtureFamily::Cayley,
                   FixtureFamily::RiemannCartan})
    fx.push_back(random_geometry(rng, fam));
  const std::vector<std::string> ids{"B1",  "B2",  "B3",  "CC1", "CC2",    "CC3",    "CC4",    "SM1",    "SM2",
                                     "SM3", "SM4", "MC1", "MC2", "APPA-1", "APPA-2", "APPA-3", "APPA-4", "APPA-5",
                                     "APPA-6", "APPA-7"};
  std::map<std::string, int> evaluated, reported;
  bool ok = true;
  std::string detail;
  for (const Geometry& g : fx) {
    auto m = by_id(run_claims(g, {"bianchi", "rcw-continuity", "semi-metric", "metric", "component"}));
    for (const auto& id : ids) {
      const ClaimResult& r = m.at(id);
      if (r.status == ClaimStatus::Skip) continue;
      ++evaluated[id];
      if (r.status == ClaimStatus::Pass) continue;
      ++reported[id];
      bool localized = !r.discrepancy.empty();
      bool oracles = !oracle_claims(id).empty();
      for (const auto& o : oracle_claims(id)) oracles = oracles && m.at(o).status == ClaimStatus::Pass;
      if (!localized || !oracles) {
        ok = false;
        detail += id + (localized ? " oracle failed; " : " no term localization; ");
      }
    }
  }
  bool coverage = true;
  std::string cov, rep;
  for (const auto& id : ids)
    if (evaluated[id] < 3) coverage = false, cov += id + "=" + std::to_string(evaluated[id]) + " ";
  for (const auto& [id, n] : reported) rep += id + "x" + std::to_string(n) + " ";
  return {{"three-fixtures-each", coverage, cov},
          {"non-pass-localized-with-passing-oracle", ok, detail},
          {"non-pass-list", true, rep}};
}

// --- 12 -------------------------------------------------------------------

Checks c12() {
  RandomSource rng(12012);
  std::vector<Geometry> metric{fixture_g0(), fixture_g2()};
  for (int n = 0; n < 3; ++n) metric.push_back(random_geometry(rng, FixtureFamily::Cayley));
  bool spec = true;
  for (const Geometry& g : metric) {
    auto m = by_id(run_claims(g, {"gt"}));
    spec = spec && m.at("GT-DIVTHETA").status == ClaimStatus::Pass && m.at("GT-DIVALPHA").status == ClaimStatus::Pass;
  }
  std::vector<Geometry> generic{fixture_g1(), fixture_g3(), fixture_g4()};
  for (int n = 0; n < 3; ++n) generic.push_back(random_geometry(rng, FixtureFamily::GeneralTeleparallel));
  bool stable = true, some_report = false, no_fail = true;
  for (const Geometry& g : generic) {
    auto run = [&] {
      std::string s;
      for (const auto& r : run_claims(g, {"gt"})) {
        s += format_claim(r);
        some_report = some_report || r.status == ClaimStatus::Report;
        no_fail = no_fail && r.status != ClaimStatus::Fail;
      }
      return s;
    };
    stable = stable && run() == run();
  }
  ZeroTestConfig other;
  other.seed = 4242;
  stable = stable && [&] {
    std::string a, b;
    for (const auto& r : run_claims(fixture_g4(), {"gt"})) a += format_claim(r);
    for (const auto& r : run_claims(fixture_g4(), {"gt"}, {}, other)) b += format_claim(r);
    return a == b;
  }();
  return {{"specialization-pass-on-metric", spec, ""},
          {"generic-reports-present", some_report, ""},
          {"generic-no-fail", no_fail, ""},
          {"stable-term-diffs", stable, ""}};
}

// --- 13 -------------------------------------------------------------------

Checks c13() {
  RandomSource rng(13013);
  bool ratio = true;
  std::string detail;
  for (int n = 0; n < 5; ++n) {
    Geometry g = random_geometry(rng, FixtureFamily::FlatRiemannCartan);
    LinearResiduals a = linearized_continuity(g, Rational(1, 16)), b = linearized_continuity(g, Rational(1, 32));
    for (auto [x, y] : {std::pair{a.res1, b.res1}, std::pair{a.res2, b.res2}}) {
      if (x <= 1e-10 && y <= 1e-10) continue;
      double r = x / y;
      detail += num(r) + " ";
      ratio = ratio && r >= 3 && r <= 5;
    }
  }
  LinearResiduals e = linearized_continuity(fixture_linear_cartesian(), Rational(1, 16));
  return {{"two-scale-ratio", ratio, detail},
          {"cartesian-exact", e.res1 <= 1e-10 && e.res2 <= 1e-10, num(e.res1) + " " + num(e.res2)}};
}

// --- 14 -------------------------------------------------------------------

PiecewiseCurve xz_square() { return PiecewiseCurve::polygon({{0, 0, 0}, {1, 0, 0}, {1, 0, 1}, {0, 0, 1}}, true); }

Checks c14() {
  RandomSource rng(14014);
  double stokes = 0;
  for (int n = 0; n < 20; ++n) {
    Form w = rng.form(1, 3, 4);
    stokes = std::max(stokes, std::abs(line_integral(w, unit_square_loop()) - surface_integral(d(w), unit_square_patch())));
  }
  MultiPoly t = MultiPoly::variable(0);
  PiecewiseCurve arc({CurveSegment{t, t * t, t.scaled(2)}}, false);
  NumericConfig coarse;
  coarse.ode_steps = 16;
  bool order = true;
  std::string od;
  for (const Geometry& g : {fixture_g2(), fixture_g4()}) {
    Convergence c = transport_convergence(g, arc, {1, 0.5, -0.25}, coarse);
    od += num(c.ratio) + " ";
    order = order && std::abs(c.ratio - 16) <= 16 * 0.3;
  }
  FrameVector u{1, 0.5, 0}, v{0.25, 1, -1};
  double tele = 0;
  for (const auto& name : fixture_names())
    for (const auto& loop : {unit_square_loop(), xz_square()})
      tele = std::max(tele, std::abs(product_drift(named_fixture(name), loop, u, v).drift));
  NumericConfig fine;
  fine.ode_steps = 4096;
  DriftResult g1 = product_drift(fixture_g1(), unit_square_loop(), u, v, fine);
  double g1gap = std::abs(g1.drift - g1.line_prediction);
  // constant densities over the unit square: B^a = flux of alpha minus the moment term, Omega = flux of theta
  DefectDensities dd;
  dd.alpha[2][0] = ScalarField(Rational(1, 2));
  for (int q = 0; q < 3; ++q) dd.theta[2][q] = ScalarField(Rational(3, 4));
  BurgersFrank bf = burgers_frank(fixture_g0(), dd, unit_square_patch());
  const double bx = 0.5 - 0.375, by = 0.375;
  double flux = std::max({std::abs(bf.burgers[0] - bx), std::abs(bf.burgers[1] - by), std::abs(bf.burgers[2]),
                          std::abs(bf.frank[0] - 0.75), std::abs(bf.frank[1] - 0.75), std::abs(bf.frank[2] - 0.75)});
  return {{"stokes", stokes <= 1e-8, num(stokes)},
          {"rk4-order", order, od},
          {"teleparallel-drift", tele <= 1e-8, num(tele)},
          {"g1-drift-vs-line", g1gap <= 1e-6, num(g1gap)},
          {"burgers-frank", flux <= 1e-12, num(flux)}};
}

// --- 15 -------------------------------------------------------------------

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int exit_status(const std::string& args) {
  int rc = std::system((std::string(DEFECTFORMS_CLI_EXE) + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string capture(const std::string& args) {
  std::string out;
  FILE* p = popen((std::string(DEFECTFORMS_CLI_EXE) + " " + args + " 2>/dev/null").c_str(), "r");
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  pclose(p);
  return out;
}

Checks c15() {
  const std::string dir = DEFECTFORMS_SCENARIO_DIR;
  bool ident = true, round = true, codes = true;
  for (const auto& name : fixture_names()) {
    const std::string f = dir + "/" + name + ".scn";
    for (const char* extra : {" --json", " --seed 11 --points 6"}) {
      std::string a = capture("all " + f + extra);
      ident = ident && !a.empty() && a == capture("all " + f + extra);
    }
    cli::Scenario s = cli::parse_scenario(slurp(f));
    std::string text = cli::serialize(s);
    round = round && cli::parse_scenario(text) == s && cli::serialize(cli::parse_scenario(text)) == text;
    codes = codes && exit_status("all " + f) == 0;
  }
  codes = codes && exit_status("continuity " + dir + "/g2.scn") == 0 &&
          exit_status("continuity " + dir + "/g1.scn --strict-report") == 1 &&
          exit_status("identities " + dir + "/absent.scn") == 2 && exit_status("bogus " + dir + "/g1.scn") == 2;
  return {{"byte-identical", ident, ""}, {"round-trip", round, ""}, {"exit-codes", codes, ""}};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Checks()>>> criteria{
      {"epsilon algebra", c1},
      {"Hodge and interior identities", c2},
      {"d squared and Bianchi identities", c3},
      {"connection decomposition", c4},
      {"curvature splits", c5},
      {"generator flatness", c6},
      {"irreducible decompositions", c7},
      {"teleparallel constants and disclination maps", c8},
      {"defect map round trips", c9},
      {"shear fixture regressions", c10},
      {"claim registry", c11},
      {"teleparallel divergence claims", c12},
      {"linear limit", c13},
      {"numerics", c14},
      {"command line", c15},
  };
  int pass = 0, fail = 0, unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    Checks cs;
    std::string error;
    try {
      cs = criteria[i].second();
    } catch (const std::exception& e) {
      error = e.what();
      cs.push_back({"exception", false, error});
    }
    bool ok = std::all_of(cs.begin(), cs.end(), [](const Check& c) { return c.ok; });
    (ok ? pass : fail)++;
    std::printf("CRITERION %2d %s  %s\n", n, ok ? "PASS" : "FAIL", criteria[i].first);
    for (const auto& c : cs) {
      if (c.ok) continue;
      bool known = kUnattainable.count(std::to_string(n) + ":" + c.name) > 0;
      if (!known) ++unexpected;
      std::printf("    %s %s%s%s\n", known ? "unattainable" : "FAIL", c.name.c_str(), c.detail.empty() ? "" : ": ",
                  c.detail.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("GATE PASS=%d FAIL=%d UNEXPECTED=%d\n", pass, fail, unexpected);
  return unexpected == 0 ? 0 : 1;
}
