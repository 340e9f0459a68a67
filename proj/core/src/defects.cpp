#include "defectforms/defects.hpp"

#include "defectforms/errors.hpp"

namespace defectforms {
namespace {

TensorForm lowered(const TensorForm& a) { return with_valence(a, 0, a.rank()); }

}  // namespace

TheoryParams solve_constants(const Rational& c) {
  if (c.is_zero()) throw DomainError("the unit conversion constant C must be nonzero");
  // 3AC = 1, 5AC + 10BC = 1 by Cramer's rule
  Rational a11 = 3 * c, a12 = 0, a21 = 5 * c, a22 = 10 * c;
  Rational det = a11 * a22 - a12 * a21;
  TheoryParams p;
  p.C = c;
  p.A = (a22 - a12) / det;
  p.B = (a11 - a21) / det;
  p.K = c;
  return p;
}

Traces traces(const Geometry& geom) {
  TensorForm q = frame_components(geom.cartan().Q, geom.frame());
  Traces t;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      t.weyl[a] += comp(q, {b, b, a});
      t.second[a] += comp(q, {a, b, b});
    }
  return t;
}

DefectDensities rcw_densities(const Geometry& geom) {
  const Coframe& fr = geom.frame();
  const CartanTensors& c = geom.cartan();
  TensorForm rl = lowered(c.R);
  TensorForm ra = antisymmetric_part(rl), rs = symmetric_part(rl);
  DefectDensities d;
  for (int a = 0; a < 3; ++a) {
    Form ea = fr.e(a);
    for (int b = 0; b < 3; ++b) {
      d.alpha[a][b] = hodge(wedge(ea, c.T.at({b})), fr)[0];
      Form s(3);
      for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n)
          if (int e = epsilon(b, m, n)) s += ScalarField(e) * wedge(ea, ra.at({m, n}));
      d.theta[a][b] = ScalarField(Rational(1, 2)) * hodge(s, fr)[0];
      for (int k = 0; k < 3; ++k) d.zeta[a][b][k] = hodge(wedge(rs.at({a, b}), fr.e(k)), fr)[0];
    }
  }
  return d;
}

DefectDensities rcw_densities_from_components(const Geometry& geom) {
  const Coframe& fr = geom.frame();
  TensorForm t = frame_components(geom.cartan().T, fr);  // T^a_bc
  TensorForm r = frame_components(geom.cartan().R, fr);  // R^a_bcd
  DefectDensities d;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n) {
          int e1 = epsilon(a, m, n);
          if (e1) d.alpha[a][b] += ScalarField(Rational(e1, 2)) * comp(t, {b, m, n});
          for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) {
              int e2 = e1 * epsilon(b, k, l);
              if (!e2) continue;
              ScalarField anti = (comp(r, {k, l, m, n}) - comp(r, {l, k, m, n})) * Rational(1, 2);
              d.theta[a][b] += ScalarField(Rational(e2, 4)) * anti;
            }
        }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l)
            if (int e = epsilon(c, k, l)) {
              ScalarField sym = (comp(r, {a, b, k, l}) + comp(r, {b, a, k, l})) * Rational(1, 2);
              d.zeta[a][b][c] += ScalarField(Rational(e, 2)) * sym;
            }
  return d;
}

RcwForms rcw_reconstruct(const DefectDensities& d, const Coframe& frame) {
  FrameDuals du(frame);
  RcwForms r{TensorForm(2, 1, 0), TensorForm(2, 0, 2), TensorForm(2, 0, 2)};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (!d.alpha[b][a].is_exactly_zero()) r.T.at({a}) += d.alpha[b][a] * du.star1[b];
      for (int c = 0; c < 3; ++c) {
        if (int e = epsilon(a, b, c))
          for (int k = 0; k < 3; ++k)
            if (!d.theta[k][c].is_exactly_zero()) r.R_antisym.at({a, b}) += (e * d.theta[k][c]) * du.star1[k];
        if (!d.zeta[a][b][c].is_exactly_zero()) r.R_sym.at({a, b}) += d.zeta[a][b][c] * du.star1[c];
      }
    }
  return r;
}

ScalarMatrix gt_theta(const TensorForm& q, const Coframe& frame, const TheoryParams& p) {
  TensorForm qc = frame_components(q, frame);  // Q_bcd
  std::array<ScalarField, 3> weyl;
  for (int c = 0; c < 3; ++c)
    for (int a = 0; a < 3; ++a) weyl[c] += comp(qc, {a, a, c});
  ScalarMatrix th;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      ScalarField s;
      for (int c = 0; c < 3; ++c) {
        for (int d = 0; d < 3; ++d)
          if (int e = epsilon(a, c, d)) s += ScalarField(p.A * e) * comp(qc, {b, c, d});
        if (int e = epsilon(a, b, c)) s += ScalarField(p.B * e) * weyl[c];
      }
      th[a][b] = s;
    }
  return th;
}

ScalarMatrix gt_theta(const Geometry& geom, const TheoryParams& p) {
  return gt_theta(geom.cartan().Q, geom.frame(), p);
}

TensorForm gt_q_from_theta(const ScalarMatrix& theta, const TheoryParams& p, const Coframe& frame,
                           const ZeroTestConfig& cfg) {
  if (!is_zero(theta[0][0] + theta[1][1] + theta[2][2], cfg))
    throw DomainError("disclination density must be traceless");
  FrameDuals du(frame);
  Form axial(1);
  for (int m = 0; m < 3; ++m)
    for (int n = 0; n < 3; ++n)
      if (m != n && !theta[m][n].is_exactly_zero()) axial += theta[m][n] * du.star2[m][n];
  TensorForm q(1, 0, 2);
  for (int b = 0; b < 3; ++b)
    for (int c = 0; c < 3; ++c) {
      Form s(1);
      for (int k = 0; k < 3; ++k) {
        if (k != c && !theta[k][b].is_exactly_zero()) s += theta[k][b] * du.star2[k][c];
        if (k != b && !theta[k][c].is_exactly_zero()) s += theta[k][c] * du.star2[k][b];
      }
      q.at({b, c}) = ScalarField(p.C) * s;
      if (b == c) q.at({b, c}) += ScalarField(p.K) * axial;
    }
  return q;
}

ScalarMatrix gt_alpha(const Geometry& geom, const TheoryParams& p) {
  TensorForm t = frame_components(geom.cartan().T, geom.frame());
  ScalarMatrix th = gt_theta(geom, p);
  ScalarMatrix al;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      ScalarField s = ScalarField(4 * p.C) * th[a][b] - ScalarField(p.C) * th[b][a];
      for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n)
          if (int e = epsilon(a, m, n)) s += ScalarField(Rational(e, 2)) * comp(t, {b, m, n});
      al[a][b] = s;
    }
  return al;
}

ScalarMatrix gt_alpha_antisymmetric_route(const Geometry& geom) {
  const Coframe& fr = geom.frame();
  TensorForm om = antisymmetric_part(geom.split().defect);
  ScalarMatrix al;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Form s(3);
      for (int c = 0; c < 3; ++c)
        if (c != a) s += wedge(om.at({b, c}), wedge(fr.e(c), fr.e(a)));
      al[a][b] = hodge(s, fr)[0];
    }
  return al;
}

TensorForm gt_torsion_from_densities(const ScalarMatrix& alpha, const ScalarMatrix& theta, const TheoryParams& p,
                                     const Coframe& frame) {
  FrameDuals du(frame);
  TensorForm t(2, 1, 0);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      ScalarField k = alpha[b][a] - ScalarField(4 * p.C) * theta[b][a] + ScalarField(p.C) * theta[a][b];
      if (!k.is_exactly_zero()) t.at({a}) += k * du.star1[b];
    }
  return t;
}

DefectDensities gt_densities(const Geometry& geom, const TheoryParams& p) {
  DefectDensities d;
  d.theory = Theory::GT;
  d.theta = gt_theta(geom, p);
  d.alpha = gt_alpha(geom, p);
  return d;
}

Admissibility gt_admissibility(const Geometry& geom, const TheoryParams& p, const ZeroTestConfig& cfg) {
  Admissibility r{};
  Traces t = traces(geom);
  r.p_zero = true;
  for (const auto& v : t.second) r.p_zero = r.p_zero && defectforms::is_zero(v, cfg);
  TensorForm back = gt_q_from_theta(gt_theta(geom, p), p, geom.frame(), cfg);
  r.q_in_image = defectforms::is_zero(geom.cartan().Q - back, cfg);
  r.r_zero = defectforms::is_zero(geom.cartan().R, cfg);
  return r;
}

std::string to_string(const ScalarMatrix& m) {
  std::string s = "[";
  for (int a = 0; a < 3; ++a) {
    s += a ? "; " : "";
    for (int b = 0; b < 3; ++b) s += (b ? ", " : "") + m[a][b].to_string();
  }
  return s + "]";
}

}  // namespace defectforms
