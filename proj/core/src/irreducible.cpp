#include "defectforms/irreducible.hpp"

#include <utility>

namespace defectforms {
namespace {

// sum_a i_a A^a for a rank-1 tensor form
Form contract_interior(const TensorForm& a, const Coframe& frame) {
  Form out(a.degree() - 1);
  for (int k = 0; k < 3; ++k) out += interior(frame.X(k), a[static_cast<std::size_t>(k)]);
  return out;
}

// sum_a e^a ^ A^a
Form contract_wedge(const TensorForm& a, const Coframe& frame) {
  Form out(a.degree() + 1);
  for (int k = 0; k < 3; ++k) out += wedge(frame.e(k), a[static_cast<std::size_t>(k)]);
  return out;
}

// sum over all index values of A ^ *B
Form pairing(const TensorForm& a, const TensorForm& b, const Coframe& frame) {
  Form out(3);
  for (std::size_t k = 0; k < a.size(); ++k) out += wedge(a[k], hodge(b[k], frame));
  return out;
}

Form trace(const TensorForm& q) {
  Form out(q.degree());
  for (int a = 0; a < 3; ++a) out += q.at({a, a});
  return out;
}

TensorForm vector_of(std::vector<Form> parts, int upper, int lower) {
  TensorForm t(parts.front().degree(), upper, lower);
  for (std::size_t k = 0; k < parts.size(); ++k) t[k] = std::move(parts[k]);
  return t;
}

ClaimResult certificate(const char* id, const Form& residual, const ZeroTestConfig& cfg) {
  return make_claim(id, "irreducible", TensorForm(residual), false, cfg);
}

ClaimResult certificate(const char* id, const TensorForm& residual, const ZeroTestConfig& cfg) {
  return make_claim(id, "irreducible", residual, false, cfg);
}

std::vector<Rational> sample(const TensorForm& t, const Point& p) {
  std::vector<Rational> v;
  for (std::size_t k = 0; k < t.size(); ++k)
    for (const ScalarField& f : t[k].coefficients()) v.push_back(evaluate(f, p));
  return v;
}

}  // namespace

TorsionDecomposition torsion_pieces(const TensorForm& torsion, const Coframe& frame) {
  TorsionDecomposition r;
  Form t = contract_interior(torsion, frame);
  Form sigma = contract_wedge(torsion, frame);
  r.trace_one_form = t;
  r.sigma = sigma;
  r.piece2 = TensorForm(2, 1, 0);
  r.piece3 = TensorForm(2, 1, 0);
  for (int a = 0; a < 3; ++a) {
    r.piece2.at({a}) = ScalarField(Rational(1, 2)) * wedge(frame.e(a), t);
    if (!sigma.is_exactly_zero()) r.piece3.at({a}) = ScalarField(Rational(1, 3)) * interior(frame.X(a), sigma);
  }
  r.piece1 = torsion - r.piece2 - r.piece3;
  return r;
}

TorsionDecomposition torsion_pieces(const Geometry& geom) { return torsion_pieces(geom.cartan().T, geom.frame()); }

NonmetricityDecomposition nonmetricity_pieces(const TensorForm& q, const Coframe& frame) {
  NonmetricityDecomposition r;
  const ScalarField third(Rational(1, 3));
  Form weyl = trace(q);
  r.weyl = weyl;
  r.tracefree = q;
  for (int a = 0; a < 3; ++a) r.tracefree.at({a, a}) -= third * weyl;

  std::vector<Form> theta_a, omega_a, lambda_a;
  for (int a = 0; a < 3; ++a) {
    Form s(2), l(0);
    for (int b = 0; b < 3; ++b) {
      s += wedge(r.tracefree.at({a, b}), frame.e(b));
      l += interior(frame.X(b), r.tracefree.at({a, b}));
    }
    theta_a.push_back(hodge(s, frame));
    lambda_a.push_back(l);
  }
  Form theta(2), lambda(1);
  for (int a = 0; a < 3; ++a) {
    theta += wedge(frame.e(a), theta_a[a]);
    lambda += wedge(lambda_a[a], frame.e(a));
  }
  for (int a = 0; a < 3; ++a)
    omega_a.push_back(theta_a[a] - ScalarField(Rational(1, 2)) * interior(frame.X(a), theta));
  r.theta_a = vector_of(theta_a, 0, 1);
  r.theta = theta;
  r.omega_a = vector_of(omega_a, 0, 1);
  r.lambda_a = vector_of(lambda_a, 0, 1);
  r.lambda = lambda;

  r.piece2 = TensorForm(1, 0, 2);
  r.piece3 = TensorForm(1, 0, 2);
  r.piece4 = TensorForm(1, 0, 2);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      r.piece2.at({a, b}) = third * hodge(wedge(frame.e(a), omega_a[b]) + wedge(frame.e(b), omega_a[a]), frame);
      Form p3 = lambda_a[a][0] * frame.e(b) + lambda_a[b][0] * frame.e(a);
      if (a == b) p3 -= ScalarField(Rational(2, 3)) * lambda;
      r.piece3.at({a, b}) = ScalarField(Rational(3, 10)) * p3;
      if (a == b) r.piece4.at({a, b}) = third * weyl;
    }
  r.piece1 = q - r.piece2 - r.piece3 - r.piece4;

  std::vector<Form> p;
  for (int a = 0; a < 3; ++a) {
    Form s(0);
    for (int b = 0; b < 3; ++b) s += interior(frame.X(b), q.at({a, b}));
    p.push_back(s);
  }
  r.second_trace = vector_of(p, 0, 1);
  return r;
}

NonmetricityDecomposition nonmetricity_pieces(const Geometry& geom) {
  return nonmetricity_pieces(geom.cartan().Q, geom.frame());
}

std::vector<ClaimResult> certify(const TorsionDecomposition& t, const TensorForm& torsion, const Coframe& frame,
                                 const ZeroTestConfig& cfg) {
  std::vector<ClaimResult> out;
  out.push_back(certificate("TORSION-SUM", t.piece1 + t.piece2 + t.piece3 - torsion, cfg));
  out.push_back(certificate("TORSION-TRACE-1", contract_interior(t.piece1, frame), cfg));
  out.push_back(certificate("TORSION-TRACE-3", contract_interior(t.piece3, frame), cfg));
  out.push_back(certificate("TORSION-AXIAL-1", contract_wedge(t.piece1, frame), cfg));
  out.push_back(certificate("TORSION-AXIAL-2", contract_wedge(t.piece2, frame), cfg));
  out.push_back(certificate("TORSION-TRACE-2", contract_interior(t.piece2, frame) - t.trace_one_form[0], cfg));
  out.push_back(certificate("TORSION-AXIAL-3", contract_wedge(t.piece3, frame) - t.sigma[0], cfg));
  const TensorForm* pieces[] = {&t.piece1, &t.piece2, &t.piece3};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) {
        std::string id = "TORSION-ORTHO-" + std::to_string(i + 1) + std::to_string(j + 1);
        out.push_back(certificate(id.c_str(), pairing(*pieces[i], *pieces[j], frame), cfg));
      }
  return out;
}

std::vector<ClaimResult> certify(const NonmetricityDecomposition& n, const TensorForm& q, const Coframe& frame,
                                 const ZeroTestConfig& cfg) {
  std::vector<ClaimResult> out;
  out.push_back(certificate("NONMET-SUM", n.piece1 + n.piece2 + n.piece3 + n.piece4 - q, cfg));
  const TensorForm* pieces[] = {&n.piece1, &n.piece2, &n.piece3, &n.piece4};
  for (int k = 0; k < 3; ++k) {
    std::string id = "NONMET-TRACE-" + std::to_string(k + 1);
    out.push_back(certificate(id.c_str(), trace(*pieces[k]), cfg));
  }
  for (int k = 0; k < 2; ++k) {
    TensorForm div(0, 0, 1);
    for (int b = 0; b < 3; ++b)
      for (int a = 0; a < 3; ++a) div.at({b}) += interior(frame.X(a), pieces[k]->at({a, b}));
    std::string id = "NONMET-DIV-" + std::to_string(k + 1);
    out.push_back(certificate(id.c_str(), div, cfg));
  }
  TensorForm axial(2, 0, 1);
  for (int b = 0; b < 3; ++b)
    for (int a = 0; a < 3; ++a) axial.at({b}) += wedge(frame.e(a), n.piece1.at({a, b}));
  out.push_back(certificate("NONMET-AXIAL-1", axial, cfg));
  TensorForm lam(0, 0, 1);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) lam.at({a}) += interior(frame.X(b), n.piece3.at({a, b}));
  out.push_back(certificate("NONMET-LAMBDA-3", lam - n.lambda_a, cfg));
  out.push_back(certificate("NONMET-WEYL-4", trace(n.piece4) - n.weyl[0], cfg));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) {
        std::string id = "NONMET-ORTHO-" + std::to_string(i + 1) + std::to_string(j + 1);
        out.push_back(certificate(id.c_str(), pairing(*pieces[i], *pieces[j], frame), cfg));
      }
  return out;
}

int rank(std::vector<std::vector<Rational>> rows) {
  int r = 0;
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(r);
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(r)]);
    const auto& pr = rows[static_cast<std::size_t>(r)];
    for (std::size_t i = static_cast<std::size_t>(r) + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      Rational f = rows[i][c] / pr[c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * pr[k];
    }
    ++r;
  }
  return r;
}

std::vector<int> torsion_piece_ranks(const Coframe& frame, const Point& p) {
  std::vector<std::vector<std::vector<Rational>>> rows(3);
  for (int a = 0; a < 3; ++a)
    for (std::size_t slot = 0; slot < 3; ++slot) {
      TensorForm t(2, 1, 0, Basis::Frame);
      t.at({a})[slot] = 1;
      TorsionDecomposition dec = torsion_pieces(change_basis(t, frame, Direction::ToCoordinate), frame);
      rows[0].push_back(sample(dec.piece1, p));
      rows[1].push_back(sample(dec.piece2, p));
      rows[2].push_back(sample(dec.piece3, p));
    }
  return {rank(rows[0]), rank(rows[1]), rank(rows[2])};
}

std::vector<int> nonmetricity_piece_ranks(const Coframe& frame, const Point& p) {
  std::vector<std::vector<std::vector<Rational>>> rows(4);
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b)
      for (std::size_t slot = 0; slot < 3; ++slot) {
        TensorForm q(1, 0, 2, Basis::Frame);
        q.at({a, b})[slot] = 1;
        q.at({b, a})[slot] = 1;
        NonmetricityDecomposition dec = nonmetricity_pieces(change_basis(q, frame, Direction::ToCoordinate), frame);
        rows[0].push_back(sample(dec.piece1, p));
        rows[1].push_back(sample(dec.piece2, p));
        rows[2].push_back(sample(dec.piece3, p));
        rows[3].push_back(sample(dec.piece4, p));
      }
  return {rank(rows[0]), rank(rows[1]), rank(rows[2]), rank(rows[3])};
}

}  // namespace defectforms
