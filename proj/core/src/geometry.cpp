#include "defectforms/geometry.hpp"

#include <mutex>
#include <optional>

#include "defectforms/errors.hpp"

namespace defectforms {

struct Geometry::Cache {
  std::once_flag cartan_once, split_once;
  std::optional<CartanTensors> cartan;
  std::optional<ConnectionSplit> split;
};

Geometry::Geometry(Coframe frame, TensorForm omega)
    : frame_(std::move(frame)), omega_(std::move(omega)), cache_(std::make_shared<Cache>()) {
  if (omega_.degree() != 1 || omega_.upper() != 1 || omega_.lower() != 1 || omega_.basis() != Basis::Coordinate)
    throw DomainError("connection must be a (1,1)-valued 1-form in the coordinate basis");
}

namespace {

CartanTensors compute_cartan(const Coframe& frame, const TensorForm& w) {
  CartanTensors c{TensorForm(1, 0, 2), TensorForm(2, 1, 0), TensorForm(2, 1, 1)};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) c.Q.at({a, b}) = ScalarField(Rational(1, 2)) * (w.at({a, b}) + w.at({b, a}));
  for (int a = 0; a < 3; ++a) {
    Form t = d(frame.e(a));
    for (int b = 0; b < 3; ++b) t += wedge(w.at({a, b}), frame.e(b));
    c.T.at({a}) = t;
  }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Form r = d(w.at({a, b}));
      for (int k = 0; k < 3; ++k) r += wedge(w.at({a, k}), w.at({k, b}));
      c.R.at({a, b}) = r;
    }
  return c;
}

ConnectionSplit compute_split(const Coframe& frame, const TensorForm& w, const CartanTensors& c) {
  ConnectionSplit s;
  s.levi_civita = levi_civita(frame);
  s.contortion = TensorForm(1, 0, 2);
  s.disformation = TensorForm(1, 0, 2);
  std::array<std::array<Form, 3>, 3> iT;  // iT[a][b] = iota_a T_b
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) iT[a][b] = interior(frame.X(a), c.T.at({b}));
  const ScalarField half(Rational(1, 2));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Form k = iT[a][b] - iT[b][a];
      Form q = c.Q.at({a, b});
      for (int m = 0; m < 3; ++m) {
        ScalarField iab = interior(frame.X(a), iT[b][m])[0];
        k -= iab * frame.e(m);
        ScalarField qamb = interior(frame.X(b), c.Q.at({a, m}))[0];
        ScalarField qbma = interior(frame.X(a), c.Q.at({b, m}))[0];
        q += (qamb - qbma) * frame.e(m);
      }
      s.contortion.at({a, b}) = half * k;
      s.disformation.at({a, b}) = q;
    }
  s.defect = s.contortion + s.disformation;
  s.antisym = antisymmetric_part(with_valence(w, 0, 2));
  return s;
}

}  // namespace

const CartanTensors& Geometry::cartan() const {
  std::call_once(cache_->cartan_once, [&] { cache_->cartan = compute_cartan(frame_, omega_); });
  return *cache_->cartan;
}

const ConnectionSplit& Geometry::split() const {
  const CartanTensors& c = cartan();
  std::call_once(cache_->split_once, [&] { cache_->split = compute_split(frame_, omega_, c); });
  return *cache_->split;
}

TensorForm with_valence(const TensorForm& a, int upper, int lower) {
  if (upper + lower != a.rank()) throw DomainError("valence change must keep the rank");
  TensorForm r(a.degree(), upper, lower, a.basis());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  return r;
}

TensorForm swap_indices(const TensorForm& a) {
  if (a.rank() != 2) throw DomainError("index swap needs a rank-2 tensor form");
  TensorForm r(a.degree(), a.upper(), a.lower(), a.basis());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.at({i, j}) = a.at({j, i});
  return r;
}

TensorForm symmetric_part(const TensorForm& a) {
  return ScalarField(Rational(1, 2)) * (a + swap_indices(a));
}

TensorForm antisymmetric_part(const TensorForm& a) {
  return ScalarField(Rational(1, 2)) * (a - swap_indices(a));
}

TensorForm coframe_form(const Coframe& frame) {
  TensorForm e(1, 1, 0);
  for (int a = 0; a < 3; ++a) e.at({a}) = frame.e(a);
  return e;
}

CartanTensors cartan_tensors(const Geometry& geom) { return geom.cartan(); }

TensorForm cov_d(const TensorForm& omega, const TensorForm& a) {
  TensorForm r = d(a);
  if (a.rank() == 0) return r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<int> idx = a.indices(i);
    for (int k = 0; k < a.rank(); ++k) {
      std::vector<int> j = idx;
      for (int c = 0; c < 3; ++c) {
        j[static_cast<std::size_t>(k)] = c;
        const Form& src = a.at(j);
        if (src.is_exactly_zero()) continue;
        if (k < a.upper()) {
          const Form& w = omega.at({idx[static_cast<std::size_t>(k)], c});
          if (!w.is_exactly_zero()) r[i] += wedge(w, src);
        } else {
          const Form& w = omega.at({c, idx[static_cast<std::size_t>(k)]});
          if (!w.is_exactly_zero()) r[i] -= wedge(w, src);
        }
      }
    }
  }
  return r;
}

TensorForm cov_d(const Geometry& geom, const TensorForm& a) { return cov_d(geom.omega(), a); }

TensorForm levi_civita(const Coframe& frame) {
  std::array<Form, 3> de;
  for (int a = 0; a < 3; ++a) de[static_cast<std::size_t>(a)] = d(frame.e(a));
  std::array<std::array<Form, 3>, 3> ide;  // ide[a][b] = iota_a de_b
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) ide[a][b] = interior(frame.X(a), de[static_cast<std::size_t>(b)]);
  TensorForm w(1, 1, 1);
  const ScalarField half(Rational(1, 2));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;
      Form f = ide[b][a] - ide[a][b];
      for (int c = 0; c < 3; ++c) {
        ScalarField abc = interior(frame.X(a), ide[b][c])[0];
        if (!abc.is_exactly_zero()) f += abc * frame.e(c);
      }
      w.at({a, b}) = half * f;
    }
  return w;
}

ConnectionSplit connection_split(const Geometry& geom) { return geom.split(); }

CurvatureSplit curvature_split(const Geometry& geom) {
  const CartanTensors& c = geom.cartan();
  const ConnectionSplit& s = geom.split();
  const TensorForm& om = s.antisym;
  const TensorForm& q = c.Q;
  CurvatureSplit r;
  // Contractions over the middle index: X_ac ^ Y^c_b.
  auto contract = [](const TensorForm& x, const TensorForm& y) {
    TensorForm out(x.degree() + y.degree(), 0, 2);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int k = 0; k < 3; ++k) out.at({a, b}) += wedge(x.at({a, k}), y.at({k, b}));
    return out;
  };
  r.antisym = d(om) + contract(om, om) + contract(q, q);
  r.sym = d(q) + contract(om, q) + contract(q, om);
  const TensorForm& lc = s.levi_civita;
  TensorForm riem(2, 1, 1), non(2, 1, 1);
  TensorForm l = with_valence(s.defect, 1, 1);
  TensorForm dl = d(l);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Form rr = d(lc.at({a, b}));
      Form nn = dl.at({a, b});
      for (int k = 0; k < 3; ++k) {
        rr += wedge(lc.at({a, k}), lc.at({k, b}));
        nn += wedge(lc.at({a, k}), l.at({k, b}));
        nn -= wedge(lc.at({k, b}), l.at({a, k}));
        nn += wedge(l.at({a, k}), l.at({k, b}));
      }
      riem.at({a, b}) = rr;
      non.at({a, b}) = nn;
    }
  r.riemannian = riem;
  r.nonriemannian = non;
  return r;
}

BianchiResiduals bianchi_residuals(const Geometry& geom) {
  const CartanTensors& c = geom.cartan();
  BianchiResiduals r;
  r.res1 = cov_d(geom, c.Q) - symmetric_part(with_valence(c.R, 0, 2));
  TensorForm re(3, 1, 0);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) re.at({a}) += wedge(c.R.at({a, b}), geom.frame().e(b));
  r.res2 = cov_d(geom, c.T) - re;
  r.res3 = cov_d(geom, c.R);
  return r;
}

std::string to_string(GeometryClass c) {
  switch (c) {
    case GeometryClass::Minkowski: return "Minkowski";
    case GeometryClass::Riemann: return "Riemann";
    case GeometryClass::MetricTeleparallel: return "MetricTeleparallel";
    case GeometryClass::SymmetricTeleparallel: return "SymmetricTeleparallel";
    case GeometryClass::RiemannCartan: return "RiemannCartan";
    case GeometryClass::RiemannWeyl: return "RiemannWeyl";
    case GeometryClass::GeneralTeleparallel: return "GeneralTeleparallel";
    case GeometryClass::MetricAffine: return "MetricAffine";
  }
  return "?";
}

GeometryClass classify(const Geometry& geom, const ZeroTestConfig& cfg) {
  const CartanTensors& c = geom.cartan();
  bool q = !is_zero(c.Q, cfg), t = !is_zero(c.T, cfg), r = !is_zero(c.R, cfg);
  static constexpr GeometryClass table[2][2][2] = {
      {{GeometryClass::Minkowski, GeometryClass::Riemann},
       {GeometryClass::MetricTeleparallel, GeometryClass::RiemannCartan}},
      {{GeometryClass::SymmetricTeleparallel, GeometryClass::RiemannWeyl},
       {GeometryClass::GeneralTeleparallel, GeometryClass::MetricAffine}},
  };
  return table[q][t][r];
}

GaugeField::GaugeField(ScalarMatrix lambda, const ZeroTestConfig& cfg)
    : lambda_(std::move(lambda)), inverse_(defectforms::inverse(lambda_, cfg)) {}

TensorForm gauge_connection(const GaugeField& lambda) {
  const ScalarMatrix& inv = lambda.inverse();
  std::array<std::array<Form, 3>, 3> dl;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) dl[a][b] = d(Form(lambda.matrix()[a][b]));
  TensorForm w(1, 1, 1);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        if (!inv[a][c].is_exactly_zero() && !dl[c][b].is_exactly_zero()) w.at({a, b}) += inv[a][c] * dl[c][b];
  return w;
}

GaugeField cayley_rotation(const ScalarMatrix& s, const ZeroTestConfig& cfg) {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (!is_zero(s[a][b] + s[b][a], cfg)) throw DomainError("Cayley parameter must be antisymmetric");
  ScalarMatrix id = identity_matrix();
  ScalarMatrix plus_inv;
  try {
    plus_inv = inverse(id + s, cfg);
  } catch (const DomainError&) {
    throw DomainError("I + S is degenerate");
  }
  return GaugeField((id - s) * plus_inv, cfg);
}

Coframe symmetric_coframe(const GaugeField& lambda, const std::array<ScalarField, 3>& f, const ZeroTestConfig& cfg) {
  ScalarMatrix jac;
  for (int b = 0; b < 3; ++b)
    for (int i = 0; i < 3; ++i) jac[b][i] = differentiate(f[static_cast<std::size_t>(b)], i);
  return Coframe(lambda.inverse() * jac, cfg);
}

GaugeField conformal_gauge(const ScalarField& f, const ScalarMatrix& s, const ZeroTestConfig& cfg) {
  if (is_zero(f, cfg)) throw DomainError("conformal factor is identically zero");
  return GaugeField(scaled(cayley_rotation(s, cfg).matrix(), f), cfg);
}

}  // namespace defectforms
