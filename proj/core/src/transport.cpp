#include "defectforms/transport.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "defectforms/errors.hpp"

namespace defectforms {
namespace {

// Coefficient with a pole check against each denominator factor.
class NumField {
 public:
  NumField() = default;
  explicit NumField(const ScalarField& f) : num_(f.numerator()), zero_(f.is_exactly_zero()) {
    for (const auto& fac : f.denominator_factors()) den_.push_back(fac);
  }

  bool zero() const { return zero_; }

  double operator()(const NumPoint& p, double tol) const {
    if (zero_) return 0;
    double v = num_.evaluate(p);
    for (const auto& fac : den_) {
      double d = fac.base.evaluate(p);
      if (std::abs(d) <= tol) throw PoleError("denominator " + fac.base.to_string() + " vanishes near the point");
      v /= std::pow(d, fac.exponent);
    }
    return v;
  }

 private:
  MultiPoly num_;
  std::vector<ScalarField::Factor> den_;
  bool zero_ = true;
};

// A 1-form as three coordinate coefficients.
struct NumOneForm {
  explicit NumOneForm(const Form& f) {
    if (f.degree() != 1) throw DomainError("expected a 1-form");
    for (int i = 0; i < 3; ++i) c[i] = NumField(f.at(1u << i));
  }
  double operator()(const NumPoint& p, const NumPoint& v, double tol) const {
    double s = 0;
    for (int i = 0; i < 3; ++i)
      if (!c[i].zero()) s += c[i](p, tol) * v[i];
    return s;
  }
  std::array<NumField, 3> c;
};

struct NumTwoForm {
  explicit NumTwoForm(const Form& f) {
    if (f.degree() != 2) throw DomainError("expected a 2-form");
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) c[i][j] = NumField(f.at((1u << i) | (1u << j)));
  }
  // value on the ordered pair (a, b)
  double operator()(const NumPoint& p, const NumPoint& a, const NumPoint& b, double tol) const {
    double s = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (!c[i][j].zero()) s += c[i][j](p, tol) * (a[i] * b[j] - a[j] * b[i]);
    return s;
  }
  std::array<std::array<NumField, 3>, 3> c;
};

struct GaussLegendre {
  std::vector<double> x, w;  // on [0,1]
};

const GaussLegendre& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussLegendre> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  GaussLegendre g;
  for (int i = 0; i < n; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5)), dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1, p1 = 0;
      for (int k = 1; k <= n; ++k) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2 * k - 1) * z * p1 - (k - 1) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1);
      double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    g.x.push_back(0.5 * (1 - z));
    g.w.push_back(1.0 / ((1 - z * z) * dp * dp));
  }
  return cache.emplace(n, std::move(g)).first->second;
}

NumPoint eval3(const CurveSegment& m, const NumPoint& t) {
  return {m[0].evaluate(t), m[1].evaluate(t), m[2].evaluate(t)};
}

Point to_exact(const CurveSegment& m, const Rational& t) {
  Point p{t, 0, 0};
  return {m[0].evaluate(p), m[1].evaluate(p), m[2].evaluate(p)};
}

bool same_point(const Point& a, const Point& b) { return a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3; }

MultiPoly line(const Rational& a, const Rational& b) { return MultiPoly(a) + MultiPoly::variable(0).scaled(b - a); }

const Form& scalar_form(const TensorForm& a, int degree) {
  if (a.rank() != 0 || a.degree() != degree) throw DomainError("expected a scalar-valued form of degree " + std::to_string(degree));
  return a[0];
}

// omega^a_b contracted with a velocity, and Q_ab likewise.
struct NumConnection {
  explicit NumConnection(const TensorForm& w) {
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) c[a][b] = std::make_unique<NumOneForm>(w.at({a, b}));
  }
  std::array<std::array<double, 3>, 3> operator()(const NumPoint& p, const NumPoint& v, double tol) const {
    std::array<std::array<double, 3>, 3> m{};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) m[a][b] = (*c[a][b])(p, v, tol);
    return m;
  }
  std::array<std::array<std::unique_ptr<NumOneForm>, 3>, 3> c;
};

// RK4 over every segment on a state y with right-hand side f(seg, t, y).
template <std::size_t N, class F>
std::array<double, N> rk4(const PiecewiseCurve& c, std::array<double, N> y, int steps, F f) {
  const double h = 1.0 / steps;
  auto axpy = [](const std::array<double, N>& y0, double s, const std::array<double, N>& k) {
    std::array<double, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = y0[i] + s * k[i];
    return r;
  };
  for (std::size_t seg = 0; seg < c.segments().size(); ++seg)
    for (int n = 0; n < steps; ++n) {
      double t = n * h;
      auto k1 = f(seg, t, y);
      auto k2 = f(seg, t + h / 2, axpy(y, h / 2, k1));
      auto k3 = f(seg, t + h / 2, axpy(y, h / 2, k2));
      auto k4 = f(seg, t + h, axpy(y, h, k3));
      for (std::size_t i = 0; i < N; ++i) y[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    }
  return y;
}

double norm(const FrameVector& a, const FrameVector& b) {
  double s = 0;
  for (int i = 0; i < 3; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

void NumericConfig::validate() const {
  if (ode_steps < 16) throw DomainError("ode_steps must be at least 16");
  if (quad_order < 4) throw DomainError("quad_order must be at least 4");
  if (!(tol > 0)) throw DomainError("tol must be positive");
}

PiecewiseCurve::PiecewiseCurve(std::vector<CurveSegment> segments, bool closed)
    : segments_(std::move(segments)), closed_(closed) {
  if (segments_.empty()) throw DomainError("a curve needs at least one segment");
  for (std::size_t i = 0; i + 1 < segments_.size(); ++i)
    if (!same_point(to_exact(segments_[i], 1), to_exact(segments_[i + 1], 0)))
      throw DomainError("segment " + std::to_string(i + 2) + " does not start where segment " + std::to_string(i + 1) +
                        " ends");
  if (closed_ && !same_point(to_exact(segments_.back(), 1), to_exact(segments_.front(), 0)))
    throw DomainError("closed curve does not return to its start");
  for (const auto& s : segments_) {
    for (const auto& m : s)
      if (m.degree_in(1) > 0 || m.degree_in(2) > 0) throw DomainError("curve segments depend on the parameter only");
    velocity_.push_back({s[0].derivative(0), s[1].derivative(0), s[2].derivative(0)});
  }
}

PiecewiseCurve PiecewiseCurve::polygon(const std::vector<Point>& v, bool closed) {
  std::vector<CurveSegment> segs;
  std::size_t n = v.size();
  for (std::size_t i = 0; i + (closed ? 0 : 1) < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    segs.push_back({line(a.x1, b.x1), line(a.x2, b.x2), line(a.x3, b.x3)});
  }
  return PiecewiseCurve(std::move(segs), closed);
}

NumPoint PiecewiseCurve::position(std::size_t seg, double t) const { return eval3(segments_.at(seg), {t, 0, 0}); }
NumPoint PiecewiseCurve::velocity(std::size_t seg, double t) const { return eval3(velocity_.at(seg), {t, 0, 0}); }

Patch::Patch(CurveSegment map) : map_(std::move(map)) {
  for (const auto& m : map_)
    if (m.degree_in(2) > 0) throw DomainError("patch maps depend on (u, v) only");
  for (int k = 0; k < 2; ++k) jac_[k] = {map_[0].derivative(k), map_[1].derivative(k), map_[2].derivative(k)};
}

Patch Patch::parallelogram(const Point& c, const Point& du, const Point& dv) {
  CurveSegment m;
  for (int i = 0; i < 3; ++i)
    m[i] = MultiPoly(c[i]) + MultiPoly::variable(0).scaled(du[i]) + MultiPoly::variable(1).scaled(dv[i]);
  return Patch(std::move(m));
}

NumPoint Patch::position(double u, double v) const { return eval3(map_, {u, v, 0}); }

std::array<NumPoint, 2> Patch::tangents(double u, double v) const {
  return {eval3(jac_[0], {u, v, 0}), eval3(jac_[1], {u, v, 0})};
}

PiecewiseCurve Patch::boundary() const {
  // substitute (u, v) along each side; the maps are polynomials in x, y
  auto side = [&](const MultiPoly& u, const MultiPoly& v) {
    CurveSegment s;
    for (int i = 0; i < 3; ++i) {
      MultiPoly r;
      for (const auto& term : map_[i].terms())
        r = r + u.pow(monomial_exponent(term.monomial, 0)) * v.pow(monomial_exponent(term.monomial, 1)) *
                    MultiPoly(term.coeff);
      s[i] = r;
    }
    return s;
  };
  MultiPoly t = MultiPoly::variable(0), one(1), zero;
  return PiecewiseCurve({side(t, zero), side(one, t), side(one - t, one), side(zero, one - t)}, true);
}

PiecewiseCurve unit_square_loop() {
  return PiecewiseCurve::polygon({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}, true);
}

Patch unit_square_patch() { return Patch::parallelogram({0, 0, 0}, {1, 0, 0}, {0, 1, 0}); }

std::vector<std::vector<double>> eval_form(const TensorForm& a, const NumPoint& p, double tol) {
  std::vector<std::vector<double>> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const auto& c : a[i].coefficients()) out[i].push_back(NumField(c)(p, tol));
  return out;
}

void check_orientation(const Coframe& frame, const NumPoint& p, double tol) {
  if (frame.is_identity()) return;
  if (!(NumField(frame.determinant())(p, tol) > tol)) throw DomainError("coframe orientation flips near the point");
}

double line_integral(const Form& a, const PiecewiseCurve& c, const NumericConfig& cfg) {
  cfg.validate();
  NumOneForm f(a);
  const GaussLegendre& g = gauss_legendre(cfg.quad_order);
  double s = 0;
  for (std::size_t seg = 0; seg < c.segments().size(); ++seg)
    for (std::size_t q = 0; q < g.x.size(); ++q) s += g.w[q] * f(c.position(seg, g.x[q]), c.velocity(seg, g.x[q]), cfg.tol);
  return s;
}

double line_integral(const TensorForm& a, const PiecewiseCurve& c, const NumericConfig& cfg) {
  return line_integral(scalar_form(a, 1), c, cfg);
}

double surface_integral(const Form& a, const Patch& s, const NumericConfig& cfg) {
  cfg.validate();
  NumTwoForm f(a);
  const GaussLegendre& g = gauss_legendre(cfg.quad_order);
  double r = 0;
  for (std::size_t i = 0; i < g.x.size(); ++i)
    for (std::size_t j = 0; j < g.x.size(); ++j) {
      auto t = s.tangents(g.x[i], g.x[j]);
      r += g.w[i] * g.w[j] * f(s.position(g.x[i], g.x[j]), t[0], t[1], cfg.tol);
    }
  return r;
}

double surface_integral(const TensorForm& a, const Patch& s, const NumericConfig& cfg) {
  return surface_integral(scalar_form(a, 2), s, cfg);
}

FrameVector parallel_transport(const Geometry& geom, const PiecewiseCurve& c, const FrameVector& u0,
                               const NumericConfig& cfg) {
  cfg.validate();
  NumConnection w(geom.omega());
  return rk4<3>(c, u0, cfg.ode_steps, [&](std::size_t seg, double t, const std::array<double, 3>& u) {
    NumPoint p = c.position(seg, t);
    check_orientation(geom.frame(), p, cfg.tol);
    auto m = w(p, c.velocity(seg, t), cfg.tol);
    std::array<double, 3> du{};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) du[a] -= m[a][b] * u[b];
    return du;
  });
}

DriftResult product_drift(const Geometry& geom, const PiecewiseCurve& loop, const FrameVector& u0,
                          const FrameVector& v0, const NumericConfig& cfg) {
  cfg.validate();
  if (!loop.closed()) throw DomainError("product drift needs a closed loop");
  NumConnection w(geom.omega()), q(with_valence(geom.cartan().Q, 1, 1));
  std::array<double, 7> y{u0[0], u0[1], u0[2], v0[0], v0[1], v0[2], 0};
  y = rk4<7>(loop, y, cfg.ode_steps, [&](std::size_t seg, double t, const std::array<double, 7>& s) {
    NumPoint p = loop.position(seg, t), v = loop.velocity(seg, t);
    check_orientation(geom.frame(), p, cfg.tol);
    auto m = w(p, v, cfg.tol), qm = q(p, v, cfg.tol);
    std::array<double, 7> d{};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        d[a] -= m[a][b] * s[b];
        d[3 + a] -= m[a][b] * s[3 + b];
        d[6] -= 2 * qm[a][b] * s[a] * s[3 + b];
      }
    return d;
  });
  double start = 0, end = 0;
  for (int a = 0; a < 3; ++a) {
    start += u0[a] * v0[a];
    end += y[a] * y[3 + a];
  }
  return {end - start, y[6]};
}

Convergence transport_convergence(const Geometry& geom, const PiecewiseCurve& c, const FrameVector& u0,
                                  const NumericConfig& cfg) {
  NumericConfig k = cfg;
  FrameVector a = parallel_transport(geom, c, u0, k);
  k.ode_steps *= 2;
  FrameVector b = parallel_transport(geom, c, u0, k);
  k.ode_steps *= 2;
  FrameVector f = parallel_transport(geom, c, u0, k);
  FrameVector ref;
  for (int i = 0; i < 3; ++i) ref[i] = f[i] + (f[i] - b[i]) / 15;
  Convergence r{norm(a, ref), norm(b, ref), 0};
  if (r.coarse_error > 1e-13) r.ratio = r.coarse_error / std::max(r.fine_error, 1e-300);
  return r;
}

BurgersFrank burgers_frank(const Geometry& geom, const DefectDensities& d, const Patch& s, const NumericConfig& cfg) {
  if (!geom.frame().is_identity()) throw DomainError("Burgers and Frank vectors need the identity coframe");
  FrameDuals du(geom.frame());
  BurgersFrank r{};
  for (int l = 0; l < 3; ++l) {
    Form b(2), w(2);
    for (int p = 0; p < 3; ++p) {
      ScalarField fb = d.alpha[p][l];
      for (int q = 0; q < 3; ++q)
        for (int k = 0; k < 3; ++k)
          if (int e = epsilon(l, q, k)) fb += e * d.theta[p][q] * ScalarField::coordinate(k);
      if (!fb.is_exactly_zero()) b += fb * du.star1[p];
      if (!d.theta[p][l].is_exactly_zero()) w += d.theta[p][l] * du.star1[p];
    }
    r.burgers[l] = surface_integral(b, s, cfg);
    r.frank[l] = surface_integral(w, s, cfg);
  }
  return r;
}

}  // namespace defectforms
