#include "defectforms/scalar_field.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "defectforms/errors.hpp"

namespace defectforms {
namespace {

using Factor = ScalarField::Factor;

bool same_factors(const std::vector<Factor>& a, const std::vector<Factor>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].exponent != b[i].exponent || !(a[i].base == b[i].base)) return false;
  return true;
}

/// Exponent-wise max (for lcm) or sum (for products) of two sorted factor lists.
std::vector<Factor> merge_factors(const std::vector<Factor>& a, const std::vector<Factor>& b, bool sum) {
  std::vector<Factor> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].base < b[j].base)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].base < a[i].base) {
      out.push_back(b[j++]);
    } else {
      int e = sum ? a[i].exponent + b[j].exponent : std::max(a[i].exponent, b[j].exponent);
      out.push_back({a[i].base, e});
      ++i;
      ++j;
    }
  }
  return out;
}

/// num * prod(base^(target - have)) over the target list.
MultiPoly lift(const MultiPoly& num, const std::vector<Factor>& have, const std::vector<Factor>& target) {
  MultiPoly r = num;
  std::size_t i = 0;
  for (const auto& t : target) {
    int e = t.exponent;
    while (i < have.size() && have[i].base < t.base) ++i;
    if (i < have.size() && have[i].base == t.base) e -= have[i].exponent;
    if (e > 0) r = r * t.base.pow(static_cast<unsigned>(e));
  }
  return r;
}

}  // namespace

void ZeroTestConfig::validate() const {
  if (num_points < 4) throw DomainError("zero test needs at least 4 sample points");
  if (coord_bound <= 0) throw DomainError("zero test coordinate bound must be positive");
  if (max_expand_degree < 0) throw DomainError("zero test expansion degree must be non-negative");
}

ScalarField::ScalarField(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw DomainError("division by the zero polynomial");
  if (den.is_constant()) {
    num_ = num.scaled(den.constant_term().reciprocal());
    return;
  }
  num_ = num;
  if (num_.is_zero()) return;
  insert_factor(den, 1);
  cancel();
}

void ScalarField::insert_factor(const MultiPoly& p, int exponent) {
  Rational c = p.content();
  MultiPoly base = p.scaled(c.reciprocal());
  Rational scale = c.reciprocal();
  Rational total = 1;
  for (int e = 0; e < exponent; ++e) total *= scale;
  num_ = num_.scaled(total);
  auto it = std::lower_bound(den_.begin(), den_.end(), base,
                             [](const Factor& f, const MultiPoly& b) { return f.base < b; });
  if (it != den_.end() && it->base == base) {
    it->exponent += exponent;
  } else {
    den_.insert(it, Factor{std::move(base), exponent});
  }
}

void ScalarField::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& f : den_) {
    while (f.exponent > 0 && num_.total_degree() >= f.base.total_degree()) {
      auto q = num_.divide_exact(f.base);
      if (!q) break;
      num_ = std::move(*q);
      --f.exponent;
    }
  }
  std::erase_if(den_, [](const Factor& f) { return f.exponent == 0; });
}

MultiPoly ScalarField::denominator() const {
  MultiPoly d(1);
  for (const auto& f : den_) d = d * f.base.pow(static_cast<unsigned>(f.exponent));
  return d;
}

int ScalarField::degree() const {
  int d = std::max(num_.total_degree(), 0);
  for (const auto& f : den_) d += f.exponent * f.base.total_degree();
  return d;
}

ScalarField ScalarField::operator-() const {
  ScalarField r = *this;
  r.num_ = -r.num_;
  return r;
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  if (a.num_.is_zero()) return b;
  if (b.num_.is_zero()) return a;
  ScalarField r;
  if (same_factors(a.den_, b.den_)) {
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
  } else {
    r.den_ = merge_factors(a.den_, b.den_, false);
    r.num_ = lift(a.num_, a.den_, r.den_) + lift(b.num_, b.den_, r.den_);
  }
  if (!r.den_.empty()) r.cancel();
  return r;
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) { return a + (-b); }

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  if (a.num_.is_zero() || b.num_.is_zero()) return ScalarField();
  ScalarField r;
  r.num_ = a.num_ * b.num_;
  if (a.den_.empty() && b.den_.empty()) return r;
  r.den_ = merge_factors(a.den_, b.den_, true);
  r.cancel();
  return r;
}

ScalarField operator/(const ScalarField& a, const ScalarField& b) {
  if (b.num_.is_zero()) throw DomainError("division by an identically zero scalar field");
  if (a.num_.is_zero()) return ScalarField();
  ScalarField r;
  if (b.num_.is_constant()) {
    r = a;
    r.num_ = r.num_.scaled(b.num_.constant_term().reciprocal());
  } else if (auto q = a.num_.divide_exact(b.num_)) {
    r.num_ = std::move(*q);
    r.den_ = a.den_;
  } else {
    r.num_ = a.num_;
    r.den_ = a.den_;
    r.insert_factor(b.num_, 1);
  }
  // Multiply by b's denominator, cancelling shared factors first.
  for (const auto& f : b.den_) {
    int e = f.exponent;
    auto it = std::find_if(r.den_.begin(), r.den_.end(), [&](const Factor& g) { return g.base == f.base; });
    if (it != r.den_.end()) {
      int c = std::min(e, it->exponent);
      it->exponent -= c;
      e -= c;
    }
    if (e > 0) r.num_ = r.num_ * f.base.pow(static_cast<unsigned>(e));
  }
  std::erase_if(r.den_, [](const Factor& f) { return f.exponent == 0; });
  r.cancel();
  return r;
}

ScalarField ScalarField::pow(unsigned exponent) const {
  ScalarField r(1);
  for (unsigned i = 0; i < exponent; ++i) r = r * *this;
  return r;
}

bool operator==(const ScalarField& a, const ScalarField& b) {
  return a.num_ == b.num_ && same_factors(a.den_, b.den_);
}

std::string ScalarField::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::ostringstream os;
  os << "(" << num_.to_string() << ")/(";
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (i) os << "*";
    os << "(" << den_[i].base.to_string() << ")";
    if (den_[i].exponent > 1) os << "^" << den_[i].exponent;
  }
  os << ")";
  return os.str();
}

ScalarField differentiate(const ScalarField& f, int axis) {
  if (axis < 0 || axis > 2) throw DomainError("differentiation axis must be 1..3");
  const auto& factors = f.denominator_factors();
  if (factors.empty()) return ScalarField(f.numerator().derivative(axis));
  // (N/prod p_i^k_i)' = (N' prod p_i - N sum_i k_i p_i' prod_{j!=i} p_j) / prod p_i^(k_i+1)
  MultiPoly all(1);
  for (const auto& fac : factors) all = all * fac.base;
  MultiPoly num = f.numerator().derivative(axis) * all;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    MultiPoly dp = factors[i].base.derivative(axis);
    if (dp.is_zero()) continue;
    MultiPoly others(1);
    for (std::size_t j = 0; j < factors.size(); ++j)
      if (j != i) others = others * factors[j].base;
    num = num - (f.numerator() * dp * others).scaled(Rational(factors[i].exponent));
  }
  MultiPoly dpoly(1);
  for (const auto& fac : factors) dpoly = dpoly * fac.base.pow(static_cast<unsigned>(fac.exponent + 1));
  return ScalarField(num, dpoly);
}

Rational evaluate(const ScalarField& f, const Point& p) {
  Rational den = 1;
  for (const auto& fac : f.denominator_factors()) {
    Rational v = fac.base.evaluate(p);
    if (v.is_zero()) throw PoleError("denominator vanishes at evaluation point");
    for (int e = 0; e < fac.exponent; ++e) den *= v;
  }
  return f.numerator().evaluate(p) / den;
}

double evaluate(const ScalarField& f, const std::array<double, 3>& p) {
  double den = 1.0;
  for (const auto& fac : f.denominator_factors()) {
    double v = fac.base.evaluate(p);
    for (int e = 0; e < fac.exponent; ++e) den *= v;
  }
  return f.numerator().evaluate(p) / den;
}

std::vector<Point> sample_points(const ZeroTestConfig& cfg, const std::vector<const ScalarField*>& avoid) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  const auto bound = static_cast<std::uint64_t>(cfg.coord_bound);
  auto coordinate = [&]() {
    auto p = static_cast<long long>(rng() % (2 * bound + 1)) - static_cast<long long>(bound);
    auto q = static_cast<long long>(rng() % bound) + 1;
    return Rational(p, q);
  };
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(cfg.num_points));
  for (int i = 0; i < cfg.num_points; ++i) {
    bool found = false;
    for (int attempt = 0; attempt < 64 && !found; ++attempt) {
      Point p{coordinate(), coordinate(), coordinate()};
      found = true;
      for (const ScalarField* f : avoid) {
        for (const auto& fac : f->denominator_factors()) {
          if (fac.base.evaluate(p).is_zero()) {
            found = false;
            break;
          }
        }
        if (!found) break;
      }
      if (found) points.push_back(p);
    }
    if (!found) throw SamplingExhausted("no sample point avoids the denominators after 64 attempts");
  }
  return points;
}

bool is_zero(const ScalarField& f, const ZeroTestConfig& cfg) {
  cfg.validate();
  if (f.numerator().total_degree() <= cfg.max_expand_degree) return f.is_exactly_zero();
  for (const Point& p : sample_points(cfg, {&f}))
    if (!f.numerator().evaluate(p).is_zero()) return false;
  return true;
}

}  // namespace defectforms
