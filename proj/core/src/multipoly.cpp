#include "defectforms/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace defectforms {
namespace {

bool divides(Monomial d, Monomial m) {
  for (int axis = 0; axis < 3; ++axis)
    if (monomial_exponent(d, axis) > monomial_exponent(m, axis)) return false;
  return true;
}

std::vector<MultiPoly::Term> merge_sorted(std::vector<MultiPoly::Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.monomial > b.monomial; });
  std::vector<MultiPoly::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return out;
}

}  // namespace

MultiPoly::MultiPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.push_back({0, constant});
}

MultiPoly MultiPoly::variable(int axis) {
  return monomial(axis == 0 ? 1 : 0, axis == 1 ? 1 : 0, axis == 2 ? 1 : 0);
}

MultiPoly MultiPoly::monomial(int i, int j, int k, const Rational& coeff) {
  MultiPoly p;
  if (!coeff.is_zero()) p.terms_.push_back({make_monomial(i, j, k), coeff});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  MultiPoly p;
  p.terms_ = merge_sorted(std::move(terms));
  return p;
}

int MultiPoly::degree_in(int axis) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, monomial_exponent(t.monomial, axis));
  return d;
}

Rational MultiPoly::coefficient(int i, int j, int k) const {
  Monomial m = make_monomial(i, j, k);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial v) { return t.monomial > v; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return Rational();
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial == 0) return terms_.back().coeff;
  return Rational();
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  MultiPoly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    const auto& ta = a.terms_[i];
    const auto& tb = b.terms_[j];
    if (ta.monomial > tb.monomial) {
      r.terms_.push_back(ta);
      ++i;
    } else if (ta.monomial < tb.monomial) {
      r.terms_.push_back(tb);
      ++j;
    } else {
      Rational c = ta.coeff + tb.coeff;
      if (!c.is_zero()) r.terms_.push_back({ta.monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly();
  if (a.terms_.size() == 1 && a.terms_[0].monomial == 0) return b.scaled(a.terms_[0].coeff);
  if (b.terms_.size() == 1 && b.terms_[0].monomial == 0) return a.scaled(b.terms_[0].coeff);
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const MultiPoly& one = a.terms_.size() == 1 ? a : b;
    const MultiPoly& many = a.terms_.size() == 1 ? b : a;
    MultiPoly r;
    r.terms_.reserve(many.terms_.size());
    for (const auto& t : many.terms_)
      r.terms_.push_back({t.monomial + one.terms_[0].monomial, t.coeff * one.terms_[0].coeff});
    return r;  // multiplying by a monomial preserves the order
  }

  std::array<int, 3> dims{};
  std::size_t cells = 1;
  for (int axis = 0; axis < 3; ++axis) {
    dims[axis] = a.degree_in(axis) + b.degree_in(axis) + 1;
    cells *= static_cast<std::size_t>(dims[axis]);
  }
  if (cells <= (1u << 18)) {
    // Dense accumulation indexed by exponent triple.
    std::vector<Rational> acc(cells);
    std::vector<char> used(cells, 0);
    auto index = [&](Monomial m) {
      return (static_cast<std::size_t>(monomial_exponent(m, 0)) * dims[1] + monomial_exponent(m, 1)) * dims[2] +
             monomial_exponent(m, 2);
    };
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        std::size_t idx = index(ta.monomial + tb.monomial);
        acc[idx] += ta.coeff * tb.coeff;
        used[idx] = 1;
      }
    }
    MultiPoly r;
    for (int i = 0; i < dims[0]; ++i)
      for (int j = 0; j < dims[1]; ++j)
        for (int k = 0; k < dims[2]; ++k) {
          std::size_t idx = (static_cast<std::size_t>(i) * dims[1] + j) * dims[2] + k;
          if (used[idx] && !acc[idx].is_zero()) r.terms_.push_back({make_monomial(i, j, k), std::move(acc[idx])});
        }
    std::sort(r.terms_.begin(), r.terms_.end(), [](const auto& x, const auto& y) { return x.monomial > y.monomial; });
    return r;
  }

  std::vector<MultiPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) prod.push_back({ta.monomial + tb.monomial, ta.coeff * tb.coeff});
  return MultiPoly::from_terms(std::move(prod));
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return MultiPoly();
  if (c.is_one()) return *this;
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(int axis) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  const Monomial unit = make_monomial(axis == 0, axis == 1, axis == 2);
  for (const auto& t : terms_) {
    int e = monomial_exponent(t.monomial, axis);
    if (e == 0) continue;
    out.push_back({t.monomial - unit, t.coeff * Rational(e)});
  }
  // Lowering one exponent by one keeps graded-lex order among the survivors.
  MultiPoly r;
  r.terms_ = std::move(out);
  return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return MultiPoly();
  if (divisor.is_constant()) return scaled(divisor.terms_[0].coeff.reciprocal());
  if (total_degree() < divisor.total_degree()) return std::nullopt;
  if (!divides(divisor.leading().monomial, leading().monomial)) return std::nullopt;
  if (!divides(divisor.trailing().monomial, trailing().monomial)) return std::nullopt;

  std::map<Monomial, Rational, std::greater<>> rem;
  for (const auto& t : terms_) rem.emplace(t.monomial, t.coeff);
  const Term& lead = divisor.leading();
  const Rational lead_inv = lead.coeff.reciprocal();
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!divides(lead.monomial, top->first)) return std::nullopt;
    Monomial qm = top->first - lead.monomial;
    Rational qc = top->second * lead_inv;
    for (const auto& t : divisor.terms_) {
      Monomial m = t.monomial + qm;
      auto [it, inserted] = rem.try_emplace(m, Rational());
      it->second -= t.coeff * qc;
      if (it->second.is_zero()) rem.erase(it);
    }
    quotient.push_back({qm, std::move(qc)});
  }
  MultiPoly q;
  q.terms_ = std::move(quotient);  // produced in decreasing order
  return q;
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return Rational(1);
  mpz_class g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_class n = abs(t.coeff.numerator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    mpz_class d = t.coeff.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  Rational c(mpq_class(g, l));
  return leading().coeff.sign() < 0 ? -c : c;
}

Rational MultiPoly::evaluate(const Point& p) const {
  if (terms_.empty()) return Rational();
  std::array<int, 3> maxdeg{};
  for (int axis = 0; axis < 3; ++axis) maxdeg[axis] = degree_in(axis);
  // Scale by b^maxdeg per coordinate and by the lcm of coefficient denominators
  // so the accumulation stays in the integers.
  std::array<std::vector<mpz_class>, 3> pa, pb;
  for (int axis = 0; axis < 3; ++axis) {
    mpz_class a = p[axis].numerator(), b = p[axis].denominator();
    pa[axis].resize(maxdeg[axis] + 1);
    pb[axis].resize(maxdeg[axis] + 1);
    pa[axis][0] = 1;
    pb[axis][0] = 1;
    for (int e = 1; e <= maxdeg[axis]; ++e) {
      pa[axis][e] = pa[axis][e - 1] * a;
      pb[axis][e] = pb[axis][e - 1] * b;
    }
  }
  mpz_class lcm = 1;
  for (const auto& t : terms_) {
    mpz_class d = t.coeff.denominator();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
  }
  mpz_class sum = 0, term;
  for (const auto& t : terms_) {
    term = t.coeff.numerator() * (lcm / t.coeff.denominator());
    for (int axis = 0; axis < 3; ++axis) {
      int e = monomial_exponent(t.monomial, axis);
      term *= pa[axis][e];
      term *= pb[axis][maxdeg[axis] - e];
    }
    sum += term;
  }
  mpz_class den = lcm;
  for (int axis = 0; axis < 3; ++axis) den *= pb[axis][maxdeg[axis]];
  return Rational(mpq_class(sum, den));
}

double MultiPoly::evaluate(const std::array<double, 3>& p) const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    double v = t.coeff.to_double();
    for (int axis = 0; axis < 3; ++axis) {
      int e = monomial_exponent(t.monomial, axis);
      if (e) v *= std::pow(p[axis], e);
    }
    sum += v;
  }
  return sum;
}

std::string MultiPoly::to_string(const std::array<const char*, 3>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c.sign() < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (!c.is_one() || t.monomial == 0) {
      os << c.to_string();
      wrote = true;
    }
    for (int axis = 0; axis < 3; ++axis) {
      int e = monomial_exponent(t.monomial, axis);
      if (e == 0) continue;
      if (wrote) os << "*";
      os << names[axis];
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].monomial != b.terms_[i].monomial || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

std::strong_ordering operator<=>(const MultiPoly& a, const MultiPoly& b) {
  if (auto c = a.terms_.size() <=> b.terms_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (auto c = a.terms_[i].monomial <=> b.terms_[i].monomial; c != 0) return c;
    if (auto c = a.terms_[i].coeff <=> b.terms_[i].coeff; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace defectforms
