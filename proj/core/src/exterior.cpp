#include "defectforms/exterior.hpp"

#include <bit>
#include <sstream>

#include "defectforms/errors.hpp"

namespace defectforms {
namespace {

constexpr std::array<std::array<IndexMask, 3>, 4> kSlotMasks{{{0, 0, 0}, {1, 2, 4}, {3, 5, 6}, {7, 0, 0}}};
constexpr std::array<std::size_t, 4> kSlotCounts{1, 3, 3, 1};
// Row/column index pairs of the 2-form slots (12), (13), (23).
constexpr std::array<std::array<int, 2>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};

int count_slots(int degree) { return degree >= 0 && degree <= 3 ? static_cast<int>(kSlotCounts[degree]) : 0; }

/// Sign of moving the indices of `a` past those of `b` into increasing order.
int merge_sign(IndexMask a, IndexMask b) {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    if (a & (1u << i)) inversions += std::popcount(b & ((1u << i) - 1));
  return inversions % 2 ? -1 : 1;
}

std::size_t pow3(int n) {
  std::size_t r = 1;
  for (int i = 0; i < n; ++i) r *= 3;
  return r;
}

}  // namespace

int epsilon(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  // Even permutations of (0,1,2) are cyclic shifts.
  return ((b - a + 3) % 3 == 1) ? 1 : -1;
}

int delta(int a, int b) { return a == b ? 1 : 0; }

Form::Form(int degree) : degree_(degree), c_(static_cast<std::size_t>(count_slots(degree))) {
  if (degree < 0) throw DomainError("negative form degree");
}

Form::Form(const ScalarField& f) : degree_(0), c_{f} {}

Form::Form(int degree, std::vector<ScalarField> coeffs) : Form(degree) {
  if (coeffs.size() != c_.size()) throw DomainError("wrong number of form coefficients");
  c_ = std::move(coeffs);
}

Form Form::basis(IndexMask mask, const ScalarField& coeff) {
  Form f(std::popcount(mask));
  f.at(mask) = coeff;
  return f;
}

IndexMask Form::slot_mask(int degree, std::size_t slot) { return kSlotMasks[degree][slot]; }

std::size_t Form::mask_slot(IndexMask mask) {
  switch (mask) {
    case 0: case 1: case 3: case 7: return 0;
    case 2: case 5: return 1;
    case 4: case 6: return 2;
    default: throw DomainError("invalid multi-index mask");
  }
}

bool Form::is_exactly_zero() const {
  for (const auto& f : c_)
    if (!f.is_exactly_zero()) return false;
  return true;
}

Form Form::operator-() const {
  Form r = *this;
  for (auto& f : r.c_) f = -f;
  return r;
}

Form operator+(const Form& a, const Form& b) {
  if (a.degree_ != b.degree_) throw DomainError("adding forms of different degree");
  Form r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

Form operator-(const Form& a, const Form& b) {
  if (a.degree_ != b.degree_) throw DomainError("subtracting forms of different degree");
  Form r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
  return r;
}

Form operator*(const ScalarField& f, const Form& a) {
  Form r = a;
  if (f.is_exactly_zero()) {
    for (auto& c : r.c_) c = ScalarField();
    return r;
  }
  for (auto& c : r.c_)
    if (!c.is_exactly_zero()) c = f * c;
  return r;
}

std::string Form::to_string() const {
  if (degree_ == 0) return c_[0].to_string();
  std::ostringstream os;
  bool first = true;
  for (std::size_t s = 0; s < c_.size(); ++s) {
    if (c_[s].is_exactly_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (!(c_[s] == ScalarField(1))) os << "(" << c_[s].to_string() << ")*";
    IndexMask m = slot_mask(degree_, s);
    bool lead = true;
    for (int i = 0; i < 3; ++i) {
      if (!(m & (1u << i))) continue;
      if (!lead) os << "^";
      lead = false;
      os << "dx" << (i + 1);
    }
  }
  if (first) return "0";
  return os.str();
}

Form wedge(const Form& a, const Form& b) {
  Form r(a.degree() + b.degree());
  if (r.size() == 0) return r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_exactly_zero()) continue;
    IndexMask ma = Form::slot_mask(a.degree(), i);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_exactly_zero()) continue;
      IndexMask mb = Form::slot_mask(b.degree(), j);
      if (ma & mb) continue;
      ScalarField p = a[i] * b[j];
      if (merge_sign(ma, mb) < 0) p = -p;
      r.at(ma | mb) += p;
    }
  }
  return r;
}

Form d(const Form& a) {
  Form r(a.degree() + 1);
  if (r.size() == 0) return r;
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (a[s].is_exactly_zero()) continue;
    IndexMask m = Form::slot_mask(a.degree(), s);
    for (int k = 0; k < 3; ++k) {
      if (m & (1u << k)) continue;
      ScalarField p = differentiate(a[s], k);
      if (p.is_exactly_zero()) continue;
      if (merge_sign(1u << k, m) < 0) p = -p;
      r.at(m | (1u << k)) += p;
    }
  }
  return r;
}

Form interior(const VectorField& v, const Form& a) {
  if (a.degree() == 0) throw DomainError("interior product of a 0-form");
  Form r(a.degree() - 1);
  if (a.size() == 0) return r;
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (a[s].is_exactly_zero()) continue;
    IndexMask m = Form::slot_mask(a.degree(), s);
    int pos = 0;
    for (int k = 0; k < 3; ++k) {
      if (!(m & (1u << k))) continue;
      if (!v.c[k].is_exactly_zero()) {
        ScalarField p = v.c[k] * a[s];
        if (pos % 2) p = -p;
        r.at(m & ~(1u << k)) += p;
      }
      ++pos;
    }
  }
  return r;
}

bool is_zero(const Form& a, const ZeroTestConfig& cfg) {
  for (const auto& f : a.coefficients())
    if (!is_zero(f, cfg)) return false;
  return true;
}

Form hodge_frame(const Form& a) {
  if (a.degree() > 3) return a;
  Form r(3 - a.degree());
  for (std::size_t s = 0; s < a.size(); ++s) {
    IndexMask m = Form::slot_mask(a.degree(), s);
    IndexMask c = 7u & ~m;
    r.at(c) = merge_sign(m, c) < 0 ? -a[s] : a[s];
  }
  return r;
}

Coframe::Coframe(ScalarMatrix e, const ZeroTestConfig& cfg) : e_(std::move(e)) {
  identity_ = true;
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < 3; ++i)
      if (!(e_[a][i] == ScalarField(delta(a, i)))) identity_ = false;
  det_ = defectforms::determinant(e_);
  if (is_zero(det_, cfg)) throw DomainError("coframe is degenerate");
  E_ = identity_ ? e_ : defectforms::inverse(e_, cfg);
  inv_det_ = ScalarField(1) / det_;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) {
      minors_e_[p][q] = minor2(e_, kPairs[p][0], kPairs[p][1], kPairs[q][0], kPairs[q][1]);
      minors_E_[p][q] = minor2(E_, kPairs[p][0], kPairs[p][1], kPairs[q][0], kPairs[q][1]);
    }
}

Coframe Coframe::identity() { return Coframe(identity_matrix()); }

Form Coframe::e(int a) const { return Form(1, {e_[a][0], e_[a][1], e_[a][2]}); }

VectorField Coframe::X(int a) const { return VectorField{{E_[0][a], E_[1][a], E_[2][a]}}; }

Form Coframe::to_frame(const Form& a) const {
  if (identity_ || a.degree() == 0 || a.size() == 0) return a;
  Form r(a.degree());
  switch (a.degree()) {
    case 1:
      for (int b = 0; b < 3; ++b)
        for (int i = 0; i < 3; ++i)
          if (!a[i].is_exactly_zero()) r[b] += a[i] * E_[i][b];
      break;
    case 2:
      for (int q = 0; q < 3; ++q)
        for (int p = 0; p < 3; ++p)
          if (!a[p].is_exactly_zero()) r[q] += a[p] * minors_E_[p][q];
      break;
    default:
      r[0] = a[0] * inv_det_;
  }
  return r;
}

Form Coframe::to_coordinate(const Form& a) const {
  if (identity_ || a.degree() == 0 || a.size() == 0) return a;
  Form r(a.degree());
  switch (a.degree()) {
    case 1:
      for (int i = 0; i < 3; ++i)
        for (int b = 0; b < 3; ++b)
          if (!a[b].is_exactly_zero()) r[i] += a[b] * e_[b][i];
      break;
    case 2:
      for (int q = 0; q < 3; ++q)
        for (int p = 0; p < 3; ++p)
          if (!a[p].is_exactly_zero()) r[q] += a[p] * minors_e_[p][q];
      break;
    default:
      r[0] = a[0] * det_;
  }
  return r;
}

Form hodge(const Form& a, const Coframe& frame) {
  return frame.to_coordinate(hodge_frame(frame.to_frame(a)));
}

TensorForm::TensorForm(int degree, int upper, int lower, Basis basis)
    : degree_(degree), upper_(upper), lower_(lower), basis_(basis), comps_(pow3(upper + lower), Form(degree)) {
  if (upper < 0 || lower < 0) throw DomainError("negative index count");
}

TensorForm::TensorForm(const Form& f) : degree_(f.degree()), upper_(0), lower_(0), basis_(Basis::Coordinate), comps_{f} {}

std::size_t TensorForm::flat_index(std::initializer_list<int> idx) const {
  return flat_index(std::vector<int>(idx));
}

std::size_t TensorForm::flat_index(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != rank()) throw DomainError("wrong number of frame indices");
  std::size_t f = 0;
  for (int i : idx) {
    if (i < 0 || i > 2) throw DomainError("frame index out of range");
    f = f * 3 + static_cast<std::size_t>(i);
  }
  return f;
}

std::vector<int> TensorForm::indices(std::size_t flat) const {
  std::vector<int> idx(static_cast<std::size_t>(rank()));
  for (int k = rank() - 1; k >= 0; --k) {
    idx[static_cast<std::size_t>(k)] = static_cast<int>(flat % 3);
    flat /= 3;
  }
  return idx;
}

bool TensorForm::is_exactly_zero() const {
  for (const auto& f : comps_)
    if (!f.is_exactly_zero()) return false;
  return true;
}

bool TensorForm::same_shape(const TensorForm& o) const {
  return degree_ == o.degree_ && upper_ == o.upper_ && lower_ == o.lower_ && basis_ == o.basis_;
}

TensorForm TensorForm::operator-() const {
  TensorForm r = *this;
  for (auto& f : r.comps_) f = -f;
  return r;
}

TensorForm operator+(const TensorForm& a, const TensorForm& b) {
  if (!a.same_shape(b)) throw DomainError("adding tensor forms of different shape");
  TensorForm r = a;
  for (std::size_t i = 0; i < r.comps_.size(); ++i) r.comps_[i] += b.comps_[i];
  return r;
}

TensorForm operator-(const TensorForm& a, const TensorForm& b) {
  if (!a.same_shape(b)) throw DomainError("subtracting tensor forms of different shape");
  TensorForm r = a;
  for (std::size_t i = 0; i < r.comps_.size(); ++i) r.comps_[i] -= b.comps_[i];
  return r;
}

TensorForm operator*(const ScalarField& f, const TensorForm& a) {
  TensorForm r = a;
  for (auto& c : r.comps_) c = f * c;
  return r;
}

TensorForm wedge(const TensorForm& a, const TensorForm& b) {
  if (a.basis() != b.basis()) throw DomainError("wedge of tensor forms in different bases");
  TensorForm r(a.degree() + b.degree(), a.upper() + b.upper(), a.lower() + b.lower(), a.basis());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_exactly_zero()) continue;
    std::vector<int> ia = a.indices(i);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_exactly_zero()) continue;
      std::vector<int> ib = b.indices(j);
      std::vector<int> idx;
      idx.reserve(static_cast<std::size_t>(r.rank()));
      idx.insert(idx.end(), ia.begin(), ia.begin() + a.upper());
      idx.insert(idx.end(), ib.begin(), ib.begin() + b.upper());
      idx.insert(idx.end(), ia.begin() + a.upper(), ia.end());
      idx.insert(idx.end(), ib.begin() + b.upper(), ib.end());
      r.at(idx) += wedge(a[i], b[j]);
    }
  }
  return r;
}

TensorForm d(const TensorForm& a) {
  if (a.basis() != Basis::Coordinate) throw DomainError("exterior derivative needs the coordinate basis");
  TensorForm r(a.degree() + 1, a.upper(), a.lower());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = d(a[i]);
  return r;
}

TensorForm hodge(const TensorForm& a, const Coframe& frame) {
  int deg = a.degree() > 3 ? a.degree() : 3 - a.degree();
  TensorForm r(deg, a.upper(), a.lower(), a.basis());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a.basis() == Basis::Frame ? hodge_frame(a[i]) : hodge(a[i], frame);
  return r;
}

TensorForm interior(const VectorField& v, const TensorForm& a) {
  if (a.basis() != Basis::Coordinate) throw DomainError("interior product needs the coordinate basis");
  if (a.degree() == 0) throw DomainError("interior product of a 0-form");
  TensorForm r(a.degree() - 1, a.upper(), a.lower());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = interior(v, a[i]);
  return r;
}

TensorForm interior(int a, const TensorForm& t, const Coframe& frame) { return interior(frame.X(a), t); }

TensorForm change_basis(const TensorForm& a, const Coframe& frame, Direction direction) {
  Basis target = direction == Direction::ToFrame ? Basis::Frame : Basis::Coordinate;
  if (a.basis() == target) return a;
  TensorForm r(a.degree(), a.upper(), a.lower(), target);
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = direction == Direction::ToFrame ? frame.to_frame(a[i]) : frame.to_coordinate(a[i]);
  return r;
}

bool is_zero(const TensorForm& a, const ZeroTestConfig& cfg) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero(a[i], cfg)) return false;
  return true;
}

namespace {

struct FormSemantics {
  using Value = Form;

  Value number(const Rational& r) { return Form(ScalarField(r)); }
  Value ident(const Token& t) {
    if (t.text == "dx1" || t.text == "dx2" || t.text == "dx3") return Form::dx(t.text[2] - '1');
    auto it = coordinate_variables().find(t.text);
    if (it == coordinate_variables().end()) throw ParseError("unknown identifier '" + t.text + "'", t.line, t.column);
    return Form(ScalarField::coordinate(it->second));
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value mul(const Value& a, const Value& b) {
    if (a.degree() == 0) return a[0] * b;
    if (b.degree() == 0) return b[0] * a;
    throw DomainError("'*' needs a scalar operand; use '^' for the wedge product");
  }
  Value div(const Value& a, const Value& b) {
    if (b.degree() != 0) throw DomainError("division by a form of positive degree");
    return (ScalarField(1) / b[0]) * a;
  }
  Value neg(const Value& a) { return -a; }
  Value power(const Value& a, unsigned e) { return Form(a[0].pow(e)); }
  Value wedge(const Value& a, const Value& b) { return defectforms::wedge(a, b); }
  bool scalar(const Value& v) { return v.degree() == 0; }
};

}  // namespace

Form parse_form(std::string_view text, SourcePos origin) {
  FormSemantics sem;
  detail::ExpressionParser<FormSemantics> parser(tokenize(text, origin), sem);
  return parser.parse_all();
}

}  // namespace defectforms
