#pragma once

#include <array>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "defectforms/matrix.hpp"
#include "defectforms/parse.hpp"
#include "defectforms/scalar_field.hpp"

namespace defectforms {

/// Strictly increasing multi-index over {1,2,3} as a bit mask (bit k = index k+1).
using IndexMask = unsigned;

/// Totally antisymmetric symbol with epsilon(0,1,2) = +1 (0-based indices).
int epsilon(int a, int b, int c);
int delta(int a, int b);

/// Differential form of a single degree.
///
/// Coefficients are stored per strictly increasing multi-index, in the order
/// (1),(2),(3) for 1-forms and (12),(13),(23) for 2-forms. Whether the
/// basis is dx^I or e^I is up to the owner; see TensorForm::basis(). Forms of
/// degree above 3 are zero and have no slots.
class Form {
 public:
  Form() : Form(0) {}
  explicit Form(int degree);
  Form(const ScalarField& f);  // NOLINT(google-explicit-constructor)
  Form(int degree, std::vector<ScalarField> coeffs);

  static Form basis(IndexMask mask, const ScalarField& coeff = 1);
  static Form dx(int axis) { return basis(1u << axis); }

  static IndexMask slot_mask(int degree, std::size_t slot);
  static std::size_t mask_slot(IndexMask mask);

  int degree() const { return degree_; }
  std::size_t size() const { return c_.size(); }
  const ScalarField& operator[](std::size_t slot) const { return c_[slot]; }
  ScalarField& operator[](std::size_t slot) { return c_[slot]; }
  const ScalarField& at(IndexMask mask) const { return c_[mask_slot(mask)]; }
  ScalarField& at(IndexMask mask) { return c_[mask_slot(mask)]; }
  const std::vector<ScalarField>& coefficients() const { return c_; }

  bool is_exactly_zero() const;

  Form operator-() const;
  /// Throws DomainError on degree mismatch.
  friend Form operator+(const Form& a, const Form& b);
  friend Form operator-(const Form& a, const Form& b);
  friend Form operator*(const ScalarField& f, const Form& a);
  friend Form operator*(const Form& a, const ScalarField& f) { return f * a; }
  Form& operator+=(const Form& o) { return *this = *this + o; }
  Form& operator-=(const Form& o) { return *this = *this - o; }
  friend bool operator==(const Form& a, const Form& b) = default;

  /// Text in the form grammar, e.g. "(x)*dx1^dx2 + dx1^dx3".
  std::string to_string() const;

 private:
  int degree_;
  std::vector<ScalarField> c_;
};

/// Contravariant vector field v = v^i d/dx^i.
struct VectorField {
  std::array<ScalarField, 3> c;
};

Form wedge(const Form& a, const Form& b);
/// Coordinate exterior derivative; the form must be in the dx basis.
Form d(const Form& a);
/// Antiderivation contraction; throws DomainError for 0-forms.
Form interior(const VectorField& v, const Form& a);
bool is_zero(const Form& a, const ZeroTestConfig& cfg = {});

/// Hodge map on frame-basis coefficients: *e^I = sign(I, I^c) e^{I^c}.
Form hodge_frame(const Form& a);

/// Invertible coframe e^a = e^a_i dx^i with its exact inverse E^i_a.
class Coframe {
 public:
  /// Throws DomainError when det(e) is identically zero.
  explicit Coframe(ScalarMatrix e, const ZeroTestConfig& cfg = {});
  static Coframe identity();

  /// e[a][i]
  const ScalarMatrix& matrix() const { return e_; }
  /// E[i][a]
  const ScalarMatrix& inverse() const { return E_; }
  const ScalarField& determinant() const { return det_; }
  bool is_identity() const { return identity_; }

  /// The 1-form e^a in the coordinate basis.
  Form e(int a) const;
  /// The frame vector X_a = E^i_a d/dx^i, dual to e^a.
  VectorField X(int a) const;

  Form to_frame(const Form& a) const;
  Form to_coordinate(const Form& a) const;

 private:
  ScalarMatrix e_, E_;
  ScalarField det_, inv_det_;
  ScalarMatrix minors_e_, minors_E_;
  bool identity_ = false;
};

/// Hodge map in the coordinate basis, computed through the frame.
Form hodge(const Form& a, const Coframe& frame);

enum class Basis { Coordinate, Frame };
enum class Direction { ToFrame, ToCoordinate };

/// Form of one degree carrying r upper and s lower frame indices.
///
/// Components are flattened row-major over (upper..., lower...), each index
/// 0-based. Operations that differentiate (d) require the coordinate basis.
class TensorForm {
 public:
  TensorForm() : TensorForm(0, 0, 0) {}
  TensorForm(int degree, int upper, int lower, Basis basis = Basis::Coordinate);
  TensorForm(const Form& f);  // NOLINT(google-explicit-constructor)

  int degree() const { return degree_; }
  int upper() const { return upper_; }
  int lower() const { return lower_; }
  int rank() const { return upper_ + lower_; }
  Basis basis() const { return basis_; }
  std::size_t size() const { return comps_.size(); }

  Form& operator[](std::size_t flat) { return comps_[flat]; }
  const Form& operator[](std::size_t flat) const { return comps_[flat]; }
  Form& at(std::initializer_list<int> idx) { return comps_[flat_index(idx)]; }
  const Form& at(std::initializer_list<int> idx) const { return comps_[flat_index(idx)]; }
  Form& at(const std::vector<int>& idx) { return comps_[flat_index(idx)]; }
  const Form& at(const std::vector<int>& idx) const { return comps_[flat_index(idx)]; }

  std::size_t flat_index(std::initializer_list<int> idx) const;
  std::size_t flat_index(const std::vector<int>& idx) const;
  std::vector<int> indices(std::size_t flat) const;

  bool is_exactly_zero() const;
  bool same_shape(const TensorForm& o) const;

  TensorForm operator-() const;
  /// Throws DomainError when shapes differ.
  friend TensorForm operator+(const TensorForm& a, const TensorForm& b);
  friend TensorForm operator-(const TensorForm& a, const TensorForm& b);
  friend TensorForm operator*(const ScalarField& f, const TensorForm& a);
  TensorForm& operator+=(const TensorForm& o) { return *this = *this + o; }
  TensorForm& operator-=(const TensorForm& o) { return *this = *this - o; }
  friend bool operator==(const TensorForm& a, const TensorForm& b) = default;

 private:
  int degree_, upper_, lower_;
  Basis basis_;
  std::vector<Form> comps_;
};

/// Index slots concatenate as (A upper, B upper, A lower, B lower).
TensorForm wedge(const TensorForm& a, const TensorForm& b);
TensorForm d(const TensorForm& a);
TensorForm hodge(const TensorForm& a, const Coframe& frame);
TensorForm interior(const VectorField& v, const TensorForm& a);
/// Contraction with the frame vector X_a.
TensorForm interior(int a, const TensorForm& t, const Coframe& frame);
TensorForm change_basis(const TensorForm& a, const Coframe& frame, Direction direction);
bool is_zero(const TensorForm& a, const ZeroTestConfig& cfg = {});

/// Parses the form grammar: scalars, dx1 dx2 dx3, ^ as wedge (or integer
/// power on scalars), * with a scalar side, / by a scalar, + and - between
/// equal degrees.
Form parse_form(std::string_view text, SourcePos origin = {});

}  // namespace defectforms
