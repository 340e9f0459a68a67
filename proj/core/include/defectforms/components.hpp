#pragma once

#include "defectforms/exterior.hpp"

namespace defectforms {

/// Frame components of a tensor-valued p-form as a 0-form tensor with p extra
/// trailing lower indices, A = (1/p!) A_{...i1..ip} e^{i1..ip}, totally
/// antisymmetric in the trailing indices.
TensorForm frame_components(const TensorForm& a, const Coframe& frame);

/// Inverse of frame_components: the trailing `degree` indices become form
/// indices (antisymmetrized) and the result is in the coordinate basis.
TensorForm from_frame_components(const TensorForm& c, int degree, const Coframe& frame);

/// Scalar component of a 0-form tensor.
inline const ScalarField& comp(const TensorForm& t, std::initializer_list<int> idx) { return t.at(idx)[0]; }
inline ScalarField& comp(TensorForm& t, std::initializer_list<int> idx) { return t.at(idx)[0]; }

/// Hodge duals of frame monomials: *1, *e_a, *e_ab, *e_abc in the coordinate basis.
struct FrameDuals {
  explicit FrameDuals(const Coframe& frame);
  Form vol;                                   // *1 = e^123
  std::array<Form, 3> e;                      // e^a
  std::array<Form, 3> star1;                  // *e_a
  std::array<std::array<Form, 3>, 3> star2;   // *e_ab
};

}  // namespace defectforms
