#pragma once

#include <array>

#include "defectforms/scalar_field.hpp"

namespace defectforms {

/// 3x3 matrix of scalar fields, m[row][column], indices 0-based.
using ScalarMatrix = std::array<std::array<ScalarField, 3>, 3>;

ScalarMatrix identity_matrix();
ScalarMatrix transpose(const ScalarMatrix& m);
ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix scaled(const ScalarMatrix& m, const ScalarField& f);

ScalarField determinant(const ScalarMatrix& m);

/// Minor of rows {r0,r1} and columns {c0,c1}.
ScalarField minor2(const ScalarMatrix& m, int r0, int r1, int c0, int c1);

/// Exact inverse by cofactors; throws DomainError when the determinant is
/// identically zero under `cfg`.
ScalarMatrix inverse(const ScalarMatrix& m, const ZeroTestConfig& cfg = {});

bool is_zero(const ScalarMatrix& m, const ZeroTestConfig& cfg = {});

}  // namespace defectforms
