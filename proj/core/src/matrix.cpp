#include "defectforms/matrix.hpp"

#include "defectforms/errors.hpp"

namespace defectforms {

ScalarMatrix identity_matrix() {
  ScalarMatrix m;
  for (int i = 0; i < 3; ++i) m[i][i] = 1;
  return m;
}

ScalarMatrix transpose(const ScalarMatrix& m) {
  ScalarMatrix t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (!a[i][k].is_exactly_zero() && !b[k][j].is_exactly_zero()) r[i][j] += a[i][k] * b[k][j];
  return r;
}

ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}

ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][j] - b[i][j];
  return r;
}

ScalarMatrix scaled(const ScalarMatrix& m, const ScalarField& f) {
  ScalarMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[i][j] * f;
  return r;
}

ScalarField minor2(const ScalarMatrix& m, int r0, int r1, int c0, int c1) {
  return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
}

ScalarField determinant(const ScalarMatrix& m) {
  return m[0][0] * minor2(m, 1, 2, 1, 2) - m[0][1] * minor2(m, 1, 2, 0, 2) + m[0][2] * minor2(m, 1, 2, 0, 1);
}

ScalarMatrix inverse(const ScalarMatrix& m, const ZeroTestConfig& cfg) {
  ScalarMatrix cof;
  for (int i = 0; i < 3; ++i) {
    int r0 = i == 0 ? 1 : 0, r1 = i == 2 ? 1 : 2;
    for (int j = 0; j < 3; ++j) {
      int c0 = j == 0 ? 1 : 0, c1 = j == 2 ? 1 : 2;
      ScalarField c = minor2(m, r0, r1, c0, c1);
      cof[i][j] = (i + j) % 2 ? -c : c;
    }
  }
  ScalarField det = m[0][0] * cof[0][0] + m[0][1] * cof[0][1] + m[0][2] * cof[0][2];
  if (is_zero(det, cfg)) throw DomainError("matrix is singular");
  ScalarMatrix inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) inv[i][j] = cof[j][i] / det;
  return inv;
}

bool is_zero(const ScalarMatrix& m, const ZeroTestConfig& cfg) {
  for (const auto& row : m)
    for (const auto& f : row)
      if (!is_zero(f, cfg)) return false;
  return true;
}

}  // namespace defectforms
