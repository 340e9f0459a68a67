#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "defectforms/transport.hpp"

namespace defectforms::cli {

enum class GeometryKind { Gauge, Cayley, Symmetric, Conformal, Explicit };

std::string to_string(GeometryKind k);

/// A parsed scenario file. Unset matrix entries keep their defaults:
/// lambda and coframe are the identity, S and omega are zero, f = 1 and the
/// potential is (x, y, z).
struct Scenario {
  GeometryKind kind = GeometryKind::Explicit;
  ScalarMatrix lambda = identity_matrix();
  ScalarMatrix s;
  ScalarField f = 1;
  std::array<ScalarField, 3> potential{ScalarField::coordinate(0), ScalarField::coordinate(1),
                                       ScalarField::coordinate(2)};
  ScalarMatrix coframe = identity_matrix();
  TensorForm omega{1, 1, 1};

  Rational c = 1;
  std::optional<ScalarMatrix> theta;

  FrameVector u{1, 0, 0}, v{0, 1, 0};
  std::vector<std::pair<std::string, PiecewiseCurve>> curves;
  std::vector<std::pair<std::string, Patch>> patches;

  ZeroTestConfig zero;
  NumericConfig numeric;

  /// Throws DomainError for a singular gauge, a non-antisymmetric S or a
  /// singular coframe.
  Geometry geometry() const;
  TheoryParams params() const { return solve_constants(c); }

  friend bool operator==(const Scenario& a, const Scenario& b);
};

/// Throws ParseError with the 1-based line and column of the offending text,
/// for syntax and semantic errors alike.
Scenario parse_scenario(std::string_view text);
/// Canonical text; parse_scenario(serialize(s)) == s.
std::string serialize(const Scenario& s);

}  // namespace defectforms::cli
