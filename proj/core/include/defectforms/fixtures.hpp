#pragma once

#include <string>
#include <vector>

#include "defectforms/geometry.hpp"
#include "defectforms/random.hpp"

namespace defectforms {

/// Identity coframe, omega = 0.
Geometry fixture_g0();
/// Identity coframe, omega = gauge_connection(I + x E_12).
Geometry fixture_g1();
/// Identity coframe, Cayley gauge with S = z (E_12 - E_21).
Geometry fixture_g2();
/// symmetric_coframe(I + x E_12, coordinates) with the same gauge connection.
Geometry fixture_g3();
/// Identity coframe, conformal gauge with f = 1 + x and S = z (E_12 - E_21).
Geometry fixture_g4();

/// Identity coframe, omega^1_2 = -omega^2_1 = dx + 2 dz: constant torsion, R = 0.
Geometry fixture_linear_cartesian();

/// "g0".."g4"; throws DomainError for other names.
Geometry named_fixture(const std::string& name);
const std::vector<std::string>& fixture_names();

/// Generators of seeded random geometries. Coframes are unimodular with
/// entries of degree <= 2 unless stated otherwise.
enum class FixtureFamily {
  MetricAffine,         // random omega
  RiemannCartan,        // antisymmetric omega
  SemiMetric,           // antisymmetric part plus phi delta_ab
  GeneralTeleparallel,  // pure gauge with a random unimodular Lambda
  Cayley,               // pure gauge with a Cayley rotation
  Symmetric,            // symmetric_coframe with a triangular F
  Conformal,            // conformal_gauge
  FlatRiemannCartan,    // rotated symmetric coframe (flat Levi-Civita) with antisymmetric omega
};

std::string to_string(FixtureFamily family);

Geometry random_geometry(RandomSource& rng, FixtureFamily family);

/// Random (1,1) 1-form with entries of degree <= max_degree.
TensorForm random_connection(RandomSource& rng, int max_degree, bool antisymmetric);

}  // namespace defectforms
