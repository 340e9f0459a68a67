#pragma once

#include <vector>

#include "defectforms/claims.hpp"
#include "defectforms/geometry.hpp"

namespace defectforms {

/// Torsion split into a trace-free, non-axial part (5 components), a
/// vector part (3) and an axial part (1).
struct TorsionDecomposition {
  TensorForm trace_one_form;  // T = i_a T^a
  TensorForm sigma;           // e_a ^ T^a
  TensorForm piece1, piece2, piece3;
};

/// Non-metricity split into pieces with 3, 9, 3 and 3 components.
struct NonmetricityDecomposition {
  TensorForm tracefree;  // Q_ab - delta_ab Q / 3
  TensorForm weyl;       // Q = delta^ab Q_ab
  TensorForm theta_a;    // *(tracefree_ab ^ e^b), (0,1) 1-form
  TensorForm theta;      // e^a ^ theta_a
  TensorForm omega_a;    // theta_a - i_a theta / 2
  TensorForm lambda_a;   // i^b tracefree_ab, (0,1) 0-form
  TensorForm lambda;     // lambda_a e^a
  TensorForm piece1, piece2, piece3, piece4;
  TensorForm second_trace;  // P_a = i^b Q_ab
};

TorsionDecomposition torsion_pieces(const TensorForm& torsion, const Coframe& frame);
TorsionDecomposition torsion_pieces(const Geometry& geom);
NonmetricityDecomposition nonmetricity_pieces(const TensorForm& q, const Coframe& frame);
NonmetricityDecomposition nonmetricity_pieces(const Geometry& geom);

/// Sum, trace and orthogonality certificates; each must PASS.
std::vector<ClaimResult> certify(const TorsionDecomposition& t, const TensorForm& torsion, const Coframe& frame,
                                 const ZeroTestConfig& cfg = {});
std::vector<ClaimResult> certify(const NonmetricityDecomposition& n, const TensorForm& q, const Coframe& frame,
                                 const ZeroTestConfig& cfg = {});

/// Ranks of the piece projectors at `p`, over frame-constant inputs.
/// Generic values are {5,3,1} and {7,5,3,3}.
std::vector<int> torsion_piece_ranks(const Coframe& frame, const Point& p);
std::vector<int> nonmetricity_piece_ranks(const Coframe& frame, const Point& p);

/// Exact rank of a rational matrix given as rows.
int rank(std::vector<std::vector<Rational>> rows);

}  // namespace defectforms
