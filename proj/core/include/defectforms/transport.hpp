#pragma once

#include <array>
#include <vector>

#include "defectforms/defects.hpp"

namespace defectforms {

using NumPoint = std::array<double, 3>;
using FrameVector = std::array<double, 3>;

struct NumericConfig {
  int ode_steps = 1024;
  /// Gauss-Legendre points per axis per segment.
  int quad_order = 8;
  double tol = 1e-9;

  /// Throws DomainError unless ode_steps >= 16, quad_order >= 4 and tol > 0.
  void validate() const;
};

using CurveSegment = std::array<MultiPoly, 3>;

/// Chain of polynomial maps [0,1] -> R^3 in the parameter x (variable 0).
class PiecewiseCurve {
 public:
  /// Throws DomainError when consecutive endpoints differ or a closed curve
  /// does not return to its start.
  PiecewiseCurve(std::vector<CurveSegment> segments, bool closed);

  /// Straight segments through the given vertices; closed adds the last edge.
  static PiecewiseCurve polygon(const std::vector<Point>& vertices, bool closed);

  const std::vector<CurveSegment>& segments() const { return segments_; }
  bool closed() const { return closed_; }

  NumPoint position(std::size_t seg, double t) const;
  NumPoint velocity(std::size_t seg, double t) const;

  friend bool operator==(const PiecewiseCurve&, const PiecewiseCurve&) = default;

 private:
  std::vector<CurveSegment> segments_;
  std::vector<CurveSegment> velocity_;
  bool closed_;
};

/// Polynomial map [0,1]^2 -> R^3 in (u, v) = (x, y).
class Patch {
 public:
  explicit Patch(CurveSegment map);
  /// (u, v) -> corner + u*du + v*dv.
  static Patch parallelogram(const Point& corner, const Point& du, const Point& dv);

  const CurveSegment& map() const { return map_; }
  NumPoint position(double u, double v) const;
  /// Columns d/du and d/dv of the Jacobian.
  std::array<NumPoint, 2> tangents(double u, double v) const;
  /// The counterclockwise boundary loop u: 0->1, v: 0->1, u: 1->0, v: 1->0.
  PiecewiseCurve boundary() const;

  friend bool operator==(const Patch&, const Patch&) = default;

 private:
  CurveSegment map_;
  std::array<CurveSegment, 2> jac_;
};

/// unit square in the x1x2 plane, counterclockwise.
PiecewiseCurve unit_square_loop();
Patch unit_square_patch();

/// Floating-point values of every coefficient, indexed [flat component][basis mask slot].
/// Throws PoleError when a denominator factor is within tol of zero at p.
std::vector<std::vector<double>> eval_form(const TensorForm& a, const NumPoint& p, double tol = 1e-12);
/// Throws DomainError (orientation flip) unless det(e) > tol at p.
void check_orientation(const Coframe& frame, const NumPoint& p, double tol = 1e-12);

double line_integral(const Form& a, const PiecewiseCurve& c, const NumericConfig& cfg = {});
/// Scalar-valued (rank 0) degree-1 TensorForm; throws DomainError otherwise.
double line_integral(const TensorForm& a, const PiecewiseCurve& c, const NumericConfig& cfg = {});
double surface_integral(const Form& a, const Patch& s, const NumericConfig& cfg = {});
double surface_integral(const TensorForm& a, const Patch& s, const NumericConfig& cfg = {});

/// RK4 for dU^a/dt = -omega^a_b(gamma') U^b, ode_steps per segment.
FrameVector parallel_transport(const Geometry& geom, const PiecewiseCurve& c, const FrameVector& u0,
                               const NumericConfig& cfg = {});

struct DriftResult {
  double drift;            // U.V at the end minus at the start
  double line_prediction;  // -2 int Q_ab U^a V^b along the transported solutions
};
/// Throws DomainError for an open curve.
DriftResult product_drift(const Geometry& geom, const PiecewiseCurve& loop, const FrameVector& u0,
                          const FrameVector& v0, const NumericConfig& cfg = {});

struct Convergence {
  double coarse_error, fine_error, ratio;
};
/// Endpoint errors at ode_steps n and 2n against a Richardson reference from
/// 2n and 4n. ratio is 0 when both errors are at roundoff level.
Convergence transport_convergence(const Geometry& geom, const PiecewiseCurve& c, const FrameVector& u0,
                                  const NumericConfig& cfg = {});

struct BurgersFrank {
  std::array<double, 3> burgers, frank;
};
/// Fluxes of the Burgers and Frank density 2-forms through the patch.
/// Requires the identity coframe; throws DomainError otherwise.
BurgersFrank burgers_frank(const Geometry& geom, const DefectDensities& d, const Patch& s,
                           const NumericConfig& cfg = {});

}  // namespace defectforms
