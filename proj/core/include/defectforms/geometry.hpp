#pragma once

#include <memory>
#include <string>

#include "defectforms/exterior.hpp"

namespace defectforms {

/// Non-metricity Q_ab (0,2; degree 1), torsion T^a (1,0; degree 2) and
/// curvature R^a_b (1,1; degree 2).
struct CartanTensors {
  TensorForm Q, T, R;
};

/// Parts of the connection: omega_ab = levi_civita_ab + defect_ab.
struct ConnectionSplit {
  TensorForm levi_civita;   // (1,1)
  TensorForm contortion;    // (0,2)
  TensorForm disformation;  // (0,2)
  TensorForm defect;        // (0,2), contortion + disformation
  TensorForm antisym;       // (0,2), omega_[ab]
};

struct CurvatureSplit {
  TensorForm antisym;        // R_[ab]
  TensorForm sym;            // R_(ab)
  TensorForm riemannian;     // dw~ + w~ ^ w~, (1,1)
  TensorForm nonriemannian;  // D~L + L ^ L, (1,1)
};

struct BianchiResiduals {
  TensorForm res1;  // DQ_ab - R_(ab)
  TensorForm res2;  // DT^a - R^a_b ^ e^b
  TensorForm res3;  // DR^a_b
};

/// Coframe plus a (1,1)-valued connection 1-form omega^a_b.
///
/// Cartan tensors and the connection split are computed on first use and
/// cached; copies share the cache, which is filled at most once even under
/// concurrent access.
class Geometry {
 public:
  /// Throws DomainError unless omega is a coordinate-basis (1,1) 1-form.
  Geometry(Coframe frame, TensorForm omega);

  const Coframe& frame() const { return frame_; }
  const TensorForm& omega() const { return omega_; }

  const CartanTensors& cartan() const;
  const ConnectionSplit& split() const;

 private:
  struct Cache;
  Coframe frame_;
  TensorForm omega_;
  std::shared_ptr<Cache> cache_;
};

/// Re-labels index positions (Euclidean delta_ab raises and lowers freely).
TensorForm with_valence(const TensorForm& a, int upper, int lower);
/// Swaps the two frame indices of a rank-2 tensor form.
TensorForm swap_indices(const TensorForm& a);
TensorForm symmetric_part(const TensorForm& a);
TensorForm antisymmetric_part(const TensorForm& a);

/// The e^a as a (1,0) 1-form.
TensorForm coframe_form(const Coframe& frame);

/// Copies of the cached tensors; use Geometry::cartan() to avoid the copy.
CartanTensors cartan_tensors(const Geometry& geom);

/// Covariant exterior derivative with respect to the connection `omega`
/// ((1,1) 1-form): d plus omega ^ on each upper slot, minus on each lower one.
TensorForm cov_d(const TensorForm& omega, const TensorForm& a);
TensorForm cov_d(const Geometry& geom, const TensorForm& a);

TensorForm levi_civita(const Coframe& frame);
ConnectionSplit connection_split(const Geometry& geom);
CurvatureSplit curvature_split(const Geometry& geom);
BianchiResiduals bianchi_residuals(const Geometry& geom);

enum class GeometryClass {
  Minkowski,
  Riemann,
  MetricTeleparallel,
  SymmetricTeleparallel,
  RiemannCartan,
  RiemannWeyl,
  GeneralTeleparallel,
  MetricAffine,
};

std::string to_string(GeometryClass c);
GeometryClass classify(const Geometry& geom, const ZeroTestConfig& cfg = {});

/// Invertible matrix field Lambda^a_b with its exact inverse.
class GaugeField {
 public:
  /// Throws DomainError when det(lambda) is identically zero.
  explicit GaugeField(ScalarMatrix lambda, const ZeroTestConfig& cfg = {});
  const ScalarMatrix& matrix() const { return lambda_; }
  const ScalarMatrix& inverse() const { return inverse_; }

 private:
  ScalarMatrix lambda_, inverse_;
};

/// omega = Lambda^{-1} d Lambda, a flat connection.
TensorForm gauge_connection(const GaugeField& lambda);
/// (I - S)(I + S)^{-1} for antisymmetric S; throws DomainError on bad input.
GaugeField cayley_rotation(const ScalarMatrix& s, const ZeroTestConfig& cfg = {});
/// e^a = (Lambda^{-1})^a_b dF^b.
Coframe symmetric_coframe(const GaugeField& lambda, const std::array<ScalarField, 3>& f, const ZeroTestConfig& cfg = {});
/// f times cayley_rotation(S).
GaugeField conformal_gauge(const ScalarField& f, const ScalarMatrix& s, const ZeroTestConfig& cfg = {});

}  // namespace defectforms
