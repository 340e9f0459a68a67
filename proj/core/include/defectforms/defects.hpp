#pragma once

#include <array>
#include <string>
#include <vector>

#include "defectforms/claims.hpp"
#include "defectforms/components.hpp"
#include "defectforms/geometry.hpp"

namespace defectforms {

enum class Theory { RCW, GT };

/// alpha[a][b] = alpha^{ab}, theta[a][b] = theta^{ab}, zeta[a][b][c] = zeta_ab^c.
struct DefectDensities {
  ScalarMatrix alpha, theta;
  std::array<ScalarMatrix, 3> zeta;
  Theory theory = Theory::RCW;
};

/// Unit-conversion constant C and the derived A, B, K.
struct TheoryParams {
  Rational C = 1, A = Rational(1, 3), B = Rational(-1, 15), K = 1;
};

/// Throws DomainError for C = 0.
TheoryParams solve_constants(const Rational& c);

/// Q_c = delta^ab Q_abc and P_a = Q_ab^b.
struct Traces {
  std::array<ScalarField, 3> weyl, second;
};
Traces traces(const Geometry& geom);

DefectDensities rcw_densities(const Geometry& geom);
/// The same densities through the component formulas with epsilon loops.
DefectDensities rcw_densities_from_components(const Geometry& geom);

struct RcwForms {
  TensorForm T;          // (1,0) 2-form
  TensorForm R_antisym;  // (0,2) 2-form
  TensorForm R_sym;      // (0,2) 2-form
};
RcwForms rcw_reconstruct(const DefectDensities& d, const Coframe& frame);

ScalarMatrix gt_theta(const Geometry& geom, const TheoryParams& p);
/// theta from a non-metricity (0,2) 1-form given in the coordinate basis.
ScalarMatrix gt_theta(const TensorForm& q, const Coframe& frame, const TheoryParams& p);
/// Q^{bc} = C (theta^kb *e_k^c + theta^kc *e_k^b + delta^bc theta^mn *e_mn).
/// Throws DomainError when theta is not traceless.
TensorForm gt_q_from_theta(const ScalarMatrix& theta, const TheoryParams& p, const Coframe& frame,
                           const ZeroTestConfig& cfg = {});
/// alpha^{ab} = 1/2 eps^{amn} T^b_mn + 4C theta^ab - C theta^ba.
ScalarMatrix gt_alpha(const Geometry& geom, const TheoryParams& p);
/// alpha^{ab} = *(Omega^{bc} ^ e_c ^ e^a) with Omega the antisymmetric defect part.
ScalarMatrix gt_alpha_antisymmetric_route(const Geometry& geom);
/// T^a = (alpha^ba - 4C theta^ba + C theta^ab) *e_b.
TensorForm gt_torsion_from_densities(const ScalarMatrix& alpha, const ScalarMatrix& theta, const TheoryParams& p,
                                     const Coframe& frame);
DefectDensities gt_densities(const Geometry& geom, const TheoryParams& p);

struct Admissibility {
  bool p_zero, q_in_image, r_zero;
};
Admissibility gt_admissibility(const Geometry& geom, const TheoryParams& p, const ZeroTestConfig& cfg = {});

/// Suites: "bianchi", "rcw-continuity", "semi-metric", "metric", "component",
/// "gt", "linear"; "all" selects every suite.
const std::vector<std::string>& claim_suites();
/// Ids of the direct-definition identities backing a claim.
std::vector<std::string> oracle_claims(const std::string& id);

/// Evaluates every claim of the selected suites, sorted by claim id. Claims
/// whose geometry class does not apply come back as SKIP.
std::vector<ClaimResult> run_claims(const Geometry& geom, const std::vector<std::string>& suites,
                                    const TheoryParams& p = {}, const ZeroTestConfig& cfg = {});

struct LinearResiduals {
  double res1, res2;
};
/// Rescales the defect part (omega = levi-civita + s L), recomputes the RCW
/// densities and returns the magnitudes of the linearized equations'
/// residuals at `at`.
LinearResiduals linearized_continuity(const Geometry& geom, const Rational& scale,
                                      const std::array<double, 3>& at = {0.3, -0.2, 0.45});

std::string to_string(const ScalarMatrix& m);

}  // namespace defectforms
