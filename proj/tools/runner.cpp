#include "runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

#include "defectforms/errors.hpp"
#include "defectforms/irreducible.hpp"
#include "json.hpp"

namespace defectforms::cli {
namespace {

using Claims = std::vector<ClaimResult>;

struct Ctx {
  const Scenario& sc;
  Geometry geom;
  ZeroTestConfig cfg;
  TheoryParams params;
  std::vector<std::string> suites;
};

ClaimResult info(std::string id, std::string anchor, bool ok, std::string note) {
  ClaimResult r = skipped_claim(std::move(id), std::move(anchor), std::move(note));
  r.status = ok ? ClaimStatus::Pass : ClaimStatus::Fail;
  return r;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9e", v);
  return buf;
}

std::string vec(const std::array<double, 3>& v) { return "(" + sci(v[0]) + ", " + sci(v[1]) + ", " + sci(v[2]) + ")"; }

TensorForm matrix_form(const ScalarMatrix& m) {
  TensorForm t(0, 0, 2);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) comp(t, {a, b}) = m[a][b];
  return t;
}

void identities(const Ctx& x, Claims& out) {
  const Geometry& g = x.geom;
  const Coframe& fr = g.frame();
  const CartanTensors& c = g.cartan();
  const ConnectionSplit& s = g.split();
  CurvatureSplit cs = curvature_split(g);
  TensorForm e = coframe_form(fr);
  TensorForm rl = with_valence(c.R, 0, 2);
  auto add = [&](const char* id, const char* anchor, const TensorForm& res) {
    out.push_back(make_claim(id, anchor, res, false, x.cfg));
  };
  add("ID-DD-COFRAME", "d of d vanishes on the coframe", d(d(e)));
  add("ID-DD-CONNECTION", "d of d vanishes on the connection", d(d(g.omega())));
  add("ID-SPLIT", "connection reassembly", with_valence(s.levi_civita, 0, 2) + s.defect - with_valence(g.omega(), 0, 2));
  add("ID-LC-ANTISYM", "Levi-Civita connection is antisymmetric", symmetric_part(with_valence(s.levi_civita, 0, 2)));
  add("ID-CONTORTION-ANTISYM", "contortion is antisymmetric", symmetric_part(s.contortion));
  TensorForm st = d(e);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) st.at({a}) += wedge(s.levi_civita.at({a, b}), fr.e(b));
  add("ID-LC-STRUCTURE", "Levi-Civita connection is torsion free", st);
  add("ID-DEFECT-SYM", "symmetric defect part is the non-metricity", symmetric_part(s.defect) - c.Q);
  add("ID-CURVATURE-SPLIT", "curvature split into Riemannian and defect parts", cs.riemannian + cs.nonriemannian - c.R);
  add("ID-CURVATURE-PARTS", "curvature split into antisymmetric and symmetric parts", cs.antisym + cs.sym - rl);
  if (is_zero(c.Q, x.cfg))
    add("ID-RSYM-METRIC", "symmetric curvature vanishes without non-metricity", cs.sym);
  else
    out.push_back(skipped_claim("ID-RSYM-METRIC", "symmetric curvature vanishes without non-metricity",
                                "non-metricity is nonzero"));
  add("ID-HODGE-TWICE", "double Hodge dual is the identity", hodge(hodge(c.T, fr), fr) - c.T);
  Claims b = run_claims(g, {"bianchi"}, x.params, x.cfg);
  out.insert(out.end(), b.begin(), b.end());
}

void decompose(const Ctx& x, Claims& out) {
  const Geometry& g = x.geom;
  Claims t = certify(torsion_pieces(g), g.cartan().T, g.frame(), x.cfg);
  Claims q = certify(nonmetricity_pieces(g), g.cartan().Q, g.frame(), x.cfg);
  out.insert(out.end(), t.begin(), t.end());
  out.insert(out.end(), q.begin(), q.end());
}

void defects(const Ctx& x, Claims& out) {
  const Geometry& g = x.geom;
  const Coframe& fr = g.frame();
  const CartanTensors& c = g.cartan();
  auto add = [&](const char* id, const char* anchor, const TensorForm& res) {
    out.push_back(make_claim(id, anchor, res, false, x.cfg));
  };
  out.push_back(info("CLASS", "geometry classification", true, to_string(classify(g, x.cfg))));

  DefectDensities d = rcw_densities(g);
  DefectDensities dc = rcw_densities_from_components(g);
  add("RCW-COMPONENTS-ALPHA", "dislocation density by forms and by components", matrix_form(d.alpha - dc.alpha));
  add("RCW-COMPONENTS-THETA", "disclination density by forms and by components", matrix_form(d.theta - dc.theta));
  TensorForm zr(0, 0, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int k = 0; k < 3; ++k) comp(zr, {a, b, k}) = d.zeta[a][b][k] - dc.zeta[a][b][k];
  add("RCW-COMPONENTS-ZETA", "metrical disclination density by forms and by components", zr);
  RcwForms f = rcw_reconstruct(d, fr);
  TensorForm rl = with_valence(c.R, 0, 2);
  add("RCW-ROUNDTRIP-T", "torsion rebuilt from dislocations", f.T - c.T);
  add("RCW-ROUNDTRIP-RA", "antisymmetric curvature rebuilt from disclinations", f.R_antisym - antisymmetric_part(rl));
  add("RCW-ROUNDTRIP-RS", "symmetric curvature rebuilt from metrical disclinations", f.R_sym - symmetric_part(rl));

  Admissibility adm = gt_admissibility(g, x.params, x.cfg);
  std::string flags = std::string("P_zero=") + (adm.p_zero ? "true" : "false") +
                      " Q_in_image=" + (adm.q_in_image ? "true" : "false") + " R_zero=" + (adm.r_zero ? "true" : "false");
  out.push_back(info("GT-ADMISSIBILITY", "teleparallel admissibility", true, flags));
  if (adm.r_zero) {
    DefectDensities gt = gt_densities(g, x.params);
    add("GT-ROUNDTRIP-T", "torsion rebuilt from teleparallel densities",
        gt_torsion_from_densities(gt.alpha, gt.theta, x.params, fr) - c.T);
  } else {
    out.push_back(skipped_claim("GT-ROUNDTRIP-T", "torsion rebuilt from teleparallel densities", "curvature is nonzero"));
  }
  if (adm.r_zero && is_zero(c.Q, x.cfg))
    add("GT-Q0-REDUCTION", "teleparallel dislocations reduce to the review theory", matrix_form(gt_alpha(g, x.params) - d.alpha));
  else
    out.push_back(skipped_claim("GT-Q0-REDUCTION", "teleparallel dislocations reduce to the review theory",
                                "needs zero curvature and non-metricity"));

  if (x.sc.theta) {
    const ScalarMatrix& th = *x.sc.theta;
    TensorForm q = gt_q_from_theta(th, x.params, fr, x.cfg);
    add("THETA-ROUNDTRIP", "disclinations to non-metricity and back", matrix_form(gt_theta(q, fr, x.params) - th));
  }
}

void continuity(const Ctx& x, Claims& out) {
  Claims r = run_claims(x.geom, x.suites.empty() ? std::vector<std::string>{"all"} : x.suites, x.params, x.cfg);
  out.insert(out.end(), r.begin(), r.end());
}

void holonomy(const Ctx& x, Claims& out) {
  const Geometry& g = x.geom;
  const NumericConfig& nc = x.sc.numeric;
  bool metric = is_zero(g.cartan().Q, x.cfg);
  for (const auto& [name, curve] : x.sc.curves) {
    FrameVector u = parallel_transport(g, curve, x.sc.u, nc);
    out.push_back(info("HOL-TRANSPORT:" + name, "parallel transport endpoint", true, "U " + vec(u)));
    if (!curve.closed()) {
      NumericConfig base = nc;
      base.ode_steps = 16;
      Convergence cv = transport_convergence(g, curve, x.sc.u, base);
      bool ok = cv.ratio == 0 || std::abs(cv.ratio - 16) <= 16 * 0.3;
      out.push_back(info("HOL-ORDER:" + name, "fourth-order transport", ok,
                         "errors " + sci(cv.coarse_error) + " " + sci(cv.fine_error) + " ratio " + sci(cv.ratio)));
      continue;
    }
    DriftResult dr = product_drift(g, curve, x.sc.u, x.sc.v, nc);
    double gap = std::abs(dr.drift - dr.line_prediction);
    out.push_back(info("HOL-DRIFT:" + name, "scalar product drift against its line integral",
                       gap <= 1e-6 * std::max(1.0, std::abs(dr.drift)),
                       "drift " + sci(dr.drift) + " prediction " + sci(dr.line_prediction)));
    if (metric)
      out.push_back(info("HOL-METRIC:" + name, "metric-compatible transport keeps scalar products",
                         std::abs(dr.drift) <= 1e-8, "drift " + sci(dr.drift)));
    else
      out.push_back(skipped_claim("HOL-METRIC:" + name, "metric-compatible transport keeps scalar products",
                                  "non-metricity is nonzero"));
  }
  for (const auto& [name, patch] : x.sc.patches) {
    double worst = 0;
    PiecewiseCurve edge = patch.boundary();
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const Form& w = g.omega().at({a, b});
        worst = std::max(worst, std::abs(line_integral(w, edge, nc) - surface_integral(d(w), patch, nc)));
      }
    out.push_back(info("STOKES:" + name, "Stokes theorem on the connection", worst <= 1e-8, "worst gap " + sci(worst)));
    if (g.frame().is_identity()) {
      BurgersFrank bf = burgers_frank(g, rcw_densities(g), patch, nc);
      out.push_back(info("FLUX:" + name, "Burgers and Frank vectors", true,
                         "B " + vec(bf.burgers) + " Omega " + vec(bf.frank)));
    } else {
      out.push_back(skipped_claim("FLUX:" + name, "Burgers and Frank vectors", "needs the identity coframe"));
    }
  }
}

const std::map<std::string, std::function<void(const Ctx&, Claims&)>>& table() {
  static const std::map<std::string, std::function<void(const Ctx&, Claims&)>> t{
      {"identities", identities}, {"decompose", decompose}, {"defects", defects},
      {"continuity", continuity}, {"holonomy", holonomy},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"identities", "decompose", "defects", "continuity", "holonomy", "all"};
  return c;
}

int Report::count(ClaimStatus s) const {
  return static_cast<int>(std::count_if(claims.begin(), claims.end(), [&](const ClaimResult& r) { return r.status == s; }));
}

std::string Report::text() const {
  std::string out;
  for (const auto& r : claims) out += format_claim(r);
  out += "SUMMARY PASS=" + std::to_string(count(ClaimStatus::Pass)) + " FAIL=" + std::to_string(count(ClaimStatus::Fail)) +
         " REPORT=" + std::to_string(count(ClaimStatus::Report)) + " SKIP=" + std::to_string(count(ClaimStatus::Skip)) +
         "\n";
  return out;
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["claims"] = nlohmann::ordered_json::array();
  for (const auto& r : claims) {
    nlohmann::ordered_json c;
    c["claim_id"] = r.claim_id;
    c["anchor"] = r.anchor;
    c["status"] = to_string(r.status);
    c["nonzero"] = r.discrepancy.size();
    c["terms"] = nlohmann::ordered_json::array();
    if (r.status != ClaimStatus::Pass)
      for (const auto& t : r.discrepancy) c["terms"].push_back({{"indices", t.indices}, {"residual", t.residual.to_string()}});
    c["note"] = r.note;
    j["claims"].push_back(std::move(c));
  }
  j["summary"] = {{"PASS", count(ClaimStatus::Pass)},
                  {"FAIL", count(ClaimStatus::Fail)},
                  {"REPORT", count(ClaimStatus::Report)},
                  {"SKIP", count(ClaimStatus::Skip)}};
  return j.dump(2) + "\n";
}

int Report::exit_code(bool strict_report) const {
  if (count(ClaimStatus::Fail) > 0) return 1;
  if (strict_report && count(ClaimStatus::Report) > 0) return 1;
  return 0;
}

Report run(const std::string& command, const Scenario& scenario, const RunOptions& options) {
  if (std::find(commands().begin(), commands().end(), command) == commands().end())
    throw DomainError("unknown command '" + command + "'");
  for (const auto& s : options.suites)
    if (s != "all" && std::find(claim_suites().begin(), claim_suites().end(), s) == claim_suites().end())
      throw DomainError("unknown claim suite '" + s + "'");
  ZeroTestConfig cfg = scenario.zero;
  if (options.seed) cfg.seed = *options.seed;
  if (options.points) cfg.num_points = *options.points;
  cfg.validate();
  Ctx x{scenario, scenario.geometry(), cfg, scenario.params(), options.suites};
  Report rep;
  rep.command = command;
  for (const auto& [name, fn] : table())
    if (command == "all" || command == name) fn(x, rep.claims);
  std::stable_sort(rep.claims.begin(), rep.claims.end(),
                   [](const ClaimResult& a, const ClaimResult& b) { return a.claim_id < b.claim_id; });
  rep.claims.erase(std::unique(rep.claims.begin(), rep.claims.end(),
                               [](const ClaimResult& a, const ClaimResult& b) { return a.claim_id == b.claim_id; }),
                   rep.claims.end());
  return rep;
}

}  // namespace defectforms::cli
