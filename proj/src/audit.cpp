// SPDX-License-Identifier: Apache-2.0
#include "cosmoweyl/audit.hpp"

#include <cmath>
#include <cstdio>

namespace cosmoweyl::audit {

const AuditEntry* AuditReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

std::string AuditReport::to_json() const {
  std::string s = "{\"foliation\":\"" + foliation + "\",\"grid\":{\"ntheta\":" +
                  std::to_string(ntheta) + ",\"nphi\":" + std::to_string(nphi) +
                  "},\"assumptions\":[";
  char buf[128];
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    std::snprintf(buf, sizeof(buf), "{\"name\":\"%s\",\"measured\":%.17g,\"threshold\":%.17g,\"holds\":%s}",
                  e.name.c_str(), e.measured, e.threshold, e.holds ? "true" : "false");
    s += buf;
    if (i + 1 < entries.size()) s += ",";
  }
  s += "],\"verdict\":";
  s += verdict ? "true" : "false";
  s += "}";
  return s;
}

AuditReport audit_foliation(const CoefficientFields& f, const analysis::SphereGrid& grid,
                            double eps0, double C0, const std::string& foliation_name) {
  AuditReport rep;
  rep.foliation = foliation_name;
  rep.ntheta = static_cast<int>(grid.theta.size());
  rep.nphi = grid.nphi;

  auto sup = [&](const std::function<double(double, double)>& g) {
    double m = -1e300;
    for (double th : grid.theta)
      for (int j = 0; j < grid.nphi; ++j) m = std::max(m, g(th, grid.phi_node(j)));
    return m;
  };
  auto inf = [&](const std::function<double(double, double)>& g) {
    double m = 1e300;
    for (double th : grid.theta)
      for (int j = 0; j < grid.nphi; ++j) m = std::min(m, g(th, grid.phi_node(j)));
    return m;
  };
  auto push = [&](const std::string& name, double measured, double threshold) {
    rep.entries.push_back({name, measured, threshold, measured <= threshold});
  };

  // BA:I.i - expansion signs; measured = -min (holds iff both positive)
  double min_tr = std::min(inf(f.trchi), inf(f.trchib));
  rep.entries.push_back({"BA:I.i", min_tr, 0.0, min_tr > 0.0});

  // BA:I.ii - Omega|2 omegahat - trchi| <= C0 trchi, and conjugate
  push("BA:I.ii", std::max(sup([&](double t, double p) {
                    return f.Omega(t, p) * std::abs(2.0 * f.omegahat(t, p) - f.trchi(t, p)) /
                           f.trchi(t, p);
                  }),
                  sup([&](double t, double p) {
                    return f.Omega(t, p) * std::abs(2.0 * f.omegabhat(t, p) - f.trchib(t, p)) /
                           f.trchib(t, p);
                  })),
       C0);

  // BA:I.iii - |Omega trchi - avg| <= eps0 avg, and conjugate
  {
    auto otc = [&](double t, double p) { return f.Omega(t, p) * f.trchi(t, p); };
    auto otcb = [&](double t, double p) { return f.Omega(t, p) * f.trchib(t, p); };
    double avg1 = analysis::sphere_average(otc, f.gslash, grid);
    double avg2 = analysis::sphere_average(otcb, f.gslash, grid);
    double dev = std::max(
        sup([&](double t, double p) { return std::abs(otc(t, p) - avg1) / avg1; }),
        sup([&](double t, double p) { return std::abs(otcb(t, p) - avg2) / avg2; }));
    push("BA:I.iii", dev, eps0);
  }

  // BA:I.iv in both strengths: absolute Omega|chihat| <= C0 and relative
  // Omega|chihat| <= C0 trchi (the caller picks the interpretation)
  {
    double abs_m = std::max(
        sup([&](double t, double p) { return f.Omega(t, p) * f.chihat_norm(t, p); }),
        std::max(sup([&](double t, double p) { return f.Omega(t, p) * f.chibhat_norm(t, p); }),
                 sup([&](double t, double p) { return f.Omega(t, p) * f.zeta_norm(t, p); })));
    push("BA:I.iv", abs_m, C0);
    double rel_m = std::max(
        sup([&](double t, double p) { return f.Omega(t, p) * f.chihat_norm(t, p) / f.trchi(t, p); }),
        sup([&](double t, double p) {
          return f.Omega(t, p) * f.chibhat_norm(t, p) / f.trchib(t, p);
        }));
    push("BA:I.iv_rel", rel_m, C0);
  }

  if (f.with_q) {
    // BA:I.v - |D log q| <= C0 trchi, |Dbar log q| <= C0 trchib
    push("BA:I.v", std::max(sup([&](double t, double p) { return f.Dlogq(t, p) / f.trchi(t, p); }),
                            sup([&](double t, double p) {
                              return f.Dbarlogq(t, p) / f.trchib(t, p);
                            })),
         C0);
    // BA:I.vi - Omega(|eta| + |etab| + |dslash log q|) <= C0 (q trchib + q^-1 trchi)
    push("BA:I.vi", sup([&](double t, double p) {
           double qq = f.q(t, p);
           return f.Omega(t, p) * (f.eta_norm(t, p) + f.etab_norm(t, p) + f.dlogq_norm(t, p)) /
                  (qq * f.trchib(t, p) + f.trchi(t, p) / qq);
         }),
         C0);
    // BA:I.viii_w - |q r trchib - q^-1 r trchi| <= C0 (the weak trace bound;
    // the strong (vii)/(viii) forms are not displayed in the source)
    double r = analysis::area_radius(f.gslash, grid);
    push("BA:I.viii_w", sup([&](double t, double p) {
           double qq = f.q(t, p);
           return std::abs(qq * r * f.trchib(t, p) - r * f.trchi(t, p) / qq);
         }),
         C0);
  }

  // BA:III.i - C0^{-1} r <= Omega <= C0 r
  {
    double r = analysis::area_radius(f.gslash, grid);
    double m = std::max(sup([&](double t, double p) { return f.Omega(t, p) / r; }),
                        sup([&](double t, double p) { return r / f.Omega(t, p); }));
    push("BA:III.i", m, C0);
  }

  rep.verdict = true;
  for (const auto& e : rep.entries) rep.verdict = rep.verdict && e.holds;
  return rep;
}

CoefficientFields fields_from_chart(charts::Chart chart, const charts::SdSParams* params,
                                    const charts::ChartPoint& point) {
  nullframe::StructureCoefficients s = nullframe::structure_coefficients(chart, params, point);
  CoefficientFields f;
  auto constant = [](double v) {
    return analysis::ScalarField([v](double, double) { return v; });
  };
  f.Omega = constant(s.Omega);
  f.trchi = constant(s.trchi);
  f.trchib = constant(s.trchib);
  f.omegahat = constant(s.omegahat);
  f.omegabhat = constant(s.omegabhat);
  f.chihat_norm = constant(std::sqrt(s.chihat.norm2()));
  f.chibhat_norm = constant(std::sqrt(s.chibhat.norm2()));
  f.zeta_norm = constant(norm(s.zeta));
  f.eta_norm = constant(norm(s.eta));
  f.etab_norm = constant(norm(s.etab));
  double r = 1.0 / std::sqrt(s.K);
  f.gslash = analysis::round_sphere_metric(r);
  f.with_q = true;
  f.q = constant(std::sqrt(s.trchi / s.trchib));
  f.Dlogq = constant(0.0);
  f.Dbarlogq = constant(0.0);
  f.dlogq_norm = constant(0.0);
  return f;
}

CoefficientFields fields_from_ellipsoid(const charts::EllipsoidSection& sec) {
  CoefficientFields f;
  auto r = [sec](double th) { return sec.r(th); };
  double phi = sec.phi;
  f.Omega = [r](double th, double) { return r(th); };
  f.trchi = [](double, double) { return 2.0; };
  f.trchib = [r, phi](double th, double) { return 2.0 + 4.0 * phi * std::cos(th) / r(th); };
  f.omegahat = [](double, double) { return 1.0; };
  f.omegabhat = [](double, double) { return 1.0; };
  auto zero = [](double, double) { return 0.0; };
  f.chihat_norm = zero;
  f.chibhat_norm = zero;
  f.zeta_norm = zero;
  f.eta_norm = zero;
  f.etab_norm = zero;
  f.gslash = analysis::section_metric(r);
  f.with_q = false;
  return f;
}

PropagationCheck audit_gauge_propagation(const nullframe::FoliationChange& fc,
                                         const nullframe::StructureCoefficients& s, double eps) {
  if (std::abs(2.0 * s.omegahat - s.trchi) > eps * s.trchi + 1e-12 ||
      std::abs(2.0 * s.omegabhat - s.trchib) > eps * s.trchib + 1e-12)
    throw HypothesisError("input coefficients violate the redshift hypothesis");

  nullframe::StructureCoefficients t = nullframe::transform_foliation(fc, s);
  const double D = fc.Lbf * fc.Lg, sqD = std::sqrt(D);
  const double O = s.Omega;
  Vec2 gradO = O * s.dlog_Omega();
  const double LbhatLbf = fc.LbLbf / O;                       // Lbhat(Lbar f)
  const double LD = fc.LLbf * fc.Lg + fc.Lbf * fc.LLg;        // L(Lbar f Lg)
  const double LhatD = LD / O;                                // Lhat(Lbar f Lg)

  PropagationCheck c;
  c.lhs = std::abs(2.0 * t.omegahat - t.trchi);
  c.rhs = eps * t.trchi + std::abs(fc.Lf / (fc.Lbf * sqD) * LbhatLbf) +
          std::abs(LhatD) / (sqD * fc.Lg) +
          2.0 * O / (D * sqD) * std::abs(dot(fc.gradf, fc.gradLbfLg)) +
          2.0 * (1.0 + eps) / sqD * std::abs(dot(gradO, fc.gradf)) +
          (1.0 + eps) * O / (D * sqD) * std::abs(dot(fc.gradLbfLg, fc.gradf)) +
          2.0 * (1.0 + eps) * O / sqD * std::abs(fc.lapf);
  c.lhs_conj = std::abs(2.0 * t.omegabhat - t.trchib);
  c.rhs_conj = eps * t.trchib + std::sqrt(fc.Lg) / std::pow(fc.Lbf, 1.5) * std::abs(LbhatLbf);
  c.holds = c.lhs <= c.rhs + 1e-12 && c.lhs_conj <= c.rhs_conj + 1e-12;
  return c;
}

}  // namespace cosmoweyl::audit
