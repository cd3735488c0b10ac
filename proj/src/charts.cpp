// SPDX-License-Identifier: Apache-2.0
#include "cosmoweyl/charts.hpp"

#include <cmath>

namespace cosmoweyl::charts {

// Conventions. All charts are stored in the canonical double-null form
// g = -2 Omega^2 (du (x) dv + dv (x) du) + r^2 gamma, so that the operational
// normalizations L̄ u = L v = 1 and g(Lhat, Lbhat) = -2 hold verbatim.
// The de Sitter optical functions u*, v* of ds_optical() are the half-log
// expressions of the source lemma; the DoubleNullDS chart carries coordinates
// (u, v) = (u*/2, v*/2), which makes its foliation density Omega^2 = r^2 - 1
// exactly. Section formulas written in terms of (u*, v*) keep that scaling.

std::string chart_name(Chart c) {
  switch (c) {
    case Chart::Stereographic: return "stereographic";
    case Chart::Static: return "static";
    case Chart::DoubleNullDS: return "doublenull-ds";
    case Chart::EF: return "ef";
    case Chart::Kruskal: return "kruskal";
    case Chart::InitialData: return "initialdata";
  }
  return "?";
}

std::array<std::string, 4> chart_coord_names(Chart c) {
  switch (c) {
    case Chart::Stereographic: return {"u", "y1", "y2", "y3"};
    case Chart::Static: return {"tprime", "r", "theta1", "theta2"};
    case Chart::DoubleNullDS: return {"u", "v", "theta1", "theta2"};
    case Chart::EF: return {"ustar", "vstar", "theta1", "theta2"};
    case Chart::Kruskal: return {"uK", "vK", "theta1", "theta2"};
    case Chart::InitialData: return {"ubar", "vbar", "theta1", "theta2"};
  }
  return {"x0", "x1", "x2", "x3"};
}

// --- de Sitter -------------------------------------------------------------

AmbientPoint5 embed_stereographic(double u, const Vec3& y) {
  double y2 = dot(y, y);
  double denom = 4.0 - u * u + y2;
  if (denom <= 0.0) throw DomainError("stereographic chart: -u^2 + |y|^2 <= -4");
  AmbientPoint5 p;
  p.t = 4.0 * u / denom;
  p.x = (4.0 + u * u - y2) / denom;
  p.x1 = 4.0 * y[0] / denom;
  p.x2 = 4.0 * y[1] / denom;
  p.x3 = 4.0 * y[2] / denom;
  return p;
}

double stereographic_conformal_exponent(double u, const Vec3& y) {
  return 1.0 + 0.25 * (-u * u + dot(y, y));
}

MetricAtPoint stereographic_metric(double u, const Vec3& y) {
  double ephi = stereographic_conformal_exponent(u, y);
  if (ephi <= 0.0) throw DomainError("stereographic chart: conformal factor degenerate");
  double c = 1.0 / (ephi * ephi);
  MetricAtPoint mp;
  mp.chart = Chart::Stereographic;
  mp.g(0, 0) = -c;
  mp.g(1, 1) = mp.g(2, 2) = mp.g(3, 3) = c;
  mp.ginv(0, 0) = -1.0 / c;
  mp.ginv(1, 1) = mp.ginv(2, 2) = mp.ginv(3, 3) = 1.0 / c;
  return mp;
}

std::pair<double, double> static_coords(const AmbientPoint5& p) {
  if (!(p.x > std::abs(p.t))) throw DomainError("point outside static patch x > |t|");
  double r = p.r();
  if (std::abs(r - 1.0) < 1e-14) throw DomainError("static chart degenerate at r = 1");
  double tprime = 0.5 * std::log(std::abs((p.x + p.t) / (p.x - p.t)));
  return {tprime, r};
}

std::pair<double, double> ds_optical(const AmbientPoint5& p) {
  double r = p.r();
  if (std::abs(p.x - p.t) < 1e-300) throw DomainError("optical functions singular at x = t");
  if (std::abs(r - 1.0) < 1e-14) throw DomainError("optical functions singular on the horizon r = 1");
  double s = (p.x + p.t) / (p.x - p.t);
  double u = s * (1.0 - r) / (1.0 + r);
  double v = s * (1.0 + r) / (1.0 - r);
  return {0.5 * std::log(std::abs(u)), -0.5 * std::log(std::abs(v))};
}

double ds_radius(double ustar, double vstar) {
  double e = std::exp(ustar + vstar);
  if (e >= 1.0) throw DomainError("u* + v* must be negative in the cosmological region");
  return (1.0 + e) / (1.0 - e);
}

double ellipsoid_vphi(double ustar, double vstar, double theta1, double phi) {
  double um = 0.5 * (ustar - vstar);
  double up = 0.5 * (ustar + vstar);
  double cphi = std::cos(phi), sphi = std::sin(phi), cth = std::cos(theta1);

  double rphi2 = 0.5 * (std::cosh(2.0 * um) * sphi * sphi + cphi * cphi - cth * cth * sphi * sphi +
                        std::cosh(2.0 * up) * (1.0 - cth * cth * sphi * sphi) +
                        2.0 * (std::sinh(ustar) - std::sinh(vstar)) * cth * sphi * cphi);
  double rphi = std::sqrt(std::max(rphi2, 0.0));

  double a = std::cosh(um) + std::sinh(um) * cphi - std::cosh(up) * cth * sphi;
  double b = std::cosh(um) - std::sinh(um) * cphi + std::cosh(up) * cth * sphi;
  double c = -std::sinh(up) + rphi;
  double d = std::sinh(up) + rphi;
  return (a / b) * (c / d);
}

double ellipsoid_vphi_star(double ustar, double vstar, double theta1, double phi) {
  double v = ellipsoid_vphi(ustar, vstar, theta1, phi);
  if (v <= 0.0) throw DomainError("v_phi not positive at this point");
  return -0.5 * std::log(v);
}

double EllipsoidSection::vstar(double theta1) const {
  return -std::abs(eps) - phi * std::cos(theta1) / (1.0 + std::abs(eps));
}

double EllipsoidSection::r(double theta1) const { return -2.0 / vstar(theta1); }

double EllipsoidSection::area_closed_form() const {
  double a = std::abs(eps);
  double c = phi / (1.0 + a);
  return 16.0 * kPi / (a * a - c * c);
}

EllipsoidSection ellipsoid_section(double eps, double phi) {
  if (std::abs(eps) <= 0.0) throw DomainError("ellipsoid section needs |eps| > 0");
  EllipsoidSection s;
  s.eps = eps;
  s.phi = phi;
  s.touches_infinity = std::abs(eps) <= std::abs(phi) / (1.0 + std::abs(eps));
  return s;
}

// --- Schwarzschild-de Sitter ----------------------------------------------

Horizons sds_horizons(const SdSParams& p) {
  p.validate();
  // r^3 - (3/Lambda) r + 6m/Lambda = 0, solved by the trigonometric method
  // with one Newton polish per root.
  double pc = -3.0 / p.lambda;
  double qc = 6.0 * p.m / p.lambda;
  double rad = std::sqrt(-pc / 3.0);
  double arg = 3.0 * qc / (2.0 * pc * rad);
  arg = std::min(1.0, std::max(-1.0, arg));
  double phi = std::acos(arg) / 3.0;
  std::array<double, 3> roots;
  for (int k = 0; k < 3; ++k) roots[k] = 2.0 * rad * std::cos(phi - 2.0 * kPi * k / 3.0);
  for (double& r : roots) {
    for (int it = 0; it < 3; ++it) {
      double f = r * r * r + pc * r + qc;
      double df = 3.0 * r * r + pc;
      if (df != 0.0) r -= f / df;
    }
  }
  std::sort(roots.begin(), roots.end());
  Horizons h{roots[0], roots[1], roots[2]};
  if (!(h.rbarC < 0.0 && h.rH > 0.0 && h.rC > h.rH))
    throw NoHorizonError("horizon roots not in the expected configuration");
  return h;
}

namespace {

// Partial-fraction residues of 1/(Lambda r^2/3 + 2m/r - 1) at the three roots.
struct RstarCoeffs {
  Horizons h;
  double A, B, C;  // at rC, rH, rbarC
};

RstarCoeffs rstar_coeffs(const SdSParams& p) {
  Horizons h = sds_horizons(p);
  auto res = [&](double r0, double r1, double r2) {
    return 3.0 * r0 / (p.lambda * (r0 - r1) * (r0 - r2));
  };
  return {h, res(h.rC, h.rH, h.rbarC), res(h.rH, h.rC, h.rbarC), res(h.rbarC, h.rC, h.rH)};
}

}  // namespace

KruskalConstants sds_kruskal_constants(const SdSParams& p) {
  RstarCoeffs c = rstar_coeffs(p);
  KruskalConstants k;
  k.kappaC = 1.0 / (2.0 * c.A);
  k.alphaH = -2.0 * k.kappaC * c.B;
  k.alphabarC = -2.0 * k.kappaC * c.C;
  return k;
}

double sds_rstar(const SdSParams& p, double r) {
  RstarCoeffs c = rstar_coeffs(p);
  if (!(r > c.h.rC)) throw DomainError("r* defined for r > rC");
  // Constant of integration fixed by r* -> 0 as r -> infinity (A + B + C = 0).
  return c.A * std::log((r - c.h.rC) / r) + c.B * std::log((r - c.h.rH) / r) +
         c.C * std::log((r - c.h.rbarC) / r);
}

double sds_r_of_rstar(const SdSParams& p, double rstar) {
  Horizons h = sds_horizons(p);
  if (!(rstar < 0.0)) throw DomainError("r* ranges over (-inf, 0) for r > rC");
  auto f = [&](double x) { return sds_rstar(p, h.rC + std::exp(x)) - rstar; };
  double lo = -300.0, hi = std::log(std::max(1.0, h.rC));
  while (f(hi) < 0.0) {
    hi += 5.0;
    if (hi > 700.0) throw ConvergenceError("r(r*) bracket expansion failed");
  }
  double x = solve_bracketed(f, lo, hi, 1e-15);
  double r = h.rC + std::exp(x);
  if (std::abs(sds_rstar(p, r) - rstar) > 1e-9 * std::max(1.0, std::abs(rstar)))
    throw ConvergenceError("r(r*) inversion did not converge");
  return r;
}

double sds_r_of_kruskal_product(const SdSParams& p, double w) {
  Horizons h = sds_horizons(p);
  KruskalConstants k = sds_kruskal_constants(p);
  if (!(w < 1.0)) throw DomainError("Kruskal chart requires uK vK < 1");
  auto F = [&](double r) {
    return (r - h.rC) * std::pow(r - h.rH, -k.alphaH) * std::pow(r - h.rbarC, -k.alphabarC);
  };
  if (w == 0.0) return h.rC;
  auto f = [&](double x) { return F(h.rH + std::exp(x)) - w; };
  double lo = std::log(h.rH) - 60.0, hi = std::log(std::max(1.0, h.rC));
  while (f(hi) < 0.0) {
    hi += 5.0;
    if (hi > 700.0) throw ConvergenceError("Kruskal radius bracket expansion failed");
  }
  return h.rH + std::exp(solve_bracketed(f, lo, hi, 1e-15));
}

namespace {

double sds_omega2_ef(const SdSParams& p, double r) {
  return p.lambda * r * r / 3.0 + 2.0 * p.m / r - 1.0;
}

double sds_omega2_kruskal(const SdSParams& p, double r) {
  Horizons h = sds_horizons(p);
  KruskalConstants k = sds_kruskal_constants(p);
  return 0.25 * (p.lambda / 3.0) / (k.kappaC * k.kappaC) * std::pow(r - h.rH, 1.0 + k.alphaH) *
         std::pow(r - h.rbarC, 1.0 + k.alphabarC) / r;
}

Mat4 spherical_null_metric(double Omega2, double r, double theta1) {
  Mat4 g;
  g(0, 1) = g(1, 0) = -2.0 * Omega2;
  g(2, 2) = r * r;
  double st = std::sin(theta1);
  g(3, 3) = r * r * st * st;
  return g;
}

}  // namespace

SdSChartData sds_chart(Chart gauge, const SdSParams& p, const ChartPoint& point) {
  SdSChartData out;
  out.metric.chart = gauge;
  const double th = point.coords[2];
  switch (gauge) {
    case Chart::EF: {
      double ustar = point.coords[0], vstar = point.coords[1];
      if (!(ustar + vstar < 0.0)) throw DomainError("EF chart requires u* + v* < 0");
      double r = sds_r_of_rstar(p, ustar + vstar);
      double O2 = sds_omega2_ef(p, r);
      if (O2 <= 1e-10) throw HorizonProximityError("EF chart degenerate near the horizon");
      out.r = r;
      out.Omega2 = O2;
      out.dr_d0 = out.dr_d1 = O2;
      out.metric.g = spherical_null_metric(O2, r, th);
      break;
    }
    case Chart::Kruskal: {
      double uK = point.coords[0], vK = point.coords[1];
      double w = uK * vK;
      KruskalConstants k = sds_kruskal_constants(p);
      double r = sds_r_of_kruskal_product(p, w);
      double O2 = sds_omega2_kruskal(p, r);
      out.r = r;
      out.Omega2 = O2;
      out.dr_d0 = 2.0 * k.kappaC * O2 * vK;
      out.dr_d1 = 2.0 * k.kappaC * O2 * uK;
      out.metric.g = spherical_null_metric(O2, r, th);
      break;
    }
    case Chart::InitialData: {
      // u-patch: ubar = 2 kappaC u* > 0, vbar = vK - 1 with v* < 0.
      double ubar = point.coords[0], vbar = point.coords[1];
      if (!(ubar > 0.0)) throw DomainError("initial-data u-patch requires u* > 0");
      if (!(vbar > -1.0 && vbar < 0.0)) throw DomainError("initial-data u-patch requires v* < 0");
      KruskalConstants k = sds_kruskal_constants(p);
      double uK = std::exp(ubar);
      double vK = vbar + 1.0;
      double r = sds_r_of_kruskal_product(p, uK * vK);
      double O2 = sds_omega2_kruskal(p, r) * uK;
      if (O2 <= 1e-12) throw HorizonProximityError("initial-data gauge degenerate");
      out.r = r;
      out.Omega2 = O2;
      // dr/dubar = uK dr/duK, dr/dvbar = dr/dvK.
      out.dr_d0 = uK * 2.0 * k.kappaC * sds_omega2_kruskal(p, r) * vK;
      out.dr_d1 = 2.0 * k.kappaC * sds_omega2_kruskal(p, r) * uK;
      out.metric.g = spherical_null_metric(O2, r, th);
      break;
    }
    default:
      throw DomainError("sds_chart expects an SdS gauge (EF, Kruskal, InitialData)");
  }
  out.metric.ginv = inverse(out.metric.g);
  return out;
}

MetricField metric_field(Chart chart, const SdSParams* p) {
  switch (chart) {
    case Chart::Stereographic:
      return [](const Vec4& x) {
        return stereographic_metric(x[0], Vec3{x[1], x[2], x[3]}).g;
      };
    case Chart::Static:
      return [](const Vec4& x) {
        double r = x[1];
        Mat4 g;
        g(0, 0) = -(1.0 - r * r);
        g(1, 1) = 1.0 / (1.0 - r * r);
        g(2, 2) = r * r;
        double st = std::sin(x[2]);
        g(3, 3) = r * r * st * st;
        return g;
      };
    case Chart::DoubleNullDS:
      return [](const Vec4& x) {
        double r = ds_radius(2.0 * x[0], 2.0 * x[1]);
        return spherical_null_metric(r * r - 1.0, r, x[2]);
      };
    case Chart::EF: {
      SdSParams params = *p;
      return [params](const Vec4& x) {
        double r = sds_r_of_rstar(params, x[0] + x[1]);
        return spherical_null_metric(sds_omega2_ef(params, r), r, x[2]);
      };
    }
    case Chart::Kruskal: {
      SdSParams params = *p;
      return [params](const Vec4& x) {
        double r = sds_r_of_kruskal_product(params, x[0] * x[1]);
        return spherical_null_metric(sds_omega2_kruskal(params, r), r, x[2]);
      };
    }
    case Chart::InitialData: {
      SdSParams params = *p;
      return [params](const Vec4& x) {
        double uK = std::exp(x[0]);
        double vK = x[1] + 1.0;
        double r = sds_r_of_kruskal_product(params, uK * vK);
        return spherical_null_metric(sds_omega2_kruskal(params, r) * uK, r, x[2]);
      };
    }
  }
  throw DomainError("unknown chart");
}

MetricField sds_tr_metric_field(const SdSParams& p) {
  SdSParams params = p;
  return [params](const Vec4& x) {
    double r = x[1];
    double O2 = sds_omega2_ef(params, r);
    Mat4 g;
    g(0, 0) = O2;
    g(1, 1) = -1.0 / O2;
    g(2, 2) = r * r;
    double st = std::sin(x[2]);
    g(3, 3) = r * r * st * st;
    return g;
  };
}

AmbientPoint5 embed_static(double tprime, double r, double theta1, double theta2) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("static embedding valid for 0 <= r < 1");
  double s = std::sqrt(1.0 - r * r);
  AmbientPoint5 p;
  p.t = s * std::sinh(tprime);
  p.x = s * std::cosh(tprime);
  p.x1 = r * std::cos(theta1);
  p.x2 = r * std::sin(theta1) * std::cos(theta2);
  p.x3 = r * std::sin(theta1) * std::sin(theta2);
  return p;
}

AmbientPoint5 embed_double_null(double u, double v, double theta1, double theta2) {
  // Chart coordinates (u, v) = (u*/2, v*/2); t' = u - v.
  double r = ds_radius(2.0 * u, 2.0 * v);
  double tprime = u - v;
  double s = std::sqrt(r * r - 1.0);
  AmbientPoint5 p;
  p.t = s * std::cosh(tprime);
  p.x = s * std::sinh(tprime);
  p.x1 = r * std::cos(theta1);
  p.x2 = r * std::sin(theta1) * std::cos(theta2);
  p.x3 = r * std::sin(theta1) * std::sin(theta2);
  return p;
}

}  // namespace cosmoweyl::charts
