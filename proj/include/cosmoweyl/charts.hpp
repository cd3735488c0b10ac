// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <utility>

#include "cosmoweyl/error.hpp"
#include "cosmoweyl/numerics.hpp"

namespace cosmoweyl::charts {

// The de Sitter charts fix the unit-hyperboloid normalization Lambda/3 = 1;
// Schwarzschild-de Sitter takes general Lambda.

enum class Chart { Stereographic, Static, DoubleNullDS, EF, Kruskal, InitialData };

std::string chart_name(Chart c);

// Point of the de Sitter hyperboloid in 1+4 Minkowski coordinates (t,x,x').
struct AmbientPoint5 {
  double t = 0.0, x = 0.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;

  double hyperboloid_residual() const {
    return -t * t + x * x + x1 * x1 + x2 * x2 + x3 * x3 - 1.0;
  }
  double r() const { return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3); }
};

struct ChartPoint {
  Chart chart = Chart::EF;
  Vec4 coords{};  // per-chart names, see chart_coord_names()
};

std::array<std::string, 4> chart_coord_names(Chart c);

// 4x4 metric components with inverse, in the coordinates of `chart`.
struct MetricAtPoint {
  Mat4 g;
  Mat4 ginv;
  Chart chart = Chart::EF;
};

struct SdSParams {
  double lambda = 3.0;
  double m = 0.1;

  void validate() const {
    if (lambda <= 0.0) throw DomainError("Lambda must be positive");
    if (!(m > 0.0 && m < 1.0 / (3.0 * std::sqrt(lambda))))
      throw NoHorizonError("need 0 < m < 1/(3 sqrt(Lambda)) for three distinct horizon roots");
  }
};

// Roots of 1 - 2m/r - Lambda r^2/3 = 0, ordered rbarC < 0 < rH < rC.
struct Horizons {
  double rbarC = 0.0, rH = 0.0, rC = 0.0;
};

Horizons sds_horizons(const SdSParams& p);

// Surface gravity of the cosmological horizon and the Kruskal exponents
// alphaH + alphabarC = 1.
struct KruskalConstants {
  double kappaC = 0.0;
  double alphaH = 0.0;
  double alphabarC = 0.0;
};

KruskalConstants sds_kruskal_constants(const SdSParams& p);

// Regge-Wheeler coordinate, normalized so r* -> 0^- as r -> infinity:
//   r*(r) = -int_r^inf dr' / (Lambda r'^2/3 + 2m/r' - 1),  r > rC.
double sds_rstar(const SdSParams& p, double r);
double sds_r_of_rstar(const SdSParams& p, double rstar);

// --- de Sitter charts ---------------------------------------------------

// Stereographic projection of the hyperboloid on the plane x = 1:
//   t = 4u/D, x = (4+u^2-|y|^2)/D, x' = 4y/D,  D = 4 - u^2 + |y|^2 > 0.
AmbientPoint5 embed_stereographic(double u, const Vec3& y);

// h = e^{-2Phi}(-du^2 + |dy|^2), e^{Phi} = 1 + (1/4)(-u^2 + |y|^2).
MetricAtPoint stereographic_metric(double u, const Vec3& y);
double stereographic_conformal_exponent(double u, const Vec3& y);  // e^{Phi}

// Static coordinates on the patch x > |t|: r = |x'|, t' = (1/2) log((x+t)/(x-t)).
std::pair<double, double> static_coords(const AmbientPoint5& p);

// Optical functions of the spherical double-null foliation:
//   u = ((x+t)/(x-t)) (1-|x'|)/(1+|x'|),  v = ((x+t)/(x-t)) (1+|x'|)/(1-|x'|),
//   u* = (1/2) log|u|,  v* = -(1/2) log|v|.
std::pair<double, double> ds_optical(const AmbientPoint5& p);

// Area radius of S_{u*,v*} in the cosmological region, r = (1+E)/(1-E), E = e^{u*+v*} < 1.
double ds_radius(double ustar, double vstar);

// v_phi(u*,v*;theta1) whose level sets are null hypersurfaces tilted by the
// displacement angle phi; v*_phi = -(1/2) log v_phi.
double ellipsoid_vphi(double ustar, double vstar, double theta1, double phi);
double ellipsoid_vphi_star(double ustar, double vstar, double theta1, double phi);

// Ellipsoidal section S_{0,eps} of C_0 in the small-angle closed forms:
//   v*(theta1) = -|eps| - phi cos(theta1)/(1+|eps|),
//   r(theta1)  = 2 / (|eps| + phi cos(theta1)/(1+|eps|)).
struct EllipsoidSection {
  double eps = 0.0;
  double phi = 0.0;
  bool touches_infinity = false;

  double vstar(double theta1) const;
  double r(double theta1) const;
  double area_closed_form() const;  // 16 pi / (eps^2 - phi^2/(1+|eps|)^2)
};

EllipsoidSection ellipsoid_section(double eps, double phi);

// --- Schwarzschild-de Sitter charts --------------------------------------

struct SdSChartData {
  MetricAtPoint metric;
  double r = 0.0;
  double Omega2 = 0.0;
  double dr_d0 = 0.0;  // dr/d(first null coordinate)
  double dr_d1 = 0.0;  // dr/d(second null coordinate)
};

// EF: Omega^2 = Lambda r^2/3 + 2m/r - 1, dr/du = dr/dv = Omega^2, domain u+v < 0.
// Kruskal: u_K v_K = (r-rC)(r-rH)^{-alphaH}(r+|rbarC|)^{-alphabarC}, domain u_K v_K < 1,
//   Omega_K^2 = (1/4)(Lambda/3) kappaC^{-2} (r-rH)^{1+alphaH}(r+|rbarC|)^{1+alphabarC}/r.
// InitialData: Omega_(u)^2 = Omega_K^2 u_K on u* > 0, v* < 0 (the u-patch).
SdSChartData sds_chart(Chart gauge, const SdSParams& p, const ChartPoint& point);

// r as a function of the Kruskal product w = u_K v_K < 1.
double sds_r_of_kruskal_product(const SdSParams& p, double w);

// --- generic metric evaluators (FD machinery) -----------------------------

using MetricField = std::function<Mat4(const Vec4&)>;

// Coordinate metric evaluators. For SdS charts the angular block uses
// coords[2] = theta1, coords[3] = theta2.
MetricField metric_field(Chart chart, const SdSParams* p);

// Diagnostic (t,r) form of SdS in the cosmological region,
//   g = Omega^2 dt^2 - Omega^{-2} dr^2 + r^2 (dtheta^2 + sin^2 theta dphi^2),
// used by the finite-difference curvature oracles; coords = (t, r, theta1, theta2).
MetricField sds_tr_metric_field(const SdSParams& p);

// de Sitter ambient pullback helpers (chart transition oracles).
AmbientPoint5 embed_static(double tprime, double r, double theta1, double theta2);
AmbientPoint5 embed_double_null(double ustar, double vstar, double theta1, double theta2);

}  // namespace cosmoweyl::charts
