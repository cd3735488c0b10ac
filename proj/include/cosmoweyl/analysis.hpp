// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cosmoweyl/belrobinson.hpp"
#include "cosmoweyl/nullframe.hpp"
#include "cosmoweyl/weyl.hpp"

namespace cosmoweyl::analysis {

// Gauss-Legendre (in cos theta) x uniform-azimuth product grid. Nodes are
// interior; the poles are excluded. Weights integrate f sin(theta) dtheta dphi.
struct SphereGrid {
  std::vector<double> theta;
  std::vector<double> wtheta;
  int nphi = 0;

  static SphereGrid make(int ntheta = 64, int nphi = 128);

  double phi_node(int j) const { return 2.0 * kPi * (j + 0.5) / nphi; }

  // integral of f over the round unit sphere (measure sin th dth dph);
  // deterministic summation order.
  double integrate(const std::function<double(double, double)>& f) const;
};

using ScalarField = std::function<double(double theta, double phi)>;
// Induced sphere metric, coordinate components in (theta, phi).
using Metric2Field = std::function<Mat2(double theta, double phi)>;

Metric2Field round_sphere_metric(double r);
// dmu = r^2(theta) sin(theta) dtheta dphi for the ellipsoidal sections.
Metric2Field section_metric(const std::function<double(double)>& r_of_theta);

double area(const Metric2Field& g, const SphereGrid& grid);
double area_radius(const Metric2Field& g, const SphereGrid& grid);
double sphere_average(const ScalarField& f, const Metric2Field& g, const SphereGrid& grid);

// Areal foliation data of Lemma normal:r:
//   phi = (2/r) Omega / sqrt(avg(Omega trchi) avg(Omega trchib)),
//   q = sqrt(avg(Omega trchi)/avg(Omega trchib)), n = (q e3 + q^{-1} e4)/2.
struct ArealData {
  double r = 0.0;
  double q = 0.0;
  double avg_otrchi = 0.0;
  double avg_otrchib = 0.0;
  ScalarField phi_lapse;  // pointwise in Omega
};

ArealData areal_data(const ScalarField& Omega, const ScalarField& trchi,
                     const ScalarField& trchib, const Metric2Field& g, const SphereGrid& grid);

// Isoperimetric data: lhs = int (Phi - avg)^2, rhs = (int |dslash Phi|)^2.
struct IsoperimetricResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double I_est = 0.0;
};

IsoperimetricResult isoperimetric_check(const ScalarField& Phi, const ScalarField& grad_norm,
                                        const Metric2Field& g, const SphereGrid& grid);

// S_u-tangent tensor data on a cylinder (Sigma_r, gbar = a^2 du^2 + gslash),
// abstract evaluators; norms are pointwise |theta| and |nabla-bar theta|.
struct CylinderField {
  double u0 = 0.0, u1 = 1.0;
  int nu = 256;
  double r = 1.0;  // area radius weight of the inequality
  std::function<double(double u)> a;  // lapse of the u-foliation, a = Omega/q
  std::function<Mat2(double u, double th, double ph)> gslash;
  std::function<double(double u, double th, double ph)> value;      // |theta|
  std::function<double(double u, double th, double ph)> grad_norm;  // |nabla-bar theta|
  double sup_r_trtheta = 0.0;  // h = sup |r tr theta|
};

// Both sides of the L6 / sup-L4 trace inequalities and the best-constant
// estimates (lhs/rhs ratios).
struct SobolevTraceResult {
  double l6_lhs = 0.0;
  double l4_sup_lhs = 0.0;
  double rhs = 0.0;
  double ratio6 = 0.0;
  double ratio4 = 0.0;
};

SobolevTraceResult sobolev_trace_check(const CylinderField& cyl, const SphereGrid& grid);

// Cone data for the null Sobolev inequalities on C_u.
struct ConeField {
  double v0 = 0.0, v1 = 1.0;
  int nv = 128;
  std::function<double(double v)> r;      // area radius along the cone
  std::function<double(double v)> Omega;  // foliation density
  std::function<double(double v)> trchi;  // outgoing expansion (must be > 0)
  std::function<double(double v, double th, double ph)> value;       // |theta|
  std::function<double(double v, double th, double ph)> grad_norm;   // |dslash theta|
  std::function<double(double v, double th, double ph)> Dvalue;      // |D theta|
};

struct NullSobolevResult {
  double F = 0.0;
  double D = 0.0;
  double lhs4 = 0.0, ratio4 = 0.0;
  double lhs_sup = 0.0, ratio_sup = 0.0;
  double lhs6 = 0.0, ratio6 = 0.0;
  double C_chi = 0.0;  // measured sup (r/2) Omega^{-1} trchi
};

NullSobolevResult null_sobolev_check(const ConeField& cone, const SphereGrid& grid);

// Second fundamental form of Sigma_r from the structure coefficients,
// orthonormal (X, e1, e2) components:
//   k(X,X) = (1/2)(q omegabhat + q^{-1} omegahat + Lbhat q + Lhat q^{-1}),
//   k(X,eA) = (1/2)(eta - etab)_A,
//   k(eA,eB) = (1/2)(q chib + q^{-1} chi)_AB.
struct Sym3 {
  double c[3][3] = {};
};

Sym3 k_from_coefficients(const nullframe::StructureCoefficients& s,
                         const belrobinson::WeightDerivs& q);

// Electromagnetic Hodge/Maxwell system on Sigma_r. The four residuals are the
// 1+3 reduction of the Bianchi equations (div pair and evolution pair); the
// evaluator covers backgrounds whose lapse is constant on each Sigma_r.
struct HodgeInput {
  double r = 0.0;
  double hr = 1e-4;                                  // FD step in r (relative)
  std::function<double(double r, double u)> a2;      // gbar_uu
  std::function<double(double r)> phi;               // areal lapse
  std::function<Sym3(double r, double u)> k;         // ON components
  std::function<weyl::EMPair(double r, double u, double th, double ph)> em;
  double u0 = -0.5, u1 = 0.5;
  int nu = 16;
};

struct HodgeResidual {
  double div_E = 0.0;
  double div_H = 0.0;
  double evol_E = 0.0;  // curl-H equation
  double evol_H = 0.0;  // curl-E equation
};

HodgeResidual hodge_residual(const HodgeInput& in, const SphereGrid& grid);

}  // namespace cosmoweyl::analysis
