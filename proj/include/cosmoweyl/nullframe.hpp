// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "cosmoweyl/charts.hpp"
#include "cosmoweyl/numerics.hpp"

namespace cosmoweyl::nullframe {

// Optical structure coefficients of a double-null foliation at a sphere point.
// Sphere tensors are components in the orthonormalized frame (e1, e2).
struct StructureCoefficients {
  double Omega = 0.0;
  Vec2 shift{};       // b^A
  double trchi = 0.0;
  double trchib = 0.0;
  Mat2 chihat;        // trace-free shear
  Mat2 chibhat;
  double omega = 0.0;   // D log Omega
  double omegab = 0.0;  // Dbar log Omega
  double omegahat = 0.0;
  double omegabhat = 0.0;
  Vec2 zeta{};
  Vec2 eta{};
  Vec2 etab{};
  double K = 0.0;  // Gauss curvature of S_{u,v}

  Vec2 dlog_Omega() const { return 0.5 * (eta + etab); }
  // eta = zeta + dlogOmega, etab = -zeta + dlogOmega, omegahat = omega/Omega.
  double invariant_residual() const;
};

// Exchanges the roles of the two null directions.
StructureCoefficients conjugate(const StructureCoefficients& s);

// Closed-form coefficients of the spherically symmetric charts. `params`
// may be null for the de Sitter double-null chart.
StructureCoefficients structure_coefficients(charts::Chart chart, const charts::SdSParams* params,
                                             const charts::ChartPoint& point);

// Generic route: Christoffels by central differences of the chart metric.
StructureCoefficients structure_coefficients_fd(const charts::MetricField& gf, const Vec4& x,
                                                double h_scale = 1e-6, bool richardson = true);

// Change of foliation u -> f(u,v,theta), v -> g(v); all derivative
// evaluators are at the point of interest. Lbf, Lg must be positive.
struct FoliationChange {
  double Lf = 0.0;    // L f
  double Lbf = 1.0;   // Lbar f
  double Lg = 1.0;    // L g
  double LbLbf = 0.0; // Lbar(Lbar f)
  double LLbf = 0.0;  // L(Lbar f)
  double LLg = 0.0;   // L(Lg)
  Vec2 gradf{};       // dslash f
  Vec2 gradLbfLg{};   // dslash(Lbar f . Lg)
  Mat2 hessf;         // dslash^2 f (supplied analytically by the caller)
  double lapf = 0.0;  // lapslash f
};

// Returns Lbar f (L f + b^A d_A f) - Omega^2 |dslash f|^2; zero iff the level
// sets of the new u are null.
double eikonal_condition_residual(const FoliationChange& fc, const StructureCoefficients& s);

StructureCoefficients transform_foliation(const FoliationChange& fc,
                                          const StructureCoefficients& s);

// Lorentz boost e3 -> a e3, e4 -> a^{-1} e4 of the frame the coefficients are
// expressed in. Da and Dbara are Omega * (derivative of a along the current
// frame's e4 and e3), which makes boosts composable.
struct BoostLaw {
  double a = 1.0;
  double Da = 0.0;
  double Dbara = 0.0;
  Vec2 dlog_a{};
};

StructureCoefficients boost_coefficients(const BoostLaw& b, const StructureCoefficients& s);

// K + (1/4) trchi trchib - (1/2)(chihat, chibhat) + rho - Lambda/3.
double gauss_residual(const StructureCoefficients& s, double rho, double lambda);

}  // namespace cosmoweyl::nullframe
