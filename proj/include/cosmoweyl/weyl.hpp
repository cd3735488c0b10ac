// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "cosmoweyl/charts.hpp"
#include "cosmoweyl/numerics.hpp"

namespace cosmoweyl::weyl {

// Null frame (e1, e2, e3, e4) with g(eA, eB) = delta_AB, g(e3, e4) = -2,
// stored as coordinate components. Index order in all frame tensors is
// 0,1 = e1,e2 (sphere), 2 = e3 (incoming, Lbhat), 3 = e4 (outgoing, Lhat).
struct Frame {
  Vec4 e[4];
};

inline constexpr int A1 = 0, A2 = 1, E3 = 2, E4 = 3;

// Frame metric g_ab and inverse g^ab for the normalization above.
double frame_metric(int a, int b);
double frame_metric_inv(int a, int b);

// Volume form in frame components; orientation epsilon(e1,e2,e3,e4) = +2,
// pinned by the sigma = rho[*W] consistency test.
double frame_epsilon(int a, int b, int c, int d);

// Builds the double-null frame of a canonical chart at a point:
// Lbhat = Omega^{-1} du-leg, Lhat = Omega^{-1}(dv-leg + shift), eA by
// Gram-Schmidt on (dtheta1, dtheta2). Checks g(Lhat, Lbhat) = -2.
Frame double_null_frame(const Mat4& g, const Vec4& x);

// Rank-4 tensor in frame components.
struct Weyl4 {
  Tensor4 c;

  double operator()(int a, int b, int d, int e) const { return c(a, b, d, e); }
  double& operator()(int a, int b, int d, int e) { return c(a, b, d, e); }

  // Residuals of the Weyl-field algebraic conditions.
  double antisymmetry_residual() const;
  double pair_symmetry_residual() const;
  double cyclic_residual() const;
  double trace_residual() const;
};

// The 10 independent null components.
struct WeylNull {
  Mat2 abar;  // alphabar, symmetric trace-free
  Vec2 bbar;  // betabar
  double rho = 0.0;
  double sigma = 0.0;
  Vec2 b;   // beta
  Mat2 a;   // alpha, symmetric trace-free

  double invariant_residual() const {
    double r = std::abs(abar.trace()) + std::abs(a.trace());
    r += std::abs(abar(0, 1) - abar(1, 0)) + std::abs(a(0, 1) - a(1, 0));
    return r;
  }
};

// Electromagnetic decomposition relative to Sigma_r, components in the
// orthonormal frame (X, e1, e2) with X = (e3 - e4)/2; index 0 = X.
struct EMPair {
  double E[3][3] = {};
  double H[3][3] = {};

  double symmetry_residual() const;
  double trace_residual() const;
};

// W = R + (Lambda/3)[g_{an} g_{bm} - g_{am} g_{bn}] in coordinate components.
Tensor4 weyl_from_riemann(const Tensor4& riem, const Mat4& g, double lambda);

// Components of a coordinate rank-4 tensor in a frame.
Weyl4 to_frame(const Tensor4& coord, const Frame& f);

WeylNull null_decompose(const Weyl4& w);
Weyl4 reconstruct(const WeylNull& w);

// Left/right dual *W_{abmn} = (1/2) W_{ab}^{cd} eps_{cdmn} in frame components.
Weyl4 dual(const Weyl4& w);

// Null components under e3 -> a e3, e4 -> a^{-1} e4:
// (a^2 abar, a bbar, rho, sigma, a^{-1} b, a^{-2} a).
WeylNull boost_weyl(double a, const WeylNull& w);

// E, H of the frame with n = (1/2)(q e3 + q^{-1} e4); the q-boosted null
// components enter the closed forms.
EMPair em_decompose(const WeylNull& w, double q = 1.0);

// Oracle route: direct contraction E = W(n,.,n,.), H = *W(n,.,n,.).
EMPair em_decompose_contraction(const WeylNull& w, double q = 1.0);

// Finite-difference Riemann tensor (lowered indices) of a metric field.
Tensor4 riemann_fd(const charts::MetricField& gf, const Vec4& x, double h_scale = 1e-4);

// Coordinate Christoffels Gamma^l_{mn} by central differences.
void christoffel_fd(const charts::MetricField& gf, const Vec4& x, double h_scale,
                    double gamma[4][4][4]);

// sigma computed as rho[*W]; the epsilon-convention consistency check.
double sigma_from_dual(const Weyl4& w);

}  // namespace cosmoweyl::weyl
