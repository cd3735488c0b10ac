// SPDX-License-Identifier: Apache-2.0
// Test-only oracles: finite-difference pullbacks, quadrature references, and
// random generators. Kept independent of the implementation paths they check.
#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "cosmoweyl/charts.hpp"
#include "cosmoweyl/numerics.hpp"
#include "cosmoweyl/weyl.hpp"

namespace oracles {

using namespace cosmoweyl;

// Pullback of the 1+4 Minkowski metric through an embedding map, with
// finite-difference Jacobians.
inline Mat4 pullback_ambient(const std::function<charts::AmbientPoint5(const Vec4&)>& phi,
                             const Vec4& x, double h_scale = 1e-6) {
  double J[5][4];
  for (int mu = 0; mu < 4; ++mu) {
    double h = fd_step(x[mu], h_scale);
    Vec4 xp = x, xm = x;
    xp[mu] += h;
    xm[mu] -= h;
    auto p = phi(xp), m = phi(xm);
    J[0][mu] = (p.t - m.t) / (2.0 * h);
    J[1][mu] = (p.x - m.x) / (2.0 * h);
    J[2][mu] = (p.x1 - m.x1) / (2.0 * h);
    J[3][mu] = (p.x2 - m.x2) / (2.0 * h);
    J[4][mu] = (p.x3 - m.x3) / (2.0 * h);
  }
  double eta[5] = {-1.0, 1.0, 1.0, 1.0, 1.0};
  Mat4 g;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      double s = 0.0;
      for (int a = 0; a < 5; ++a) s += eta[a] * J[a][mu] * J[a][nu];
      g(mu, nu) = s;
    }
  return g;
}

inline double metric_distance(const Mat4& a, const Mat4& b) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r = std::max(r, std::abs(a(i, j) - b(i, j)));
  return r;
}

// Eikonal residual |g^{-1}(df, df)| of a scalar field on a chart, FD gradient.
inline double eikonal_residual(const charts::MetricField& gf,
                               const std::function<double(const Vec4&)>& f, const Vec4& x,
                               double h_scale = 1e-6) {
  Mat4 ginv = inverse(gf(x));
  Vec4 df;
  for (int mu = 0; mu < 4; ++mu) {
    auto fi = [&](double s) {
      Vec4 y = x;
      y[mu] = s;
      return f(y);
    };
    df[mu] = fd_derivative_rich(fi, x[mu], fd_step(x[mu], h_scale));
  }
  double r = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) r += ginv(mu, nu) * df[mu] * df[nu];
  return std::abs(r);
}

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed);
  return gen;
}

inline double uniform(double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng());
}

inline weyl::WeylNull random_weyl() {
  weyl::WeylNull w;
  double a11 = uniform(-1.0, 1.0), a12 = uniform(-1.0, 1.0);
  w.abar(0, 0) = a11;
  w.abar(1, 1) = -a11;
  w.abar(0, 1) = w.abar(1, 0) = a12;
  double b11 = uniform(-1.0, 1.0), b12 = uniform(-1.0, 1.0);
  w.a(0, 0) = b11;
  w.a(1, 1) = -b11;
  w.a(0, 1) = w.a(1, 0) = b12;
  w.bbar = {uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
  w.b = {uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
  w.rho = uniform(-1.0, 1.0);
  w.sigma = uniform(-1.0, 1.0);
  return w;
}

inline double max_null_diff(const weyl::WeylNull& x, const weyl::WeylNull& y) {
  double r = 0.0;
  r = std::max(r, (x.abar - y.abar).norm2());
  r = std::max(r, (x.a - y.a).norm2());
  r = std::sqrt(r);
  r = std::max(r, norm(x.bbar - y.bbar));
  r = std::max(r, norm(x.b - y.b));
  r = std::max(r, std::abs(x.rho - y.rho));
  r = std::max(r, std::abs(x.sigma - y.sigma));
  return r;
}

}  // namespace oracles
