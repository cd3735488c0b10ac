// SPDX-License-Identifier: Apache-2.0
#include "cosmoweyl/nullframe.hpp"

#include <cmath>

#include "cosmoweyl/weyl.hpp"

namespace cosmoweyl::nullframe {

using charts::Chart;

double StructureCoefficients::invariant_residual() const {
  double r = 0.0;
  r = std::max(r, std::abs(omegahat - omega / Omega));
  r = std::max(r, std::abs(omegabhat - omegab / Omega));
  Vec2 dlo = dlog_Omega();
  Vec2 e1 = zeta + dlo, e2 = Vec2{-zeta[0] + dlo[0], -zeta[1] + dlo[1]};
  r = std::max(r, norm(eta - e1));
  r = std::max(r, norm(etab - e2));
  r = std::max(r, std::abs(chihat.trace()));
  r = std::max(r, std::abs(chibhat.trace()));
  r = std::max(r, std::abs(chihat(0, 1) - chihat(1, 0)));
  r = std::max(r, std::abs(chibhat(0, 1) - chibhat(1, 0)));
  return r;
}

StructureCoefficients conjugate(const StructureCoefficients& s) {
  StructureCoefficients c = s;
  std::swap(c.trchi, c.trchib);
  std::swap(c.chihat, c.chibhat);
  std::swap(c.omega, c.omegab);
  std::swap(c.omegahat, c.omegabhat);
  std::swap(c.eta, c.etab);
  c.zeta = {-s.zeta[0], -s.zeta[1]};
  return c;
}

namespace {

StructureCoefficients spherical(double Omega, double r, double trchi, double trchib,
                                double omegahat, double omegabhat) {
  StructureCoefficients s;
  s.Omega = Omega;
  s.trchi = trchi;
  s.trchib = trchib;
  s.omegahat = omegahat;
  s.omegabhat = omegabhat;
  s.omega = Omega * omegahat;
  s.omegab = Omega * omegabhat;
  s.K = 1.0 / (r * r);
  return s;
}

}  // namespace

StructureCoefficients structure_coefficients(Chart chart, const charts::SdSParams* params,
                                             const charts::ChartPoint& point) {
  switch (chart) {
    case Chart::DoubleNullDS: {
      double r = charts::ds_radius(2.0 * point.coords[0], 2.0 * point.coords[1]);
      double O = std::sqrt(r * r - 1.0);
      // omega = D log Omega = dr/dv dlogOmega/dr with dr/dv = Omega^2.
      double omhat = r / O;
      return spherical(O, r, 2.0 * O / r, 2.0 * O / r, omhat, omhat);
    }
    case Chart::EF: {
      if (!params) throw DomainError("EF chart needs SdS parameters");
      auto d = charts::sds_chart(chart, *params, point);
      double O = std::sqrt(d.Omega2);
      double omhat = (params->lambda * d.r / 3.0 - params->m / (d.r * d.r)) / O;
      return spherical(O, d.r, 2.0 * O / d.r, 2.0 * O / d.r, omhat, omhat);
    }
    case Chart::Kruskal: {
      if (!params) throw DomainError("Kruskal chart needs SdS parameters");
      auto d = charts::sds_chart(chart, *params, point);
      auto h = charts::sds_horizons(*params);
      auto k = charts::sds_kruskal_constants(*params);
      double O = std::sqrt(d.Omega2);
      double uK = point.coords[0], vK = point.coords[1];
      double dlo2 = (1.0 + k.alphaH) / (d.r - h.rH) + (1.0 + k.alphabarC) / (d.r - h.rbarC) -
                    1.0 / d.r;
      return spherical(O, d.r, 4.0 * k.kappaC * O * uK / d.r, 4.0 * k.kappaC * O * vK / d.r,
                       k.kappaC * O * uK * dlo2, k.kappaC * O * vK * dlo2);
    }
    case Chart::InitialData: {
      if (!params) throw DomainError("initial-data chart needs SdS parameters");
      auto d = charts::sds_chart(chart, *params, point);
      auto h = charts::sds_horizons(*params);
      auto k = charts::sds_kruskal_constants(*params);
      double O = std::sqrt(d.Omega2);
      double Ostar2 = params->lambda * d.r * d.r / 3.0 + 2.0 * params->m / d.r - 1.0;
      double dlo2 = (1.0 + k.alphaH) / (d.r - h.rH) + (1.0 + k.alphabarC) / (d.r - h.rbarC) -
                    1.0 / d.r;
      return spherical(O, d.r, 4.0 * k.kappaC * O / d.r, Ostar2 / (k.kappaC * d.r * O),
                       k.kappaC * O * dlo2,
                       (2.0 * params->lambda * d.r / 3.0 - 2.0 * params->m / (d.r * d.r)) /
                           (4.0 * k.kappaC * O));
    }
    default:
      throw DomainError("no closed-form structure coefficients for this chart");
  }
}

namespace {

// Directional derivative of a scalar field along coordinate components.
double directional_fd(const std::function<double(const Vec4&)>& f, const Vec4& x, const Vec4& dir,
                      double h_scale, bool richardson) {
  double mag = std::max({std::abs(dir[0]), std::abs(dir[1]), std::abs(dir[2]), std::abs(dir[3])});
  if (mag == 0.0) return 0.0;
  auto g = [&](double s) {
    Vec4 y = x;
    for (int i = 0; i < 4; ++i) y[i] += s * dir[i];
    return f(y);
  };
  double h = fd_step(0.0, h_scale) / mag;
  return richardson ? fd_derivative_rich(g, 0.0, h) : fd_derivative(g, 0.0, h);
}

}  // namespace

StructureCoefficients structure_coefficients_fd(const charts::MetricField& gf, const Vec4& x,
                                                double h_scale, bool richardson) {
  using weyl::Frame;
  Mat4 g = gf(x);
  Frame f = weyl::double_null_frame(g, x);
  StructureCoefficients s;
  s.Omega = std::sqrt(-0.5 * g(0, 1));
  // shift: read from whichever null side carries it
  s.shift = {s.Omega * f.e[weyl::E4][2], s.Omega * f.e[weyl::E4][3]};

  double gamma[4][4][4];
  weyl::christoffel_fd(gf, x, h_scale, gamma);

  // nabla_X Y with Y one of the frame fields (rebuilt at shifted points).
  auto frame_vec = [&](const Vec4& y, int a) {
    Mat4 gy = gf(y);
    Frame fy = weyl::double_null_frame(gy, y);
    return fy.e[a];
  };
  auto covderiv_frame = [&](int xa, int ya) {
    // (nabla_{e_xa} e_ya)^l
    Vec4 res{};
    for (int mu = 0; mu < 4; ++mu) {
      if (f.e[xa][mu] == 0.0) continue;
      // partial_mu e_ya^l by FD
      auto comp = [&](double s_) {
        Vec4 y = x;
        y[mu] += s_;
        return frame_vec(y, ya);
      };
      double h = fd_step(x[mu], h_scale);
      Vec4 dp = comp(h), dm = comp(-h);
      if (richardson) {
        Vec4 dp2 = comp(0.5 * h), dm2 = comp(-0.5 * h);
        for (int l = 0; l < 4; ++l) {
          double d1 = (dp[l] - dm[l]) / (2.0 * h);
          double d2 = (dp2[l] - dm2[l]) / h;
          res[l] += f.e[xa][mu] * (4.0 * d2 - d1) / 3.0;
        }
      } else {
        for (int l = 0; l < 4; ++l) res[l] += f.e[xa][mu] * (dp[l] - dm[l]) / (2.0 * h);
      }
    }
    for (int l = 0; l < 4; ++l)
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) res[l] += f.e[xa][mu] * gamma[l][mu][nu] * f.e[ya][nu];
    return res;
  };

  Mat2 chi, chib;
  for (int A = 0; A < 2; ++A) {
    Vec4 dL = covderiv_frame(A, weyl::E4);
    Vec4 dLb = covderiv_frame(A, weyl::E3);
    for (int B = 0; B < 2; ++B) {
      chi(A, B) = contract(g, dL, f.e[B]);
      chib(A, B) = contract(g, dLb, f.e[B]);
    }
    s.zeta[A] = 0.5 * contract(g, dL, f.e[weyl::E3]);
  }
  s.trchi = chi.trace();
  s.trchib = chib.trace();
  s.chihat = chi.tracefree();
  s.chibhat = chib.tracefree();

  auto logOmega = [&](const Vec4& y) { return 0.5 * std::log(-0.5 * gf(y)(0, 1)); };
  s.omega = s.Omega * directional_fd(logOmega, x, f.e[weyl::E4], h_scale, richardson);
  s.omegab = s.Omega * directional_fd(logOmega, x, f.e[weyl::E3], h_scale, richardson);
  s.omegahat = s.omega / s.Omega;
  s.omegabhat = s.omegab / s.Omega;

  Vec2 dlo;
  for (int A = 0; A < 2; ++A) dlo[A] = directional_fd(logOmega, x, f.e[A], h_scale, richardson);
  s.eta = s.zeta + dlo;
  s.etab = dlo - s.zeta;

  // Gauss curvature of the sphere from the 2D angular block.
  auto g2 = [&](double th, double ph) {
    Vec4 y = x;
    y[2] = th;
    y[3] = ph;
    Mat4 gy = gf(y);
    Mat2 m;
    m(0, 0) = gy(2, 2);
    m(0, 1) = gy(2, 3);
    m(1, 0) = gy(3, 2);
    m(1, 1) = gy(3, 3);
    return m;
  };
  double h2 = fd_step(x[2], h_scale);
  auto christoffel2 = [&](double th, double ph, double G[2][2][2]) {
    Mat2 m = g2(th, ph);
    double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    Mat2 mi;
    mi(0, 0) = m(1, 1) / det;
    mi(1, 1) = m(0, 0) / det;
    mi(0, 1) = mi(1, 0) = -m(0, 1) / det;
    double dg[2][2][2];
    for (int k = 0; k < 2; ++k) {
      Mat2 gp = g2(th + (k == 0 ? h2 : 0.0), ph + (k == 1 ? h2 : 0.0));
      Mat2 gm = g2(th - (k == 0 ? h2 : 0.0), ph - (k == 1 ? h2 : 0.0));
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) dg[k][a][b] = (gp(a, b) - gm(a, b)) / (2.0 * h2);
    }
    for (int l = 0; l < 2; ++l)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          double v = 0.0;
          for (int k = 0; k < 2; ++k) v += 0.5 * mi(l, k) * (dg[a][k][b] + dg[b][k][a] - dg[k][a][b]);
          G[l][a][b] = v;
        }
  };
  double G0[2][2][2];
  christoffel2(x[2], x[3], G0);
  // R^0_{101} = d_0 G^0_{11} - d_1 G^0_{01} + G G terms; K = R_{0101}/det.
  double Gp[2][2][2], Gm[2][2][2], Gq[2][2][2], Gr[2][2][2];
  christoffel2(x[2] + h2, x[3], Gp);
  christoffel2(x[2] - h2, x[3], Gm);
  christoffel2(x[2], x[3] + h2, Gq);
  christoffel2(x[2], x[3] - h2, Gr);
  // R^l_{101} = d_0 Gamma^l_{11} - d_1 Gamma^l_{01} + [Gamma, Gamma]; K = R_{0101}/det.
  double Rup[2];
  for (int l = 0; l < 2; ++l) {
    double d0 = (Gp[l][1][1] - Gm[l][1][1]) / (2.0 * h2);
    double d1 = (Gq[l][0][1] - Gr[l][0][1]) / (2.0 * h2);
    Rup[l] = d0 - d1;
    for (int k = 0; k < 2; ++k) Rup[l] += G0[l][0][k] * G0[k][1][1] - G0[l][1][k] * G0[k][0][1];
  }
  Mat2 m0 = g2(x[2], x[3]);
  double det0 = m0(0, 0) * m0(1, 1) - m0(0, 1) * m0(1, 0);
  s.K = (m0(0, 0) * Rup[0] + m0(0, 1) * Rup[1]) / det0;
  return s;
}

double eikonal_condition_residual(const FoliationChange& fc, const StructureCoefficients& s) {
  // shift enters through the L-derivative evaluator itself
  return fc.Lbf * fc.Lf - s.Omega * s.Omega * dot(fc.gradf, fc.gradf);
}

StructureCoefficients transform_foliation(const FoliationChange& fc,
                                          const StructureCoefficients& s) {
  if (!(fc.Lbf > 0.0) || !(fc.Lg > 0.0))
    throw PositivityError("foliation change requires Lbar f > 0 and L g > 0");
  const double D = fc.Lbf * fc.Lg;
  const double sqD = std::sqrt(D);
  const double O = s.Omega;
  Vec2 gradO = O * s.dlog_Omega();

  StructureCoefficients t;
  t.Omega = O / sqD;
  t.K = s.K;

  t.trchib = std::sqrt(fc.Lg / fc.Lbf) * s.trchib;
  t.chibhat = std::sqrt(fc.Lg / fc.Lbf) * s.chibhat;

  // chi_tilde from the full 2-tensor law, symmetrized gradient term.
  Mat2 chi = s.chihat + (0.5 * s.trchi) * Mat2::identity();
  Mat2 chib = s.chibhat + (0.5 * s.trchib) * Mat2::identity();
  Vec2 gradc = (2.0 / sqD) * gradO - (O / (D * sqD)) * fc.gradLbfLg;
  Mat2 chit = (fc.Lf / sqD) * chib + std::sqrt(fc.Lbf / fc.Lg) * chi;
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B)
      chit(A, B) -= 0.5 * (gradc[A] * fc.gradf[B] + gradc[B] * fc.gradf[A]) +
                    (2.0 * O / sqD) * fc.hessf(A, B);
  t.trchi = chit.trace();
  t.chihat = chit.tracefree();

  t.omegab = s.omegab / fc.Lbf - 0.5 * fc.LbLbf / (fc.Lbf * fc.Lbf);
  t.omegabhat = std::sqrt(fc.Lg / fc.Lbf) * s.omegabhat -
                0.5 * std::sqrt(fc.Lg) / std::pow(fc.Lbf, 1.5) * (fc.LbLbf / O);

  const double LD = fc.LLbf * fc.Lg + fc.Lbf * fc.LLg;  // L(Lbar f . Lg)
  t.omega = fc.Lf / D * s.omegab + s.omega / fc.Lg - (2.0 * O / D) * dot(fc.gradf, gradO) -
            0.5 * fc.Lf / (fc.Lbf * fc.Lbf * fc.Lg) * fc.LbLbf -
            0.5 * LD / (fc.Lbf * fc.Lg * fc.Lg) +
            (O * O) / (D * D) * dot(fc.gradf, fc.gradLbfLg);
  t.omegahat = t.omega / t.Omega;

  // Torsion and the eta pair are outside the fragment's transformation set;
  // zeta is carried through and the etas rebuilt from the new density.
  t.zeta = s.zeta;
  Vec2 dlOt = s.dlog_Omega() - (0.5 / D) * fc.gradLbfLg;
  t.eta = t.zeta + dlOt;
  t.etab = dlOt - t.zeta;
  return t;
}

StructureCoefficients boost_coefficients(const BoostLaw& b, const StructureCoefficients& s) {
  if (!(b.a > 0.0)) throw DomainError("boost requires a > 0");
  const double a = b.a;
  StructureCoefficients t = s;
  t.trchib = a * s.trchib;
  t.chibhat = a * s.chibhat;
  t.trchi = s.trchi / a;
  t.chihat = (1.0 / a) * s.chihat;
  t.zeta = s.zeta + b.dlog_a;
  double Dainv = -b.Da / (a * a);  // D a^{-1}
  t.omegabhat = a * s.omegabhat + b.Dbara / s.Omega;
  t.omegahat = s.omegahat / a + Dainv / s.Omega;
  t.omegab = s.Omega * t.omegabhat;
  t.omega = s.Omega * t.omegahat;
  // eta, etab unchanged
  return t;
}

double gauss_residual(const StructureCoefficients& s, double rho, double lambda) {
  return s.K + 0.25 * s.trchi * s.trchib - 0.5 * contract(s.chihat, s.chibhat) + rho -
         lambda / 3.0;
}

}  // namespace cosmoweyl::nullframe
