// SPDX-License-Identifier: Apache-2.0
#include "cosmoweyl/analysis.hpp"

#include <cmath>

namespace cosmoweyl::analysis {

SphereGrid SphereGrid::make(int ntheta, int nphi) {
  SphereGrid g;
  std::vector<double> x, w;
  gauss_legendre(ntheta, x, w);
  g.theta.resize(ntheta);
  g.wtheta = w;
  for (int i = 0; i < ntheta; ++i) g.theta[i] = std::acos(-x[i]);
  g.nphi = nphi;
  return g;
}

double SphereGrid::integrate(const std::function<double(double, double)>& f) const {
  double dphi = 2.0 * kPi / nphi;
  double sum = 0.0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    double row = 0.0;
    for (int j = 0; j < nphi; ++j) row += f(theta[i], phi_node(j));
    sum += wtheta[i] * row * dphi;
  }
  return sum;
}

Metric2Field round_sphere_metric(double r) {
  return [r](double th, double) {
    Mat2 m;
    m(0, 0) = r * r;
    m(1, 1) = r * r * std::sin(th) * std::sin(th);
    return m;
  };
}

Metric2Field section_metric(const std::function<double(double)>& r_of_theta) {
  return [r_of_theta](double th, double) {
    double r = r_of_theta(th);
    Mat2 m;
    m(0, 0) = r * r;
    m(1, 1) = r * r * std::sin(th) * std::sin(th);
    return m;
  };
}

double area(const Metric2Field& g, const SphereGrid& grid) {
  return grid.integrate([&](double th, double ph) {
    Mat2 m = g(th, ph);
    double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (det <= 0.0) throw DegenerateMetricError("sphere metric not positive definite");
    return std::sqrt(det) / std::sin(th);
  });
}

double area_radius(const Metric2Field& g, const SphereGrid& grid) {
  return std::sqrt(area(g, grid) / (4.0 * kPi));
}

double sphere_average(const ScalarField& f, const Metric2Field& g, const SphereGrid& grid) {
  double num = grid.integrate([&](double th, double ph) {
    Mat2 m = g(th, ph);
    return f(th, ph) * std::sqrt(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) / std::sin(th);
  });
  return num / area(g, grid);
}

ArealData areal_data(const ScalarField& Omega, const ScalarField& trchi,
                     const ScalarField& trchib, const Metric2Field& g, const SphereGrid& grid) {
  ArealData d;
  auto positive = [&](double v) { return v > 0.0; };
  // expansion signs checked on the grid
  for (std::size_t i = 0; i < grid.theta.size(); i += grid.theta.size() / 8 + 1)
    for (int j = 0; j < grid.nphi; j += grid.nphi / 8 + 1) {
      double th = grid.theta[i], ph = grid.phi_node(j);
      if (!positive(trchi(th, ph)) || !positive(trchib(th, ph)))
        throw ExpansionSignError("areal data requires trchi, trchib > 0");
    }
  d.r = area_radius(g, grid);
  d.avg_otrchi =
      sphere_average([&](double t, double p) { return Omega(t, p) * trchi(t, p); }, g, grid);
  d.avg_otrchib =
      sphere_average([&](double t, double p) { return Omega(t, p) * trchib(t, p); }, g, grid);
  d.q = std::sqrt(d.avg_otrchi / d.avg_otrchib);
  double r = d.r, denom = std::sqrt(d.avg_otrchi * d.avg_otrchib);
  d.phi_lapse = [Omega, r, denom](double th, double ph) {
    return 2.0 / r * Omega(th, ph) / denom;
  };
  return d;
}

IsoperimetricResult isoperimetric_check(const ScalarField& Phi, const ScalarField& grad_norm,
                                        const Metric2Field& g, const SphereGrid& grid) {
  double avg = sphere_average(Phi, g, grid);
  auto meas = [&](double th, double ph) {
    Mat2 m = g(th, ph);
    return std::sqrt(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) / std::sin(th);
  };
  IsoperimetricResult r;
  r.lhs = grid.integrate([&](double th, double ph) {
    double d = Phi(th, ph) - avg;
    return d * d * meas(th, ph);
  });
  double g1 = grid.integrate([&](double th, double ph) { return grad_norm(th, ph) * meas(th, ph); });
  r.rhs = g1 * g1;
  r.I_est = r.rhs > 0.0 ? r.lhs / r.rhs : 0.0;
  return r;
}

SobolevTraceResult sobolev_trace_check(const CylinderField& cyl, const SphereGrid& grid) {
  // trapezoid in u, quadrature on the spheres
  double du = (cyl.u1 - cyl.u0) / cyl.nu;
  double i6 = 0.0, i2 = 0.0, sup4 = 0.0;
  const double r = cyl.r;
  for (int k = 0; k <= cyl.nu; ++k) {
    double u = cyl.u0 + k * du;
    double wu = (k == 0 || k == cyl.nu) ? 0.5 : 1.0;
    auto meas = [&](double th, double ph) {
      Mat2 m = cyl.gslash(u, th, ph);
      return std::sqrt(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) / std::sin(th);
    };
    double s6 = grid.integrate([&](double th, double ph) {
      double v = cyl.value(u, th, ph);
      return std::pow(r * v, 6) * meas(th, ph);
    });
    double s2 = grid.integrate([&](double th, double ph) {
      double v = cyl.value(u, th, ph), gnorm = cyl.grad_norm(u, th, ph);
      return (v * v + r * r * gnorm * gnorm) * meas(th, ph);
    });
    double s4 = grid.integrate([&](double th, double ph) {
      double v = cyl.value(u, th, ph);
      return std::pow(r * v, 4) * meas(th, ph);
    });
    double a = cyl.a(u);
    i6 += wu * du * a * s6;
    i2 += wu * du * a * s2;
    sup4 = std::max(sup4, s4);
  }
  SobolevTraceResult out;
  out.l6_lhs = std::pow(i6, 1.0 / 6.0);
  out.l4_sup_lhs = std::pow(sup4, 0.25);
  out.rhs = std::sqrt(i2);
  out.ratio6 = out.rhs > 0.0 ? out.l6_lhs / out.rhs : 0.0;
  out.ratio4 = out.rhs > 0.0 ? out.l4_sup_lhs / out.rhs : 0.0;
  return out;
}

NullSobolevResult null_sobolev_check(const ConeField& cone, const SphereGrid& grid) {
  NullSobolevResult out;
  double dv = (cone.v1 - cone.v0) / cone.nv;
  // dimensionless L^p norms on the spheres of the cone
  auto nlp = [&](double v, const std::function<double(double, double)>& f, double p) {
    double r = cone.r(v);
    double s = grid.integrate([&](double th, double ph) { return std::pow(f(th, ph), p); });
    return std::pow(s * r * r / (4.0 * kPi * r * r), 1.0 / p);  // round measure r^2 cancels
  };
  double F = 0.0, l4 = 0.0, l6 = 0.0, sup = 0.0;
  for (int k = 0; k <= cone.nv; ++k) {
    double v = cone.v0 + k * dv;
    double w = (k == 0 || k == cone.nv) ? 0.5 : 1.0;
    double r = cone.r(v), O = cone.Omega(v), tc = cone.trchi(v);
    if (!(tc > 0.0)) throw ExpansionSignError("null Sobolev requires trchi > 0 on the cone");
    out.C_chi = std::max(out.C_chi, 0.5 * r * tc / O);
    auto val = [&](double th, double ph) { return cone.value(v, th, ph); };
    double n2 = nlp(v, [&](double t, double p) { return O * val(t, p); }, 2.0);
    double n2g = nlp(v, [&](double t, double p) { return O * cone.grad_norm(v, t, p); }, 2.0);
    double n2d = nlp(v, [&](double t, double p) { return cone.Dvalue(v, t, p) / O; }, 2.0);
    F += w * dv * (n2 * n2 + r * r * (n2g * n2g + n2d * n2d));
    double n4O = nlp(v, [&](double t, double p) { return O * val(t, p); }, 4.0);
    l4 += w * dv * n4O * n4O;
    double n4 = nlp(v, val, 4.0);
    sup = std::max(sup, r * n4 * n4);
    double n6 = nlp(v, val, 6.0);
    l6 += w * dv * O * O * r * r * std::pow(n6, 6);
  }
  out.F = F;
  double r0 = cone.r(cone.v0);
  double n40 = nlp(cone.v0, [&](double t, double p) { return cone.value(cone.v0, t, p); }, 4.0);
  out.D = r0 * n40 * n40;
  out.lhs4 = l4;
  out.ratio4 = F > 0.0 ? l4 / F : 0.0;
  out.lhs_sup = sup;
  out.ratio_sup = (out.D + F) > 0.0 ? sup / (out.D + F) : 0.0;
  out.lhs6 = l6;
  double rhs6 = (out.D * out.D + F * F) * F;
  out.ratio6 = rhs6 > 0.0 ? l6 / rhs6 : 0.0;
  return out;
}

Sym3 k_from_coefficients(const nullframe::StructureCoefficients& s,
                         const belrobinson::WeightDerivs& q) {
  Sym3 k;
  k.c[0][0] = 0.5 * (q.a * s.omegabhat + s.omegahat / q.a + q.Lbhat_a + q.Lhat_ainv);
  for (int A = 0; A < 2; ++A) {
    k.c[0][A + 1] = k.c[A + 1][0] = 0.5 * (s.eta[A] - s.etab[A]);
    for (int B = 0; B < 2; ++B) {
      double chib = s.chibhat(A, B) + (A == B ? 0.5 * s.trchib : 0.0);
      double chi = s.chihat(A, B) + (A == B ? 0.5 * s.trchi : 0.0);
      k.c[A + 1][B + 1] = 0.5 * (q.a * chib + chi / q.a);
    }
  }
  return k;
}

namespace {

// Coordinate scalings of the orthonormal frame (X, e1, e2) on the cylinder
// (u, theta, phi) with gbar = a2 du^2 + r^2 gamma.
struct Scales {
  double s[3];
};

Scales on_scales(double a2, double r, double th) {
  return {{std::sqrt(a2), r, r * std::sin(th)}};
}

using M3 = std::array<std::array<double, 3>, 3>;

M3 to_coord(const double on[3][3], const Scales& sc) {
  M3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = on[i][j] * sc.s[i] * sc.s[j];
  return m;
}

}  // namespace

HodgeResidual hodge_residual(const HodgeInput& in, const SphereGrid& grid) {
  // 1+3 reduction of the Bianchi equations on Sigma_r (electric/magnetic
  // pair), evaluated in comoving coordinates (u, theta, phi):
  //   div:   grad^k E_ki - eps_i^{lm} (H k)_{ml} = 0        (+ conjugate)
  //   evol:  Edot_ij = div^k Vbar_kij - 2 trk E_ij + 3 (kE)_ij + 2 (Ek)_ij
  //          - (k.E) g_ij,  Vbar_kij = -eps_ki^m H_mj       (+ conjugate)
  // valid for backgrounds whose lapse is constant on Sigma_r.
  const double r = in.r;
  HodgeResidual worst;

  auto coord_metric = [&](double rr, double u, double th) {
    M3 g{};
    g[0][0] = in.a2(rr, u);
    g[1][1] = rr * rr;
    g[2][2] = rr * rr * std::sin(th) * std::sin(th);
    return g;
  };
  auto em_coord = [&](double rr, double u, double th, double ph, bool electric) {
    weyl::EMPair e = in.em(rr, u, th, ph);
    Scales sc = on_scales(in.a2(rr, u), rr, th);
    return to_coord(electric ? e.E : e.H, sc);
  };

  // interior sample points
  std::vector<double> us(5), ths, phs;
  for (int i = 0; i < 5; ++i) us[i] = in.u0 + (i + 0.5) * (in.u1 - in.u0) / 5.0;
  for (std::size_t i = 1; i + 1 < grid.theta.size(); i += grid.theta.size() / 6 + 1)
    ths.push_back(grid.theta[i]);
  for (int j = 0; j < 4; ++j) phs.push_back(grid.phi_node(j * (grid.nphi / 4)));

  const double hu = 1e-4 * std::max(1.0, std::abs(in.u1 - in.u0));
  const double hth = 1e-4;

  for (double u : us)
    for (double th : ths)
      for (double ph : phs) {
        M3 g = coord_metric(r, u, th);
        double det = g[0][0] * g[1][1] * g[2][2];
        M3 ginv{};
        for (int i = 0; i < 3; ++i) ginv[i][i] = 1.0 / g[i][i];
        Scales sc = on_scales(in.a2(r, u), r, th);

        // 3D Christoffels by FD of the diagonal coordinate metric
        double G[3][3][3] = {};
        {
          double dg[3][3][3] = {};
          double hs[3] = {hu, hth, hth};
          for (int kk = 0; kk < 3; ++kk) {
            double up[3] = {u, th, ph}, um[3] = {u, th, ph};
            up[kk] += hs[kk];
            um[kk] -= hs[kk];
            M3 gp = coord_metric(r, up[0], up[1]);
            M3 gm = coord_metric(r, um[0], um[1]);
            for (int a = 0; a < 3; ++a)
              for (int b = 0; b < 3; ++b) dg[kk][a][b] = (gp[a][b] - gm[a][b]) / (2.0 * hs[kk]);
          }
          for (int l = 0; l < 3; ++l)
            for (int a = 0; a < 3; ++a)
              for (int b = 0; b < 3; ++b) {
                double v = 0.0;
                for (int kk = 0; kk < 3; ++kk)
                  v += 0.5 * ginv[l][kk] * (dg[a][kk][b] + dg[b][kk][a] - dg[kk][a][b]);
                G[l][a][b] = v;
              }
        }

        // covariant derivative of a coordinate 2-tensor field by FD
        auto nabla = [&](const std::function<M3(double, double, double)>& T, double DT[3][3][3]) {
          double hs[3] = {hu, hth, hth};
          M3 T0 = T(u, th, ph);
          for (int kk = 0; kk < 3; ++kk) {
            double up[3] = {u, th, ph}, um[3] = {u, th, ph};
            up[kk] += hs[kk];
            um[kk] -= hs[kk];
            M3 Tp = T(up[0], up[1], up[2]);
            M3 Tm = T(um[0], um[1], um[2]);
            for (int i = 0; i < 3; ++i)
              for (int j = 0; j < 3; ++j) {
                double v = (Tp[i][j] - Tm[i][j]) / (2.0 * hs[kk]);
                for (int l = 0; l < 3; ++l)
                  v -= G[l][kk][i] * T0[l][j] + G[l][kk][j] * T0[i][l];
                DT[kk][i][j] = v;
              }
          }
        };

        auto Ef = [&](double uu, double tt, double pp) { return em_coord(r, uu, tt, pp, true); };
        auto Hf = [&](double uu, double tt, double pp) { return em_coord(r, uu, tt, pp, false); };
        double DE[3][3][3], DH[3][3][3];
        nabla(Ef, DE);
        nabla(Hf, DH);

        M3 E = Ef(u, th, ph), H = Hf(u, th, ph);
        Sym3 kON = in.k(r, u);
        M3 kc = to_coord(kON.c, sc);

        // epsilon with eps_{u theta phi} = +sqrt(det)
        auto eps3 = [&](int a, int b, int c) -> double {
          if (a == b || b == c || a == c) return 0.0;
          int sgn = 1;
          int p[3] = {a, b, c};
          if (p[0] > p[1]) std::swap(p[0], p[1]), sgn = -sgn;
          if (p[1] > p[2]) std::swap(p[1], p[2]), sgn = -sgn;
          if (p[0] > p[1]) std::swap(p[0], p[1]), sgn = -sgn;
          return sgn * std::sqrt(det);
        };

        double trk = 0.0, kdotE = 0.0, kdotH = 0.0;
        for (int i = 0; i < 3; ++i) trk += ginv[i][i] * kc[i][i];
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            kdotE += ginv[i][i] * ginv[j][j] * kc[i][j] * E[i][j];
            kdotH += ginv[i][i] * ginv[j][j] * kc[i][j] * H[i][j];
          }

        // div equations
        for (int i = 0; i < 3; ++i) {
          double divE = 0.0, divH = 0.0;
          for (int kk = 0; kk < 3; ++kk) {
            divE += ginv[kk][kk] * DE[kk][kk][i];
            divH += ginv[kk][kk] * DH[kk][kk][i];
          }
          double hkE = 0.0, hkH = 0.0;  // eps_i^{lm} (Hk)_{ml}
          for (int l = 0; l < 3; ++l)
            for (int m = 0; m < 3; ++m) {
              double e = eps3(i, l, m) * ginv[l][l] * ginv[m][m];
              double Hk = 0.0, Ek = 0.0;
              for (int n = 0; n < 3; ++n) {
                Hk += H[m][n] * ginv[n][n] * kc[n][l];
                Ek += E[m][n] * ginv[n][n] * kc[n][l];
              }
              hkE += e * Hk;
              hkH += e * Ek;
            }
          worst.div_E = std::max(worst.div_E, std::abs((divE - hkE) / sc.s[i]));
          worst.div_H = std::max(worst.div_H, std::abs((divH + hkH) / sc.s[i]));
        }

        // evolution equations; comoving r-derivative
        double hrr = in.hr * std::max(1.0, r);
        double phi0 = in.phi(r);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            double Edot =
                (em_coord(r + hrr, u, th, ph, true)[i][j] - em_coord(r - hrr, u, th, ph, true)[i][j]) /
                (2.0 * hrr) / phi0;
            double Hdot =
                (em_coord(r + hrr, u, th, ph, false)[i][j] -
                 em_coord(r - hrr, u, th, ph, false)[i][j]) /
                (2.0 * hrr) / phi0;
            // div^k Vbar_kij with Vbar_kij = -eps_ki^m H_mj (electric equation);
            // eps is metric-compatible so it passes through nabla
            double divV_E = 0.0, divV_H = 0.0;
            for (int kk = 0; kk < 3; ++kk)
              for (int m = 0; m < 3; ++m) {
                double ekim = eps3(kk, i, m) * ginv[kk][kk] * ginv[m][m];
                divV_E += -ekim * DH[kk][m][j] * 1.0;
                divV_H += ekim * DE[kk][m][j] * 1.0;
              }
            double kE_ij = 0.0, Ek_ij = 0.0, kH_ij = 0.0, Hk_ij = 0.0;
            for (int l = 0; l < 3; ++l) {
              kE_ij += ginv[l][l] * kc[i][l] * E[l][j];
              Ek_ij += ginv[l][l] * E[i][l] * kc[l][j];
              kH_ij += ginv[l][l] * kc[i][l] * H[l][j];
              Hk_ij += ginv[l][l] * H[i][l] * kc[l][j];
            }
            double RE = Edot - divV_E + 2.0 * trk * E[i][j] - 3.0 * kE_ij - 2.0 * Ek_ij +
                        kdotE * g[i][j];
            double RH = Hdot - divV_H + 2.0 * trk * H[i][j] - 3.0 * kH_ij - 2.0 * Hk_ij +
                        kdotH * g[i][j];
            worst.evol_E = std::max(worst.evol_E, std::abs(RE / (sc.s[i] * sc.s[j])));
            worst.evol_H = std::max(worst.evol_H, std::abs(RH / (sc.s[i] * sc.s[j])));
          }
      }
  return worst;
}

}  // namespace cosmoweyl::analysis
