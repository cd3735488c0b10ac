// SPDX-License-Identifier: Apache-2.0
#include "cosmoweyl/belrobinson.hpp"

#include <cmath>

namespace cosmoweyl::belrobinson {

using weyl::frame_metric_inv;

Weyl4 bel_robinson(const Weyl4& w) {
  Weyl4 ws = weyl::dual(w);
  // raise the 2nd and 4th indices once
  auto raise24 = [](const Weyl4& t) {
    Weyl4 r;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) {
            double s = 0.0;
            for (int bp = 0; bp < 4; ++bp)
              for (int dp = 0; dp < 4; ++dp)
                s += t(a, bp, c, dp) * frame_metric_inv(bp, b) * frame_metric_inv(dp, d);
            r(a, b, c, d) = s;
          }
    return r;
  };
  Weyl4 wu = raise24(w), wsu = raise24(ws);
  Weyl4 q;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double s = 0.0;
          for (int r = 0; r < 4; ++r)
            for (int t = 0; t < 4; ++t)
              s += w(a, r, c, t) * wu(b, r, d, t) + ws(a, r, c, t) * wsu(b, r, d, t);
          q(a, b, c, d) = s;
        }
  return q;
}

double q_contract(const Weyl4& q, const Vec4& t1, const Vec4& t2, const Vec4& t3, const Vec4& t4) {
  double s = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) s += q(a, b, c, d) * t1[a] * t2[b] * t3[c] * t4[d];
  return s;
}

std::array<double, 5> q_null_components(const WeylNull& w) {
  return {2.0 * w.abar.norm2(), 4.0 * dot(w.bbar, w.bbar),
          4.0 * (w.rho * w.rho + w.sigma * w.sigma), 4.0 * dot(w.b, w.b), 2.0 * w.a.norm2()};
}

DeformationNull deformation(Multiplier vf, const StructureCoefficients& s,
                            const WeightDerivs& wd) {
  const double O = s.Omega;
  DeformationNull d;
  switch (vf) {
    case Multiplier::M: {
      d.nbar = 4.0 * s.omegabhat / O;
      d.nn = 4.0 * s.omegahat / O;
      d.j = 0.5 * (s.trchib + s.trchi) / O;
      d.mbar = (2.0 / O) * s.eta;
      d.mm = (2.0 / O) * s.etab;
      d.ii = (1.0 / O) * (s.chibhat + s.chihat) +
             (0.25 * (s.trchi + s.trchib) / O) * Mat2::identity();
      break;
    }
    case Multiplier::Ma: {
      const double a = wd.a;
      if (!(a > 0.0)) throw MissingDerivativeError("M_a requires a > 0 with derivatives");
      double T = a * s.trchib + s.trchi / a - wd.Lbhat_a - wd.Lhat_ainv;
      d.nbar = (4.0 * a * s.omegabhat + 2.0 * wd.Lbhat_a) / O;
      d.nn = (4.0 * s.omegahat / a + 2.0 * wd.Lhat_ainv) / O;
      d.j = 0.5 * T / O;
      d.mbar = (1.0 / O) * (2.0 * s.eta + wd.dlog_a);
      d.mm = (1.0 / O) * (2.0 * s.etab - wd.dlog_a);
      d.ii = (1.0 / O) * (a * s.chibhat + (1.0 / a) * s.chihat) + (0.25 * T / O) * Mat2::identity();
      break;
    }
    case Multiplier::N: {
      const double q = wd.a;
      if (!(q > 0.0)) throw MissingDerivativeError("N requires q > 0 with derivatives");
      double J = q * s.trchib + s.trchi / q - 2.0 * q * s.omegabhat - 2.0 * s.omegahat / q -
                 wd.Lbhat_a - wd.Lhat_ainv;
      d.nbar = 2.0 * O * wd.Lbhat_a;
      d.nn = 2.0 * O * wd.Lhat_ainv;
      d.j = 0.5 * O * J;
      d.mbar = O * (2.0 * s.zeta + wd.dlog_a);
      d.mm = (-1.0) * d.mbar;
      d.ii = O * (q * s.chibhat + (1.0 / q) * s.chihat) + (0.25 * O * J) * Mat2::identity();
      break;
    }
  }
  return d;
}

DeformationNull lie_derivative_fd(const charts::MetricField& gf, const VectorField& X,
                                  const Vec4& x, const weyl::Frame& frame, double h_scale) {
  Mat4 g = gf(x);
  Mat4 ginv = inverse(g);
  Vec4 Xc = X(x);
  // pi_mn = X^l d_l g_mn + g_ln d_m X^l + g_ml d_n X^l
  double dg[4][4][4], dX[4][4];
  for (int k = 0; k < 4; ++k) {
    double h = fd_step(x[k], h_scale);
    Vec4 xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    Mat4 gp = gf(xp), gm = gf(xm);
    Vec4 Xp = X(xp), Xm = X(xm);
    for (int m = 0; m < 4; ++m) {
      dX[k][m] = (Xp[m] - Xm[m]) / (2.0 * h);
      for (int n = 0; n < 4; ++n) dg[k][m][n] = (gp(m, n) - gm(m, n)) / (2.0 * h);
    }
  }
  Mat4 pi;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      double v = 0.0;
      for (int l = 0; l < 4; ++l)
        v += Xc[l] * dg[l][m][n] + g(l, n) * dX[m][l] + g(m, l) * dX[n][l];
      pi(m, n) = v;
    }
  double tr = 0.0;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) tr += ginv(m, n) * pi(m, n);
  Mat4 pihat;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) pihat(m, n) = pi(m, n) - 0.25 * tr * g(m, n);

  auto comp = [&](int a, int b) { return contract(pihat, frame.e[a], frame.e[b]); };
  DeformationNull d;
  d.nbar = comp(weyl::E3, weyl::E3);
  d.nn = comp(weyl::E4, weyl::E4);
  d.j = comp(weyl::E3, weyl::E4);
  for (int A = 0; A < 2; ++A) {
    d.mbar[A] = comp(weyl::E3, A);
    d.mm[A] = comp(weyl::E4, A);
    for (int B = 0; B < 2; ++B) d.ii(A, B) = comp(A, B);
  }
  return d;
}

FluxDensity flux_sigma_density(const WeylNull& w, double q, double Omega) {
  if (!(q > 0.0 && Omega > 0.0)) throw DomainError("flux density needs q, Omega > 0");
  WeylNull wq = weyl::boost_weyl(q, w);
  double pref = 1.0 / std::pow(2.0 * Omega, 3);
  FluxDensity f;
  f.breakdown = {pref * wq.abar.norm2(), pref * 8.0 * dot(wq.bbar, wq.bbar),
                 pref * 12.0 * (w.rho * w.rho + w.sigma * w.sigma), pref * 8.0 * dot(wq.b, wq.b),
                 pref * wq.a.norm2()};
  for (double t : f.breakdown) f.value += t;
  return f;
}

double flux_null_density(const WeylNull& w, double Omega) {
  return 0.25 / (Omega * Omega) *
         (2.0 * dot(w.bbar, w.bbar) + 6.0 * (w.rho * w.rho + w.sigma * w.sigma) +
          6.0 * dot(w.b, w.b) + w.a.norm2());
}

double flux_sigma_density_contraction(const WeylNull& w, double q, double Omega) {
  Weyl4 Q = bel_robinson(weyl::reconstruct(w));
  Vec4 n{0.0, 0.0, 0.5 * q, 0.5 / q};
  Vec4 M{0.0, 0.0, 0.5 * q / Omega, 0.5 / (q * Omega)};
  return q_contract(Q, n, M, M, M);
}

double flux_null_density_contraction(const WeylNull& w, double Omega) {
  Weyl4 Q = bel_robinson(weyl::reconstruct(w));
  Vec4 Lhat{0.0, 0.0, 0.0, 1.0};
  Vec4 M{0.0, 0.0, 0.5 / Omega, 0.5 / Omega};
  return Omega * q_contract(Q, Lhat, M, M, M);
}

namespace {

struct EffectiveCoeffs {
  double omh, ombh, T;
  Vec2 eta, etab;
  Mat2 chih, chibh;
};

EffectiveCoeffs effective(const StructureCoefficients& s, const WeightDerivs& wd) {
  EffectiveCoeffs e;
  const double a = wd.a;
  e.omh = s.omegahat / a + 0.5 * wd.Lhat_ainv;
  e.ombh = a * s.omegabhat + 0.5 * wd.Lbhat_a;
  e.T = a * s.trchib + s.trchi / a - wd.Lbhat_a - wd.Lhat_ainv;
  e.eta = s.eta + 0.5 * wd.dlog_a;
  e.etab = s.etab - 0.5 * wd.dlog_a;
  e.chih = (1.0 / a) * s.chihat;
  e.chibh = a * s.chibhat;
  return e;
}

}  // namespace

KDecomp k_decompose(const WeylNull& w, const StructureCoefficients& s, const WeightDerivs& wd) {
  // Substitution route: Lemma K:M evaluated on the boosted null components
  // with the effective coefficients of the boosted frame.
  if (!(wd.a > 0.0)) throw DomainError("k_decompose requires a > 0");
  WeylNull wa = weyl::boost_weyl(wd.a, w);
  EffectiveCoeffs e = effective(s, wd);
  const double O = s.Omega;
  const double pref = 3.0 / (O * O * O);
  const double rs2 = w.rho * w.rho + w.sigma * w.sigma;

  KDecomp k;
  k.kplus = pref * (0.25 * e.omh * wa.abar.norm2() + e.omh * dot(wa.bbar, wa.bbar) +
                    0.5 * (e.ombh + e.omh) * rs2 + e.ombh * dot(wa.b, wa.b) +
                    0.25 * e.ombh * wa.a.norm2() +
                    0.5 * e.T * (0.5 * dot(wa.bbar, wa.bbar) + rs2 + 0.5 * dot(wa.b, wa.b)));

  Mat2 shear = e.chibh + e.chih;
  Vec2 two_etab_eta = 2.0 * e.etab + e.eta;
  Vec2 two_eta_etab = 2.0 * e.eta + e.etab;
  k.kminus =
      pref *
      (0.5 * contract(wa.abar, e.etab, wa.bbar) - 0.5 * contract(wa.a, e.eta, wa.b) +
       0.5 * w.rho * (dot(two_etab_eta, wa.bbar) - dot(two_eta_etab, wa.b)) +
       0.5 * w.sigma * (dot(two_etab_eta, star(wa.bbar)) + dot(two_eta_etab, star(wa.b))) -
       contract(shear, wa.bbar, wa.b) + 0.25 * w.rho * contract(shear, wa.abar + wa.a) +
       0.25 * w.sigma * contract(shear, star(wa.abar) - star(wa.a)));
  return k;
}

double k_contraction(const WeylNull& w, const StructureCoefficients& s, const WeightDerivs& wd) {
  WeylNull wa = weyl::boost_weyl(wd.a, w);
  Weyl4 Q = bel_robinson(weyl::reconstruct(wa));
  DeformationNull p = deformation(Multiplier::Ma, s, wd);
  // raise the lowered null components: pi^{33} = pi_44/4, pi^{34} = pi_34/4,
  // pi^{3A} = -pi_{4A}/2, pi^{AB} = pi_AB
  double pu[4][4] = {};
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B) pu[A][B] = p.ii(A, B);
  pu[weyl::E3][weyl::E3] = 0.25 * p.nn;
  pu[weyl::E4][weyl::E4] = 0.25 * p.nbar;
  pu[weyl::E3][weyl::E4] = pu[weyl::E4][weyl::E3] = 0.25 * p.j;
  for (int A = 0; A < 2; ++A) {
    pu[weyl::E3][A] = pu[A][weyl::E3] = -0.5 * p.mm[A];
    pu[weyl::E4][A] = pu[A][weyl::E4] = -0.5 * p.mbar[A];
  }
  const double O = s.Omega;
  Vec4 M{0.0, 0.0, 0.5 / O, 0.5 / O};  // (1/2Omega)(e3 + e4) in the boosted frame
  double sum = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) sum += Q(a, b, c, d) * pu[a][b] * M[c] * M[d];
  return 1.5 * sum;
}

RedshiftCheck redshift_pointwise(const WeylNull& w, const StructureCoefficients& s, double q,
                                 double r, double eps0) {
  // Pointwise lapse with averages replaced by local values,
  // phi = 2/(r sqrt(trchi trchib)).
  if (!(s.trchi > 0.0 && s.trchib > 0.0)) {
    return {0.0, 0.0, false};
  }
  WeightDerivs wd;
  wd.a = q;
  KDecomp k = k_decompose(w, s, wd);
  double phi = 2.0 / (r * std::sqrt(s.trchi * s.trchib));
  RedshiftCheck c;
  c.lhs = phi * k.kplus;
  c.rhs = (6.0 / r) * (1.0 - eps0) * (1.0 - eps0) * flux_sigma_density(w, q, s.Omega).value;
  c.holds = c.lhs >= c.rhs;
  return c;
}

FrameBrackets commutator_frame(const StructureCoefficients& s, const WeightDerivs& q) {
  const double O = s.Omega;
  const double qq = q.a;
  Vec2 mb_minus_m_sharp = 2.0 * O * (2.0 * s.zeta + q.dlog_a);  // mbar - m = 2 mbar
  double nbar = 2.0 * O * q.Lbhat_a;
  double nn = 2.0 * O * q.Lhat_ainv;

  FrameBrackets b;
  Vec2 ang3 = (-0.5) * mb_minus_m_sharp + O * q.dlog_a;
  b.with_e3 = {ang3[0], ang3[1],
               -0.5 * O * (s.omegahat / qq + qq * s.omegabhat + q.Lhat_ainv), 0.25 * nbar};
  Vec2 ang4 = 0.5 * mb_minus_m_sharp - O * q.dlog_a;
  b.with_e4 = {ang4[0], ang4[1], 0.25 * nn,
               -0.5 * O * (qq * s.omegabhat + q.Lbhat_a + s.omegahat / qq)};
  for (int A = 0; A < 2; ++A) {
    // the part beyond (Omega/2) Pi[e3+e4, eA]
    b.with_eA[A] = {0.0, 0.0, -0.5 * O * q.dlog_a[A], 0.5 * O * q.dlog_a[A]};
  }
  return b;
}

Tensor4 modified_lie_weyl_fd(const charts::MetricField& gf, const WeylField& wf,
                             const VectorField& N, const Vec4& x, double h_scale) {
  Mat4 g = gf(x);
  Mat4 ginv = inverse(g);
  Tensor4 W = wf(x);
  Vec4 Nc = N(x);

  // Lie_N W by finite differences in coordinates.
  Tensor4 lie;
  double dN[4][4];
  std::array<Tensor4, 4> dW;
  for (int k = 0; k < 4; ++k) {
    double h = fd_step(x[k], h_scale);
    Vec4 xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    Tensor4 Wp = wf(xp), Wm = wf(xm);
    Vec4 Np = N(xp), Nm = N(xm);
    for (int m = 0; m < 4; ++m) dN[k][m] = (Np[m] - Nm[m]) / (2.0 * h);
    for (int i = 0; i < 256; ++i) dW[k].c[i] = (Wp.c[i] - Wm.c[i]) / (2.0 * h);
  }
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double v = 0.0;
          for (int l = 0; l < 4; ++l) {
            v += Nc[l] * dW[l](a, b, c, d);
            v += W(l, b, c, d) * dN[a][l] + W(a, l, c, d) * dN[b][l] + W(a, b, l, d) * dN[c][l] +
                 W(a, b, c, l) * dN[d][l];
          }
          lie(a, b, c, d) = v;
        }

  // pi = Lie_N g, its trace, and the mixed trace-free part.
  double dg[4][4][4];
  for (int k = 0; k < 4; ++k) {
    double h = fd_step(x[k], h_scale);
    Vec4 xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    Mat4 gp = gf(xp), gm = gf(xm);
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) dg[k][m][n] = (gp(m, n) - gm(m, n)) / (2.0 * h);
  }
  Mat4 pi;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      double v = 0.0;
      for (int l = 0; l < 4; ++l)
        v += Nc[l] * dg[l][m][n] + g(l, n) * dN[m][l] + g(m, l) * dN[n][l];
      pi(m, n) = v;
    }
  double tr = 0.0;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) tr += ginv(m, n) * pi(m, n);
  double pihat_mixed[4][4];  // pihat_a^m
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 4; ++m) {
      double v = 0.0;
      for (int n = 0; n < 4; ++n) v += (pi(a, n) - 0.25 * tr * g(a, n)) * ginv(n, m);
      pihat_mixed[a][m] = v;
    }

  Tensor4 out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double v = lie(a, b, c, d) - 0.125 * tr * W(a, b, c, d);
          for (int m = 0; m < 4; ++m)
            v -= 0.5 * (pihat_mixed[a][m] * W(m, b, c, d) + pihat_mixed[b][m] * W(a, m, c, d) +
                        pihat_mixed[c][m] * W(a, b, m, d) + pihat_mixed[d][m] * W(a, b, c, m));
          out(a, b, c, d) = v;
        }
  return out;
}

}  // namespace cosmoweyl::belrobinson
