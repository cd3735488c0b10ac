// SPDX-License-Identifier: Apache-2.0
#include "cosmoweyl/weyl.hpp"

#include <cmath>

namespace cosmoweyl::weyl {

double frame_metric(int a, int b) {
  if (a < 2 && b < 2) return a == b ? 1.0 : 0.0;
  if ((a == E3 && b == E4) || (a == E4 && b == E3)) return -2.0;
  return 0.0;
}

double frame_metric_inv(int a, int b) {
  if (a < 2 && b < 2) return a == b ? 1.0 : 0.0;
  if ((a == E3 && b == E4) || (a == E4 && b == E3)) return -0.5;
  return 0.0;
}

double frame_epsilon(int a, int b, int c, int d) {
  int idx[4] = {a, b, c, d};
  // sign of the permutation taking (0,1,2,3) to idx, times 2
  int perm[4] = {idx[0], idx[1], idx[2], idx[3]};
  bool seen[4] = {false, false, false, false};
  for (int i = 0; i < 4; ++i) {
    if (perm[i] < 0 || perm[i] > 3 || seen[perm[i]]) {
      if (perm[i] >= 0 && perm[i] <= 3 && seen[perm[i]]) return 0.0;
      return 0.0;
    }
    seen[perm[i]] = true;
  }
  int sgn = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (perm[i] > perm[j]) sgn = -sgn;
  return 2.0 * sgn;
}

Frame double_null_frame(const Mat4& g, const Vec4& /*x*/) {
  // Canonical double-null chart: coordinates (u, v, theta1, theta2), with the
  // shift possibly on either null side. Detect the side carrying the shift.
  double uu = std::abs(g(0, 0)) + std::abs(g(0, 2)) + std::abs(g(0, 3));
  double vv = std::abs(g(1, 1)) + std::abs(g(1, 2)) + std::abs(g(1, 3));
  double scale = std::abs(g(0, 1));
  if (scale <= 0.0) throw FrameError("metric lacks the double-null cross term");
  double Omega2 = -0.5 * g(0, 1);
  if (Omega2 <= 0.0) throw FrameError("foliation density not positive");
  double Omega = std::sqrt(Omega2);

  // Angular block inverse for the shift.
  double gA[2][2] = {{g(2, 2), g(2, 3)}, {g(3, 2), g(3, 3)}};
  double det = gA[0][0] * gA[1][1] - gA[0][1] * gA[1][0];
  if (det <= 0.0) throw DegenerateMetricError("angular block degenerate");
  double gAinv[2][2] = {{gA[1][1] / det, -gA[0][1] / det}, {-gA[1][0] / det, gA[0][0] / det}};

  Frame f{};
  Vec4 Lb{1.0, 0.0, 0.0, 0.0};
  Vec4 L{0.0, 1.0, 0.0, 0.0};
  if (vv / scale > 1e-10 && uu / scale <= vv / scale) {
    // shift on the v side: L = dv + b^A dtheta_A with b^A = -gAinv g_{vB}
    for (int A = 0; A < 2; ++A)
      L[2 + A] = -(gAinv[A][0] * g(1, 2) + gAinv[A][1] * g(1, 3));
  } else if (uu / scale > 1e-10) {
    // shift on the u side
    for (int A = 0; A < 2; ++A)
      Lb[2 + A] = -(gAinv[A][0] * g(0, 2) + gAinv[A][1] * g(0, 3));
  }
  for (int m = 0; m < 4; ++m) {
    f.e[E3][m] = Lb[m] / Omega;
    f.e[E4][m] = L[m] / Omega;
  }

  // Gram-Schmidt on the sphere-tangent coordinate directions, deterministic
  // ordering (theta1 first).
  Vec4 t1{0.0, 0.0, 1.0, 0.0}, t2{0.0, 0.0, 0.0, 1.0};
  double n1 = std::sqrt(contract(g, t1, t1));
  for (int m = 0; m < 4; ++m) f.e[A1][m] = t1[m] / n1;
  double proj = contract(g, t2, f.e[A1]);
  Vec4 w2;
  for (int m = 0; m < 4; ++m) w2[m] = t2[m] - proj * f.e[A1][m];
  double n2 = std::sqrt(contract(g, w2, w2));
  for (int m = 0; m < 4; ++m) f.e[A2][m] = w2[m] / n2;

  if (std::abs(contract(g, f.e[E3], f.e[E4]) + 2.0) > 1e-10)
    throw FrameError("null frame normalization g(Lhat, Lbhat) = -2 failed");
  return f;
}

double Weyl4::antisymmetry_residual() const {
  double r = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          r = std::max(r, std::abs(c(a, b, m, n) + c(b, a, m, n)));
          r = std::max(r, std::abs(c(a, b, m, n) + c(a, b, n, m)));
        }
  return r;
}

double Weyl4::pair_symmetry_residual() const {
  double r = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
          r = std::max(r, std::abs(c(a, b, m, n) - c(m, n, a, b)));
  return r;
}

double Weyl4::cyclic_residual() const {
  double r = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
          r = std::max(r, std::abs(c(a, b, m, n) + c(a, m, n, b) + c(a, n, b, m)));
  return r;
}

double Weyl4::trace_residual() const {
  double r = 0.0;
  for (int b = 0; b < 4; ++b)
    for (int n = 0; n < 4; ++n) {
      double t = 0.0;
      for (int a = 0; a < 4; ++a)
        for (int m = 0; m < 4; ++m) t += frame_metric_inv(a, m) * c(a, b, m, n);
      r = std::max(r, std::abs(t));
    }
  return r;
}

double EMPair::symmetry_residual() const {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r = std::max(r, std::max(std::abs(E[i][j] - E[j][i]), std::abs(H[i][j] - H[j][i])));
  return r;
}

double EMPair::trace_residual() const {
  double te = E[0][0] + E[1][1] + E[2][2];
  double th = H[0][0] + H[1][1] + H[2][2];
  return std::max(std::abs(te), std::abs(th));
}

Tensor4 weyl_from_riemann(const Tensor4& riem, const Mat4& g, double lambda) {
  Tensor4 w;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
          w(a, b, m, n) =
              riem(a, b, m, n) + lambda / 3.0 * (g(a, n) * g(b, m) - g(a, m) * g(b, n));
  return w;
}

Weyl4 to_frame(const Tensor4& coord, const Frame& f) {
  Weyl4 w;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          double s = 0.0;
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
              for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l)
                  s += coord(i, j, k, l) * f.e[a][i] * f.e[b][j] * f.e[m][k] * f.e[n][l];
          w(a, b, m, n) = s;
        }
  return w;
}

WeylNull null_decompose(const Weyl4& w) {
  WeylNull n;
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B) {
      n.abar(A, B) = w(A, E3, B, E3);
      n.a(A, B) = w(A, E4, B, E4);
    }
  for (int A = 0; A < 2; ++A) {
    n.bbar[A] = 0.5 * w(A, E3, E3, E4);
    n.b[A] = 0.5 * w(A, E4, E3, E4);
  }
  n.rho = 0.25 * w(E3, E4, E3, E4);
  n.sigma = 0.25 * (w(A1, A2, E3, E4) - w(A2, A1, E3, E4));
  return n;
}

namespace {

// eps_AB with eps_12 = +1.
inline double eps2(int A, int B) { return A == B ? 0.0 : (A == 0 ? 1.0 : -1.0); }
inline double delta2(int A, int B) { return A == B ? 1.0 : 0.0; }

// Writes all eight Weyl-symmetry images of W_{abcd} = v.
void fill(Weyl4& w, int a, int b, int c, int d, double v) {
  w(a, b, c, d) = v;
  w(b, a, c, d) = -v;
  w(a, b, d, c) = -v;
  w(b, a, d, c) = v;
  w(c, d, a, b) = v;
  w(d, c, a, b) = -v;
  w(c, d, b, a) = -v;
  w(d, c, b, a) = v;
}

}  // namespace

Weyl4 reconstruct(const WeylNull& n) {
  Weyl4 w;
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B) {
      fill(w, A, E3, B, E3, n.abar(A, B));
      fill(w, A, E4, B, E4, n.a(A, B));
      fill(w, A, E3, B, E4, -n.rho * delta2(A, B) + n.sigma * eps2(A, B));
    }
  for (int A = 0; A < 2; ++A) {
    fill(w, A, E3, E3, E4, 2.0 * n.bbar[A]);
    fill(w, A, E4, E3, E4, 2.0 * n.b[A]);
  }
  fill(w, E3, E4, E3, E4, 4.0 * n.rho);
  fill(w, A1, A2, E3, E4, 2.0 * n.sigma * eps2(A1, A2));
  // Components with one null leg against two angular legs, and the purely
  // angular block.
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B)
      for (int C = 0; C < 2; ++C) {
        if (B == C) continue;
        fill(w, A, E3, B, C, delta2(A, B) * n.bbar[C] - delta2(A, C) * n.bbar[B]);
        fill(w, A, E4, B, C, -delta2(A, B) * n.b[C] + delta2(A, C) * n.b[B]);
      }
  fill(w, A1, A2, A1, A2, -n.rho * eps2(A1, A2) * eps2(A1, A2));
  return w;
}

Weyl4 dual(const Weyl4& w) {
  Weyl4 d;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          double s = 0.0;
          for (int c = 0; c < 4; ++c)
            for (int e = 0; e < 4; ++e) {
              // raise (c,e) on W
              double wab = 0.0;
              for (int cp = 0; cp < 4; ++cp)
                for (int ep = 0; ep < 4; ++ep)
                  wab += w(a, b, cp, ep) * frame_metric_inv(cp, c) * frame_metric_inv(ep, e);
              s += 0.5 * wab * frame_epsilon(c, e, m, n);
            }
          d(a, b, m, n) = s;
        }
  return d;
}

double sigma_from_dual(const Weyl4& w) {
  Weyl4 d = dual(w);
  return 0.25 * d(E3, E4, E3, E4);
}

WeylNull boost_weyl(double a, const WeylNull& w) {
  if (!(a > 0.0)) throw DomainError("boost parameter must be positive");
  WeylNull r;
  r.abar = (a * a) * w.abar;
  r.bbar = a * w.bbar;
  r.rho = w.rho;
  r.sigma = w.sigma;
  r.b = (1.0 / a) * w.b;
  r.a = (1.0 / (a * a)) * w.a;
  return r;
}

EMPair em_decompose(const WeylNull& w, double q) {
  WeylNull wq = boost_weyl(q, w);
  EMPair em;
  em.E[0][0] = wq.rho;
  em.H[0][0] = wq.sigma;
  Vec2 sb = star(wq.bbar), s = star(wq.b);
  Mat2 sabar = star(wq.abar), sa = star(wq.a);
  for (int A = 0; A < 2; ++A) {
    em.E[0][A + 1] = em.E[A + 1][0] = 0.5 * (wq.bbar[A] + wq.b[A]);
    em.H[0][A + 1] = em.H[A + 1][0] = 0.5 * (sb[A] - s[A]);
  }
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B) {
      em.E[A + 1][B + 1] = 0.25 * (wq.a(A, B) + wq.abar(A, B)) - 0.5 * wq.rho * delta2(A, B);
      em.H[A + 1][B + 1] = 0.25 * (sabar(A, B) - sa(A, B)) - 0.5 * wq.sigma * delta2(A, B);
    }
  return em;
}

EMPair em_decompose_contraction(const WeylNull& w, double q) {
  Weyl4 W = reconstruct(w);
  Weyl4 Ws = dual(W);
  // n = (1/2)(q e3 + q^{-1} e4), X = (1/2)(q e3 - q^{-1} e4), frame components.
  double nc[4] = {0.0, 0.0, 0.5 * q, 0.5 / q};
  double Xc[4] = {0.0, 0.0, 0.5 * q, -0.5 / q};
  auto comp = [&](const Weyl4& T, const double* y, const double* z) {
    double s = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) s += T(a, b, c, d) * nc[a] * y[b] * nc[c] * z[d];
    return s;
  };
  const double* dirs[3] = {Xc, nullptr, nullptr};
  double eA1[4] = {1.0, 0.0, 0.0, 0.0}, eA2[4] = {0.0, 1.0, 0.0, 0.0};
  dirs[1] = eA1;
  dirs[2] = eA2;
  EMPair em;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      em.E[i][j] = comp(W, dirs[i], dirs[j]);
      em.H[i][j] = comp(Ws, dirs[i], dirs[j]);
    }
  return em;
}

void christoffel_fd(const charts::MetricField& gf, const Vec4& x, double h_scale,
                    double gamma[4][4][4]) {
  Mat4 g = gf(x);
  Mat4 ginv = inverse(g);
  double dg[4][4][4];  // dg[k][m][n] = d_k g_mn
  for (int k = 0; k < 4; ++k) {
    double h = fd_step(x[k], h_scale);
    Vec4 xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    Mat4 gp = gf(xp), gm = gf(xm);
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) dg[k][m][n] = (gp(m, n) - gm(m, n)) / (2.0 * h);
  }
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        double s = 0.0;
        for (int k = 0; k < 4; ++k)
          s += 0.5 * ginv(l, k) * (dg[m][k][n] + dg[n][k][m] - dg[k][m][n]);
        gamma[l][m][n] = s;
      }
}

Tensor4 riemann_fd(const charts::MetricField& gf, const Vec4& x, double h_scale) {
  // R^l_{s m n} = d_m Gamma^l_{n s} - d_n Gamma^l_{m s} + Gamma Gamma, lowered
  // with g. Christoffels at shifted points carry their own metric stencils.
  double g0[4][4][4];
  christoffel_fd(gf, x, h_scale, g0);
  double dG[4][4][4][4];  // dG[k][l][m][n] = d_k Gamma^l_{mn}
  for (int k = 0; k < 4; ++k) {
    double h = fd_step(x[k], h_scale);
    Vec4 xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    double gp[4][4][4], gm[4][4][4];
    christoffel_fd(gf, xp, h_scale, gp);
    christoffel_fd(gf, xm, h_scale, gm);
    for (int l = 0; l < 4; ++l)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) dG[k][l][m][n] = (gp[l][m][n] - gm[l][m][n]) / (2.0 * h);
  }
  Mat4 g = gf(x);
  Tensor4 up;  // R^l_{smn} in c(l, s, m, n)
  for (int l = 0; l < 4; ++l)
    for (int s = 0; s < 4; ++s)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          double v = dG[m][l][n][s] - dG[n][l][m][s];
          for (int k = 0; k < 4; ++k)
            v += g0[l][m][k] * g0[k][n][s] - g0[l][n][k] * g0[k][m][s];
          up(l, s, m, n) = v;
        }
  Tensor4 low;
  for (int a = 0; a < 4; ++a)
    for (int s = 0; s < 4; ++s)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          double v = 0.0;
          for (int l = 0; l < 4; ++l) v += g(a, l) * up(l, s, m, n);
          low(a, s, m, n) = v;
        }
  return low;
}

}  // namespace cosmoweyl::weyl
