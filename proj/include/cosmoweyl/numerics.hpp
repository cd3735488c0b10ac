// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace cosmoweyl {

inline constexpr double kPi = 3.14159265358979323846;

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;

inline double dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double norm(const Vec2& a) { return std::sqrt(dot(a, a)); }

inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }
inline Vec2 operator*(double s, const Vec2& a) { return {s * a[0], s * a[1]}; }

// Hodge dual of a 1-form on the sphere frame, *xi_A = eps_A^B xi_B with eps_12 = +1.
inline Vec2 star(const Vec2& xi) { return {xi[1], -xi[0]}; }

// 2x2 matrices (sphere-frame tensors).
struct Mat2 {
  double a[2][2] = {{0.0, 0.0}, {0.0, 0.0}};

  double& operator()(int i, int j) { return a[i][j]; }
  double operator()(int i, int j) const { return a[i][j]; }

  static Mat2 zero() { return {}; }
  static Mat2 identity() {
    Mat2 m;
    m.a[0][0] = m.a[1][1] = 1.0;
    return m;
  }

  double trace() const { return a[0][0] + a[1][1]; }
  Mat2 tracefree() const {
    Mat2 m = *this;
    double t = 0.5 * trace();
    m.a[0][0] -= t;
    m.a[1][1] -= t;
    return m;
  }
  // |A|^2 = A_AB A_AB in an orthonormal frame.
  double norm2() const {
    double s = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) s += a[i][j] * a[i][j];
    return s;
  }
};

inline Mat2 operator+(const Mat2& x, const Mat2& y) {
  Mat2 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.a[i][j] = x.a[i][j] + y.a[i][j];
  return m;
}
inline Mat2 operator-(const Mat2& x, const Mat2& y) {
  Mat2 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.a[i][j] = x.a[i][j] - y.a[i][j];
  return m;
}
inline Mat2 operator*(double s, const Mat2& x) {
  Mat2 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.a[i][j] = s * x.a[i][j];
  return m;
}

// (A,B) = A_AB B_AB.
inline double contract(const Mat2& x, const Mat2& y) {
  double s = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s += x.a[i][j] * y.a[i][j];
  return s;
}
// A(xi^#, eta^#) = A_AB xi_A eta_B (orthonormal frame).
inline double contract(const Mat2& x, const Vec2& xi, const Vec2& eta) {
  double s = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s += x.a[i][j] * xi[i] * eta[j];
  return s;
}
// (A . xi)_A = A_A^B xi_B.
inline Vec2 apply(const Mat2& x, const Vec2& xi) {
  return {x.a[0][0] * xi[0] + x.a[0][1] * xi[1], x.a[1][0] * xi[0] + x.a[1][1] * xi[1]};
}
// Dual (*A)_AB = eps_A^C A_CB.
inline Mat2 star(const Mat2& x) {
  Mat2 m;
  for (int j = 0; j < 2; ++j) {
    m.a[0][j] = x.a[1][j];
    m.a[1][j] = -x.a[0][j];
  }
  return m;
}
// Symmetric trace-free part of xi (x) eta: (xi ox eta)_AB = xi_A eta_B + xi_B eta_A - (xi.eta) g_AB.
inline Mat2 tracefree_sym_outer(const Vec2& xi, const Vec2& eta) {
  Mat2 m;
  double d = dot(xi, eta);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.a[i][j] = xi[i] * eta[j] + xi[j] * eta[i];
  m.a[0][0] -= d;
  m.a[1][1] -= d;
  return m;
}

// 4x4 matrices (spacetime metric components).
struct Mat4 {
  double a[4][4] = {};

  double& operator()(int i, int j) { return a[i][j]; }
  double operator()(int i, int j) const { return a[i][j]; }

  static Mat4 identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m.a[i][i] = 1.0;
    return m;
  }
  static Mat4 minkowski() {
    Mat4 m;
    m.a[0][0] = -1.0;
    m.a[1][1] = m.a[2][2] = m.a[3][3] = 1.0;
    return m;
  }
};

Mat4 inverse(const Mat4& m);
double determinant(const Mat4& m);

inline Vec4 apply(const Mat4& m, const Vec4& v) {
  Vec4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += m.a[i][j] * v[j];
  return r;
}
inline double contract(const Mat4& m, const Vec4& x, const Vec4& y) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += m.a[i][j] * x[i] * y[j];
  return s;
}

// Rank-4 spacetime tensor, component storage.
struct Tensor4 {
  std::vector<double> c;
  Tensor4() : c(256, 0.0) {}
  double& operator()(int a, int b, int d, int e) { return c[((a * 4 + b) * 4 + d) * 4 + e]; }
  double operator()(int a, int b, int d, int e) const { return c[((a * 4 + b) * 4 + d) * 4 + e]; }
  double max_abs() const {
    double m = 0.0;
    for (double v : c) m = std::max(m, std::abs(v));
    return m;
  }
};

// Rank-3 spacetime tensor.
struct Tensor3 {
  std::vector<double> c;
  Tensor3() : c(64, 0.0) {}
  double& operator()(int a, int b, int d) { return c[(a * 4 + b) * 4 + d]; }
  double operator()(int a, int b, int d) const { return c[(a * 4 + b) * 4 + d]; }
  double max_abs() const {
    double m = 0.0;
    for (double v : c) m = std::max(m, std::abs(v));
    return m;
  }
};

// Central finite differences. Step h = scale * max(1,|x|) with a convergence
// check at h/2 available to callers through the two-step variants.
inline double fd_step(double x, double scale = 1e-5) { return scale * std::max(1.0, std::abs(x)); }

inline double fd_derivative(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}
inline double fd_derivative(const std::function<double(double)>& f, double x) {
  return fd_derivative(f, x, fd_step(x));
}
// Richardson-extrapolated first derivative, O(h^4).
inline double fd_derivative_rich(const std::function<double(double)>& f, double x, double h) {
  double d1 = fd_derivative(f, x, h);
  double d2 = fd_derivative(f, x, 0.5 * h);
  return (4.0 * d2 - d1) / 3.0;
}
inline double fd_second_derivative(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

// Adaptive Simpson quadrature.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-10, int max_depth = 40);

// Gauss-Legendre nodes and weights on [-1,1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Root finding: bisection refined by Newton. f must bracket the root on [a,b].
double solve_bracketed(const std::function<double(double)>& f, double a, double b,
                       double tol = 1e-14, int max_iter = 200);

// Data-parallel loop over [0,n); thread count capped by COSMOWEYL_THREADS.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cosmoweyl
