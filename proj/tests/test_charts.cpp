// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cosmoweyl/charts.hpp"
#include "oracles.hpp"

using namespace cosmoweyl;
using namespace cosmoweyl::charts;

TEST_CASE("stereographic embedding hits the stated points") {
  auto p0 = embed_stereographic(0.0, {0.0, 0.0, 0.0});
  CHECK(p0.t == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(p0.x == doctest::Approx(1.0));

  auto p1 = embed_stereographic(0.0, {2.0, 0.0, 0.0});
  CHECK(p1.t == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(p1.x == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(p1.x1 == doctest::Approx(1.0));

  auto p2 = embed_stereographic(1.0, {0.0, 0.0, 0.0});
  CHECK(p2.t == doctest::Approx(4.0 / 3.0));
  CHECK(p2.x == doctest::Approx(5.0 / 3.0));
  CHECK(p2.hyperboloid_residual() == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(embed_stereographic(3.0, {0.0, 0.0, 0.0}), DomainError);
}

TEST_CASE("stereographic points satisfy the hyperboloid invariant") {
  for (int i = 0; i < 200; ++i) {
    double u = oracles::uniform(-3.0, 3.0);
    Vec3 y{oracles::uniform(-3.0, 3.0), oracles::uniform(-3.0, 3.0), oracles::uniform(-3.0, 3.0)};
    if (-u * u + dot(y, y) <= -4.0 + 1e-6) continue;
    auto p = embed_stereographic(u, y);
    CHECK(std::abs(p.hyperboloid_residual()) < 1e-10);
  }
}

TEST_CASE("stereographic metric: conformal factor and ambient pullback") {
  auto m0 = stereographic_metric(0.0, {0.0, 0.0, 0.0});
  CHECK(m0.g(0, 0) == doctest::Approx(-1.0));
  CHECK(m0.g(1, 1) == doctest::Approx(1.0));

  auto m1 = stereographic_metric(0.0, {2.0, 0.0, 0.0});
  CHECK(m1.g(1, 1) == doctest::Approx(0.25));

  auto phi = [](const Vec4& x) { return embed_stereographic(x[0], Vec3{x[1], x[2], x[3]}); };
  Vec4 pts[] = {{0.3, 0.5, -0.2, 0.9}, {1.2, 0.4, 1.5, -0.3}, {-0.7, 2.2, 0.1, 0.0}};
  for (const Vec4& x : pts) {
    Mat4 chart = stereographic_metric(x[0], Vec3{x[1], x[2], x[3]}).g;
    double e1 = oracles::metric_distance(oracles::pullback_ambient(phi, x, 2e-5), chart);
    double e2 = oracles::metric_distance(oracles::pullback_ambient(phi, x, 1e-5), chart);
    CHECK(e2 < 1e-8);
    // central differences: quartering under h -> h/2 (up to roundoff floor)
    CHECK(e2 < 0.4 * e1 + 1e-12);
  }
}

TEST_CASE("static coordinates") {
  auto [t0, r0] = static_coords({0.0, 1.0, 0.0, 0.0, 0.0});
  CHECK(t0 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(r0 == doctest::Approx(0.0).epsilon(1e-15));

  auto [t1, r1] = static_coords({4.0 / 3.0, 5.0 / 3.0, 0.0, 0.0, 0.0});
  CHECK(t1 == doctest::Approx(std::log(3.0)));
  CHECK(r1 == doctest::Approx(0.0).epsilon(1e-15));

  CHECK_THROWS_AS(static_coords({2.0, 1.0, 2.0, 0.0, 0.0}), DomainError);

  // static metric equals the ambient pullback
  auto phi = [](const Vec4& x) { return embed_static(x[0], x[1], x[2], x[3]); };
  auto gf = metric_field(Chart::Static, nullptr);
  Vec4 pts[] = {{0.2, 0.5, 1.1, 0.7}, {-0.8, 0.85, 2.0, 3.0}};
  for (const Vec4& x : pts) {
    double err = oracles::metric_distance(oracles::pullback_ambient(phi, x), gf(x));
    CHECK(err < 1e-8);
  }
}

TEST_CASE("optical functions of the spherical double-null foliation") {
  // any point of C0 = {x = 1, t = |x'|} has u = 1, u* = 0
  for (double t : {1.5, 2.0, 5.0}) {
    AmbientPoint5 p{t, 1.0, t, 0.0, 0.0};
    auto [us, vs] = ds_optical(p);
    CHECK(us == doctest::Approx(0.0).epsilon(1e-14));
    // on C0: v* = log((t-1)/(t+1))
    CHECK(vs == doctest::Approx(std::log((t - 1.0) / (t + 1.0))));
  }
  auto [us, vs] = ds_optical({2.0, 1.0, 2.0, 0.0, 0.0});
  CHECK(us == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(vs == doctest::Approx(-std::log(3.0)));
}

TEST_CASE("optical functions satisfy the eikonal equation in the stereographic chart") {
  auto gf = metric_field(Chart::Stereographic, nullptr);
  auto ustar = [](const Vec4& x) {
    auto p = embed_stereographic(x[0], Vec3{x[1], x[2], x[3]});
    return ds_optical(p).first;
  };
  auto vstar = [](const Vec4& x) {
    auto p = embed_stereographic(x[0], Vec3{x[1], x[2], x[3]});
    return ds_optical(p).second;
  };
  int n = 0;
  double worst_u = 0.0, worst_v = 0.0;
  while (n < 1000) {
    double u = oracles::uniform(0.1, 1.6);
    Vec3 y{oracles::uniform(-2.5, 2.5), oracles::uniform(-2.5, 2.5), oracles::uniform(-2.5, 2.5)};
    if (-u * u + dot(y, y) <= -3.9) continue;
    auto p = embed_stereographic(u, y);
    // stay inside the cosmological region, away from horizon and axis
    if (p.r() < 1.15 || p.r() > 25.0 || p.t < 0.3) continue;
    if (std::abs(p.x - p.t) < 0.05) continue;
    Vec4 x{u, y[0], y[1], y[2]};
    worst_u = std::max(worst_u, oracles::eikonal_residual(gf, ustar, x));
    worst_v = std::max(worst_v, oracles::eikonal_residual(gf, vstar, x));
    ++n;
  }
  CHECK(worst_u < 1e-8);
  CHECK(worst_v < 1e-8);
}

TEST_CASE("de Sitter double-null chart: radius, metric, ambient pullback") {
  // r from the optical functions matches |x'| of the ambient point
  for (int i = 0; i < 50; ++i) {
    double u = oracles::uniform(-1.5, -0.05), v = oracles::uniform(-1.5, -0.05);
    auto p = embed_double_null(u, v, oracles::uniform(0.3, 2.8), oracles::uniform(0.0, 6.2));
    CHECK(std::abs(p.hyperboloid_residual()) < 1e-12);
    auto [us, vs] = ds_optical(p);
    CHECK(us == doctest::Approx(2.0 * u).epsilon(1e-10));
    CHECK(vs == doctest::Approx(2.0 * v).epsilon(1e-10));
    CHECK(p.r() == doctest::Approx(ds_radius(2.0 * u, 2.0 * v)));
  }
  auto phi = [](const Vec4& x) { return embed_double_null(x[0], x[1], x[2], x[3]); };
  auto gf = metric_field(Chart::DoubleNullDS, nullptr);
  Vec4 pts[] = {{-0.4, -0.3, 1.2, 0.5}, {-0.15, -0.08, 2.1, 4.4}};
  for (const Vec4& x : pts) {
    double err = oracles::metric_distance(oracles::pullback_ambient(phi, x), gf(x));
    CHECK(err < 1e-8);
  }
}

TEST_CASE("ellipsoid level function v_phi") {
  // phi = 0 reduces to e^{-2 v*}
  for (int i = 0; i < 20; ++i) {
    double us = oracles::uniform(-2.0, 0.5), vs = oracles::uniform(-2.0, -0.05);
    double th = oracles::uniform(0.1, 3.0);
    CHECK(ellipsoid_vphi(us, vs, th, 0.0) == doctest::Approx(std::exp(-2.0 * vs)).epsilon(1e-12));
  }

  // level set through the spherical section on u* = 0 vs the small-angle
  // solution v*(theta) ~ -|eps| - phi cos(theta)/(1+|eps|), to O(phi^2)
  auto solve_level = [](double eps, double phi, double th) {
    double e = std::sqrt(1.0 + eps * eps);
    double level = (e + std::abs(eps)) / (e - std::abs(eps));
    auto f = [&](double vs) { return ellipsoid_vphi(0.0, vs, th, phi) - level; };
    return solve_bracketed(f, -1.0, -1e-4);
  };
  auto max_dev = [&](double eps, double phi) {
    double dev = 0.0;
    for (int k = 1; k < 20; ++k) {
      double th = kPi * k / 20.0;
      double approx = -std::abs(eps) - phi * std::cos(th) / (1.0 + std::abs(eps));
      dev = std::max(dev, std::abs(solve_level(eps, phi, th) - approx));
    }
    return dev;
  };
  double d1 = max_dev(0.2, 0.1);
  double d2 = max_dev(0.2, 0.05);
  CHECK(d1 < 0.1 * 0.1);      // O(phi^2) with a modest constant
  CHECK(d2 < 0.45 * d1);      // quadratic decay in phi (plus O(eps phi^2) dregs)

  // level sets of v*_phi are null: eikonal residual < 1e-6 on sampled points
  auto gf = metric_field(Chart::DoubleNullDS, nullptr);
  for (double phi : {0.05, 0.1}) {
    double worst = 0.0;
    for (int i = 0; i < 250; ++i) {
      Vec4 x{oracles::uniform(-1.2, -0.1), oracles::uniform(-1.2, -0.1),
             oracles::uniform(0.4, 2.7), oracles::uniform(0.0, 6.2)};
      auto f = [phi](const Vec4& y) {
        return ellipsoid_vphi_star(2.0 * y[0], 2.0 * y[1], y[2], phi);
      };
      worst = std::max(worst, oracles::eikonal_residual(gf, f, x));
    }
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("ellipsoid section evaluators") {
  auto s0 = ellipsoid_section(0.2, 0.0);
  CHECK_FALSE(s0.touches_infinity);
  for (double th : {0.3, 1.0, 2.5}) CHECK(s0.r(th) == doctest::Approx(10.0));

  auto s1 = ellipsoid_section(0.2, 0.1);
  CHECK(s1.r(kPi / 2.0) == doctest::Approx(10.0));
  CHECK(s1.r(0.0) == doctest::Approx(2.0 / (0.2 + 0.1 / 1.2)));

  // borderline |eps| just above |phi|/(1+|eps|): finite but near-touching
  auto s2 = ellipsoid_section(0.1, 0.1);
  CHECK_FALSE(s2.touches_infinity);
  CHECK(s2.r(kPi) == doctest::Approx(2.0 / (0.1 - 0.1 / 1.1)));
  CHECK(s2.r(kPi) > 100.0);

  auto s3 = ellipsoid_section(0.05, 0.1);
  CHECK(s3.touches_infinity);
}

TEST_CASE("SdS horizons: oracle roots and Vieta identities") {
  SdSParams p{3.0, 0.1};
  auto h = sds_horizons(p);

  // independent bisection oracle on r^3 - r + 0.2
  auto cubic = [](double r) { return r * r * r - r + 0.2; };
  double rH = solve_bracketed(cubic, 0.1, 0.5);
  double rC = solve_bracketed(cubic, 0.5, 1.0);
  CHECK(h.rH == doctest::Approx(rH).epsilon(1e-12));
  CHECK(h.rC == doctest::Approx(rC).epsilon(1e-12));
  CHECK(h.rH == doctest::Approx(0.209).epsilon(1e-3));
  CHECK(h.rC == doctest::Approx(0.879).epsilon(1e-3));

  // de Sitter limit m -> 0+
  SdSParams tiny{3.0, 1e-9};
  auto ht = sds_horizons(tiny);
  CHECK(ht.rH < 1e-8);
  CHECK(ht.rC == doctest::Approx(1.0).epsilon(1e-8));

  // Vieta residuals for a sweep of parameters
  for (double m : {0.01, 0.05, 0.1, 0.15}) {
    SdSParams q{3.0, m};
    auto r = sds_horizons(q);
    CHECK(std::abs(r.rbarC + r.rH + r.rC) < 1e-10);
    CHECK(std::abs(r.rbarC * r.rH + r.rbarC * r.rC + r.rH * r.rC + 3.0 / q.lambda) < 1e-10);
    CHECK(std::abs(r.rbarC * r.rH * r.rC + 6.0 * q.m / q.lambda) < 1e-10);
  }
  CHECK_THROWS_AS(sds_horizons(SdSParams{3.0, 0.3}), NoHorizonError);
}

TEST_CASE("Regge-Wheeler coordinate and its inverse") {
  SdSParams p{3.0, 0.1};

  // r* -> 0^- as r -> infinity
  CHECK(sds_rstar(p, 1e8) < 0.0);
  CHECK(std::abs(sds_rstar(p, 1e8)) < 1e-7);

  // pure de Sitter limit: r* -> -(1/2) log((r+1)/(r-1))
  SdSParams tiny{3.0, 1e-12};
  CHECK(sds_rstar(tiny, 2.0) == doctest::Approx(-0.5 * std::log(3.0)).epsilon(1e-9));

  // quadrature oracle for the defining integral
  for (double r : {1.5, 3.0, 10.0}) {
    auto integrand = [&](double s) {
      return 1.0 / (p.lambda * s * s / 3.0 + 2.0 * p.m / s - 1.0);
    };
    double tail_to = 1e7;
    double num = -integrate_adaptive(integrand, r, tail_to, 1e-12) - 3.0 / (p.lambda * tail_to);
    CHECK(sds_rstar(p, r) == doctest::Approx(num).epsilon(1e-6));
  }

  // round trip over log-spaced radii
  auto h = sds_horizons(p);
  for (int i = 0; i < 100; ++i) {
    double r = (h.rC + 0.1) * std::pow(1e6 / (h.rC + 0.1), i / 99.0);
    double back = sds_r_of_rstar(p, sds_rstar(p, r));
    CHECK(std::abs(back - r) < 1e-10 * r);
  }
  CHECK_THROWS_AS(sds_rstar(p, 0.5), DomainError);
}

TEST_CASE("SdS charts: EF, Kruskal, initial data") {
  SdSParams p{3.0, 0.1};
  auto k = sds_kruskal_constants(p);
  CHECK(k.alphaH + k.alphabarC == doctest::Approx(1.0).epsilon(1e-12));

  // EF at r = 10: Omega^2 = 100 + 0.02 - 1
  double rs10 = sds_rstar(p, 10.0);
  ChartPoint ef{Chart::EF, {0.3 * rs10, 0.7 * rs10, 1.0, 0.0}};
  auto defdata = sds_chart(Chart::EF, p, ef);
  CHECK(defdata.r == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(defdata.Omega2 == doctest::Approx(99.02));
  CHECK(defdata.dr_d0 == doctest::Approx(99.02));

  // Kruskal asymptotics: Omega_K^2 -> (1/4)(Lambda/3) kappaC^{-2} r^2
  {
    double r = 1e4;
    double rs = sds_rstar(p, r);
    double uK = std::exp(2.0 * k.kappaC * 0.25 * rs), vK = std::exp(2.0 * k.kappaC * 0.75 * rs);
    ChartPoint kp{Chart::Kruskal, {uK, vK, 1.2, 0.0}};
    auto dk = sds_chart(Chart::Kruskal, p, kp);
    CHECK(dk.r == doctest::Approx(r).epsilon(1e-10));
    double limit = 0.25 * (p.lambda / 3.0) / (k.kappaC * k.kappaC) * r * r;
    CHECK(std::abs(dk.Omega2 / limit - 1.0) < 10.0 / r);
  }

  // Kruskal and EF metrics agree under uK = exp(2 kappaC u*) pullback
  {
    auto gk = metric_field(Chart::Kruskal, &p);
    auto ge = metric_field(Chart::EF, &p);
    Vec4 x{0.35 * rs10, 0.65 * rs10, 1.1, 0.4};  // EF coordinates
    auto to_kruskal = [&](const Vec4& y) {
      return Vec4{std::exp(2.0 * k.kappaC * y[0]), std::exp(2.0 * k.kappaC * y[1]), y[2], y[3]};
    };
    // pull the Kruskal metric back through the transition map by FD Jacobian
    Mat4 pulled;
    double J[4][4] = {};
    for (int mu = 0; mu < 4; ++mu) {
      double h = fd_step(x[mu], 1e-6);
      Vec4 xp = x, xm = x;
      xp[mu] += h;
      xm[mu] -= h;
      auto yp = to_kruskal(xp), ym = to_kruskal(xm);
      for (int a = 0; a < 4; ++a) J[a][mu] = (yp[a] - ym[a]) / (2.0 * h);
    }
    Mat4 gky = gk(to_kruskal(x));
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        double s = 0.0;
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) s += gky(a, b) * J[a][mu] * J[b][nu];
        pulled(mu, nu) = s;
      }
    CHECK(oracles::metric_distance(pulled, ge(x)) < 1e-8 * std::abs(ge(x)(0, 1)));
  }

  // initial-data gauge, u-patch: Omega_(u)^2 = Omega_K^2 uK
  {
    double us = 0.4, vs = 0.6 * rs10 - 0.4;  // u* > 0, v* < 0 with r > rC
    double ubar = 2.0 * k.kappaC * us;
    double vbar = std::exp(2.0 * k.kappaC * vs) - 1.0;
    ChartPoint ip{Chart::InitialData, {ubar, vbar, 1.0, 0.0}};
    auto di = sds_chart(Chart::InitialData, p, ip);
    double r = sds_r_of_rstar(p, us + vs);
    CHECK(di.r == doctest::Approx(r).epsilon(1e-10));
    ChartPoint kp{Chart::Kruskal,
                  {std::exp(2.0 * k.kappaC * us), std::exp(2.0 * k.kappaC * vs), 1.0, 0.0}};
    auto dk = sds_chart(Chart::Kruskal, p, kp);
    CHECK(di.Omega2 == doctest::Approx(dk.Omega2 * std::exp(2.0 * k.kappaC * us)).epsilon(1e-10));
  }
}
