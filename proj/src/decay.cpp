// SPDX-License-Identifier: Apache-2.0
#include "cosmoweyl/decay.hpp"

#include <cmath>

#include "cosmoweyl/numerics.hpp"

namespace cosmoweyl::decay {

namespace {

// Improper integral over (r0, inf) with divergence detection by a tail-power
// fit: the integral over successive octaves must decay geometrically.
double tail_integral(const std::function<double(double)>& f, double r0, const char* what) {
  double total = 0.0;
  double a = r0;
  double prev = -1.0;
  for (int k = 0; k < 60; ++k) {
    double b = 2.0 * a;
    double piece = integrate_adaptive(f, a, b, 1e-12);
    total += piece;
    if (k > 4) {
      if (std::abs(piece) < 1e-14 * std::max(1.0, std::abs(total))) return total;
      if (prev > 0.0 && std::abs(piece) > 0.9 * prev)
        throw DivergentWeightError(std::string(what) + " integral diverges (flat tail)");
    }
    prev = std::abs(piece);
    a = b;
  }
  throw DivergentWeightError(std::string(what) + " integral did not converge in 60 octaves");
}

}  // namespace

double DecayBound::bound(double r) const { return C_integral * std::pow(r, -kappa1); }
double DecayBound::ode_bound(double r) const { return C_ode * std::pow(r, -kappa1); }

DecayBound gronwall_bound(const DecayProblem& p) {
  if (!(p.kappa0 > 0.0) || !(p.kappa1 >= p.kappa0))
    throw DomainError("need 0 < kappa0 <= kappa1");
  if (p.f0 < 0.0) throw DomainError("f0 must be nonnegative");
  DecayBound b;
  b.kappa1 = p.kappa1;
  b.r0 = p.r0;
  b.K1 = tail_integral([&](double r) { return (p.kappa1 - p.kappa(r)) / r; }, p.r0, "K");
  if (b.K1 < -1e-12) throw DomainError("kappa exceeds kappa1");
  b.H1 = p.h ? tail_integral([&](double r) { return std::abs(p.h(r)) * std::pow(r, p.kappa1 - 1.0); },
                             p.r0, "H")
             : 0.0;
  double core = std::pow(p.r0, p.kappa1) * p.f0 + p.C * b.H1;
  b.C_ode = std::exp(b.K1) * core;
  b.C_integral =
      (p.kappa1 / p.kappa0) * std::exp(b.K1) * core / (1.0 - std::pow(2.0, -p.kappa1));
  return b;
}

DecayVerdict verify_decay(const std::vector<std::pair<double, double>>& samples, double kappa1) {
  DecayVerdict v;
  if (samples.empty()) return v;
  double first_positive = 0.0;
  double max_growth = 1.0;
  double running_min = 0.0;
  bool have_min = false;
  for (const auto& [r, f] : samples) {
    double c = std::pow(r, kappa1) * f;
    v.supC = std::max(v.supC, c);
    if (!have_min) {
      if (c > 0.0) {
        running_min = c;
        first_positive = c;
        have_min = true;
      }
      continue;
    }
    running_min = std::min(running_min, c);
    if (running_min > 0.0) max_growth = std::max(max_growth, c / running_min);
  }
  (void)first_positive;
  v.holds = std::isfinite(v.supC) && have_min && max_growth <= 1.5;
  return v;
}

std::vector<std::pair<double, double>> solve_equality_ode(const DecayProblem& p, double r_end,
                                                          int steps) {
  std::vector<std::pair<double, double>> out;
  out.reserve(steps + 1);
  // log-spaced RK4 in s = log r
  double s0 = std::log(p.r0), s1 = std::log(r_end);
  double ds = (s1 - s0) / steps;
  auto rhs = [&](double s, double f) {
    double r = std::exp(s);
    return -p.kappa(r) * f + (p.h ? p.C * p.h(r) : 0.0);
  };
  double f = p.f0;
  out.emplace_back(p.r0, f);
  for (int i = 0; i < steps; ++i) {
    double s = s0 + i * ds;
    double k1 = rhs(s, f);
    double k2 = rhs(s + 0.5 * ds, f + 0.5 * ds * k1);
    double k3 = rhs(s + 0.5 * ds, f + 0.5 * ds * k2);
    double k4 = rhs(s + ds, f + ds * k3);
    f += ds / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    out.emplace_back(std::exp(s + ds), f);
  }
  return out;
}

}  // namespace cosmoweyl::decay
