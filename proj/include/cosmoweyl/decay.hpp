// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "cosmoweyl/error.hpp"

namespace cosmoweyl::decay {

// Integral inequality for a positive function f (the Gronwall engine):
//   f(r2) + int_{r1}^{r2} [kappa(r)/r f(r) - C/r h(r)] dr <= f(r1),
//   kappa0 <= kappa(r) <= kappa1.
struct DecayProblem {
  std::function<double(double)> kappa;
  double kappa0 = 0.0;
  double kappa1 = 0.0;
  std::function<double(double)> h;  // forcing; may be null for h = 0
  double f0 = 0.0;                  // initial value at r0
  double r0 = 1.0;
  double C = 1.0;                   // coupling constant
};

struct DecayBound {
  double K1 = 0.0;  // int_{r0}^inf (kappa1 - kappa)/r dr
  double H1 = 0.0;  // int_{r0}^inf |h| r^{kappa1 - 1} dr
  // Sharp constant for the equality-ODE family: e^{K1} (r0^k1 f0 + C H1).
  double C_ode = 0.0;
  // Constant of the integral-inequality derivation, valid for r >= 2 r0:
  // (kappa1/kappa0) e^{K1} (r0^k1 f0 + C H1) / (1 - 2^{-kappa1}).
  double C_integral = 0.0;

  double kappa1 = 0.0;
  double r0 = 1.0;
  double bound(double r) const;      // C_integral r^{-kappa1}, r >= 2 r0
  double ode_bound(double r) const;  // C_ode r^{-kappa1}
};

// Throws DivergentWeightError when K or H fails to converge.
DecayBound gronwall_bound(const DecayProblem& p);

// Empirical check of a decay rate on a sampled sequence: supC = max r^k1 f(r);
// holds when the growth of r^k1 f over the sampled range stays below a factor
// of 1.5 (so an r^{-k1} tail cannot be ruled out).
struct DecayVerdict {
  double supC = 0.0;
  bool holds = false;
};

DecayVerdict verify_decay(const std::vector<std::pair<double, double>>& samples, double kappa1);

// RK4 solution of the equality ODE f' = -kappa f/r + C h/r (test families).
std::vector<std::pair<double, double>> solve_equality_ode(const DecayProblem& p, double r_end,
                                                          int steps = 20000);

}  // namespace cosmoweyl::decay
