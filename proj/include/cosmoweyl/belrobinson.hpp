// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <functional>

#include "cosmoweyl/nullframe.hpp"
#include "cosmoweyl/weyl.hpp"

namespace cosmoweyl::belrobinson {

using nullframe::StructureCoefficients;
using weyl::Weyl4;
using weyl::WeylNull;

// Bel-Robinson tensor Q(W)_abcd = W_arcs W_b^r_d^s + *W_arcs *W_b^r_d^s in
// frame components.
Weyl4 bel_robinson(const Weyl4& w);

double q_contract(const Weyl4& q, const Vec4& t1, const Vec4& t2, const Vec4& t3, const Vec4& t4);

// The five null contractions:
//   (Q_3333, Q_4333, Q_3344, Q_4443, Q_4444)
// = (2|abar|^2, 4|bbar|^2, 4(rho^2+sigma^2), 4|b|^2, 2|a|^2).
std::array<double, 5> q_null_components(const WeylNull& w);

// Lowered null components of a trace-free deformation tensor in the frame
// (e3, e4, eA) (boosted when the vectorfield is M_a or N).
struct DeformationNull {
  double nbar = 0.0;  // pi_33
  double nn = 0.0;    // pi_44
  double j = 0.0;     // pi_34
  Vec2 mbar{};        // pi_3A
  Vec2 mm{};          // pi_4A
  Mat2 ii;            // pi_AB

  // total trace with g34 = -2: -pi_34 + tr ii
  double trace() const { return -j + ii.trace(); }
};

// Derivative data of the boost/weight field for M_a and N(q): Lhat/Lbhat
// derivatives of a and a^{-1}, and the angular log-gradient.
struct WeightDerivs {
  double a = 1.0;
  double Lbhat_a = 0.0;     // Lbhat(a)
  double Lhat_ainv = 0.0;   // Lhat(a^{-1})
  Vec2 dlog_a{};
};

enum class Multiplier { M, Ma, N };

DeformationNull deformation(Multiplier vf, const StructureCoefficients& s,
                            const WeightDerivs& w = {});

// Oracle: pi = Lie_X g by finite differences, trace-removed and decomposed in
// the supplied frame.
using VectorField = std::function<Vec4(const Vec4&)>;

DeformationNull lie_derivative_fd(const charts::MetricField& gf, const VectorField& X,
                                  const Vec4& x, const weyl::Frame& frame,
                                  double h_scale = 1e-6);

// Flux densities of the current P^{M_q} (Lemma flux:M / eq. flux:Ma):
//   Sigma_r: (2 Omega)^{-3}[q^4|abar|^2 + 8q^2|bbar|^2 + 12(rho^2+sigma^2)
//                           + 8q^{-2}|b|^2 + q^{-4}|a|^2]
//   C_u:     (1/4) Omega^{-2}[2|bbar|^2 + 6 rho^2 + 6 sigma^2 + 6|b|^2 + |a|^2]
struct FluxDensity {
  double value = 0.0;
  std::array<double, 5> breakdown{};  // abar, bbar, rho-sigma, b, a terms
};

FluxDensity flux_sigma_density(const WeylNull& w, double q, double Omega);
double flux_null_density(const WeylNull& w, double Omega);

// Direct contraction routes for the flux densities.
double flux_sigma_density_contraction(const WeylNull& w, double q, double Omega);
double flux_null_density_contraction(const WeylNull& w, double Omega);

// Divergence decomposition K^{M_a} = K_+ + K_-; evaluated from the boosted
// null components with the effective coefficient substitutions.
struct KDecomp {
  double kplus = 0.0;
  double kminus = 0.0;
};

KDecomp k_decompose(const WeylNull& w, const StructureCoefficients& s, const WeightDerivs& a);

// Oracle: K^{(Ma,Ma,Ma)} = (3/2) Q_abcd pi^{ab} Ma^c Ma^d by contraction.
double k_contraction(const WeylNull& w, const StructureCoefficients& s, const WeightDerivs& a);

// Pointwise redshift inequality (Lemma K:plus:q):
//   phi K_+^q >= (6/r)(1-eps0)^2 * flux density.
struct RedshiftCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

RedshiftCheck redshift_pointwise(const WeylNull& w, const StructureCoefficients& s, double q,
                                 double r, double eps0);

// Commutation relations of N with the frame; each bracket returned in frame
// components (e1,e2,e3,e4).
struct FrameBrackets {
  Vec4 with_e3{};
  Vec4 with_e4{};
  Vec4 with_eA[2];  // the Pi[e3+e4, eA] part is geometric and is returned
                    // separately by callers that need it
};

FrameBrackets commutator_frame(const StructureCoefficients& s, const WeightDerivs& q);

// Modified Lie derivative of a Weyl field along N = (Omega/2)(q Lbhat + q^{-1} Lhat),
// definitional route: LieHat_N W = Lie_N W - (1/8) tr pi W - (1/2) pi^hat . W.
// The Lie derivative is taken by finite differences of the coordinate field.
using WeylField = std::function<Tensor4(const Vec4&)>;

Tensor4 modified_lie_weyl_fd(const charts::MetricField& gf, const WeylField& wf,
                             const VectorField& N, const Vec4& x, double h_scale = 1e-5);

}  // namespace cosmoweyl::belrobinson
