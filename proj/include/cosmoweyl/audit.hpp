// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "cosmoweyl/analysis.hpp"
#include "cosmoweyl/nullframe.hpp"

namespace cosmoweyl::audit {

// One audited assumption: the measured constant against its threshold.
struct AuditEntry {
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  bool holds = false;
};

struct AuditReport {
  std::string foliation;
  int ntheta = 0, nphi = 0;
  std::vector<AuditEntry> entries;
  bool verdict = false;  // all entries hold

  const AuditEntry* find(const std::string& name) const;
  std::string to_json() const;  // deterministic formatting
};

// Coefficient fields on a sphere of the foliation; suprema are taken over the
// grid. The q-derivative entries are skipped when with_q is false.
struct CoefficientFields {
  analysis::ScalarField Omega;
  analysis::ScalarField trchi;
  analysis::ScalarField trchib;
  analysis::ScalarField omegahat;
  analysis::ScalarField omegabhat;
  analysis::ScalarField chihat_norm;   // |chihat|
  analysis::ScalarField chibhat_norm;  // |chibhat|
  analysis::ScalarField zeta_norm;     // |zeta|
  analysis::Metric2Field gslash;
  // optional q data
  bool with_q = false;
  analysis::ScalarField q;
  analysis::ScalarField Dlogq;      // |D log q|
  analysis::ScalarField Dbarlogq;   // |Dbar log q|
  analysis::ScalarField dlogq_norm; // |dslash log q|
  analysis::ScalarField eta_norm;
  analysis::ScalarField etab_norm;
};

// Measures the (BA:I), (BA:III.i) quantities on the given sphere.
AuditReport audit_foliation(const CoefficientFields& f, const analysis::SphereGrid& grid,
                            double eps0, double C0, const std::string& foliation_name);

// Spherically symmetric foliations: fields built from closed-form coefficients.
CoefficientFields fields_from_chart(charts::Chart chart, const charts::SdSParams* params,
                                    const charts::ChartPoint& point);

// The ellipsoidal section S_{0,eps} in the small-angle closed forms:
// Omega ~ r(theta), trchi ~ 2, trchib ~ 2 + 4 phi cos(theta)/r, omegahats ~ 1.
CoefficientFields fields_from_ellipsoid(const charts::EllipsoidSection& sec);

// Propagation of the redshift bound under a foliation change (final lemma of
// the gauge-transformation fragment): both sides of the bound for
// |2 omegahat~ - trchi~|, with the seven correction terms, and the conjugate.
struct PropagationCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double lhs_conj = 0.0;
  double rhs_conj = 0.0;
  bool holds = false;
};

PropagationCheck audit_gauge_propagation(const nullframe::FoliationChange& fc,
                                         const nullframe::StructureCoefficients& s, double eps);

}  // namespace cosmoweyl::audit
