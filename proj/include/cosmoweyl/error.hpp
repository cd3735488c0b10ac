// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace cosmoweyl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error {
  using Error::Error;
};
struct NoHorizonError : Error {
  using Error::Error;
};
struct ConvergenceError : Error {
  using Error::Error;
};
struct HorizonProximityError : Error {
  using Error::Error;
};
struct PositivityError : Error {
  using Error::Error;
};
struct SymmetryError : Error {
  using Error::Error;
};
struct FrameError : Error {
  using Error::Error;
};
struct MissingDerivativeError : Error {
  using Error::Error;
};
struct DegenerateMetricError : Error {
  using Error::Error;
};
struct ExpansionSignError : Error {
  using Error::Error;
};
struct HypothesisError : Error {
  using Error::Error;
};
struct DivergentWeightError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace cosmoweyl
