#pragma once

#include "nlslab/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nlslab {

/// Model couplings and exponents. sigma is the short-range power (the cubic
/// power 1 is fixed); alpha/beta are the construction exponents; the audit
/// parameters feed the error-envelope fits.
struct ModelParams {
  Real lambda1 = 1.0;
  Real lambda2 = 0.0;
  Real sigma = 1.5;
  Real alpha = 0.75;
  Real beta = 0.2;
  Real epsilon_reg = 1.0;   // regularity surplus of the datum
  Real delta_audit = 1.0;   // in (1/2, 1]
  Real nu_audit = 0.05;     // > 0
  Real gamma_rate = 0.1;    // > 0

  bool defocusing() const { return lambda1 > 0.0; }
};

/// 2 |lambda1| ||phi||_inf^2, the focusing threshold scale.
inline Real lambda_cap(const ModelParams& p, Real phi_linf) {
  return 2.0 * std::abs(p.lambda1) * phi_linf * phi_linf;
}

/// Admissible alpha window (lo, hi) for the focusing preset.
inline std::pair<Real, Real> focusing_alpha_window(const ModelParams& p, Real phi_linf) {
  return {std::max(1.0, lambda_cap(p, phi_linf)), 2.0};
}

/// Validates the parameter windows for the preset selected by sign(lambda1).
/// Throws ConfigError naming the admissible interval on violation.
inline void validate_params(const ModelParams& p, Real phi_linf) {
  if (!(p.sigma > 1.0 && p.sigma < 2.0))
    throw ConfigError("model.sigma must lie in (1, 2), got " + std::to_string(p.sigma));
  if (!(p.epsilon_reg > 0.0)) throw ConfigError("epsilon_reg must be positive");
  if (!(p.delta_audit > 0.5 && p.delta_audit <= 1.0))
    throw ConfigError("delta_audit must lie in (1/2, 1]");
  if (!(p.nu_audit > 0.0)) throw ConfigError("nu_audit must be positive");
  if (p.lambda1 == 0.0)
    throw ConfigError("model.lambda1 must be nonzero (sign selects the preset)");

  if (p.defocusing()) {
    if (!(p.alpha >= 2.0 / 3.0 && p.alpha < 1.0))
      throw ConfigError("defocusing preset: model.alpha must lie in [2/3, 1), got " +
                        std::to_string(p.alpha));
    const Real bmax = std::min(p.epsilon_reg / 2.0, 0.5);
    if (!(p.beta > 0.0 && p.beta < bmax))
      throw ConfigError("defocusing preset: model.beta must lie in (0, " +
                        std::to_string(bmax) + "), got " + std::to_string(p.beta));
  } else {
    const Real cap = lambda_cap(p, phi_linf);
    if (!(cap < 2.0))
      throw ConfigError("focusing preset requires |lambda1|*||phi||_inf^2 < 1; got " +
                        std::to_string(cap / 2.0) + " (no admissible alpha)");
    const auto [lo, hi] = focusing_alpha_window(p, phi_linf);
    if (!(p.alpha > lo && p.alpha < hi))
      throw ConfigError("focusing preset: model.alpha must lie in (" + std::to_string(lo) +
                        ", " + std::to_string(hi) + "), got " + std::to_string(p.alpha));
    const Real bmax = std::min(p.epsilon_reg / 2.0, 1.0 - p.alpha / 2.0);
    if (!(p.beta > 0.0 && p.beta < bmax))
      throw ConfigError("focusing preset: model.beta must lie in (0, " +
                        std::to_string(bmax) + "), got " + std::to_string(p.beta));
  }
}

}  // namespace nlslab
