#pragma once

#include "nlslab/types.hpp"

#include <cmath>
#include <vector>

namespace nlslab {

/// Geometric mesh on (t_min, T]: nodes t_k = t_min (T/t_min)^(k/K),
/// clustering at the small-time singularity.
struct TimeMesh {
  Real t_min;
  Real T;
  int K;

  TimeMesh(Real tmin, Real Tend, int nodes) : t_min(tmin), T(Tend), K(nodes) {
    if (!(tmin > 0.0) || !(Tend > tmin))
      throw ConfigError("mesh requires 0 < tmin < T");
    if (!(Tend <= 1.0)) throw ConfigError("mesh.T must be <= 1");
    if (K < 1) throw ConfigError("mesh.K must be >= 1");
  }

  Real node(int k) const {
    if (k <= 0) return t_min;
    if (k >= K) return T;
    return t_min * std::pow(T / t_min, static_cast<Real>(k) / K);
  }

  std::vector<Real> nodes() const {
    std::vector<Real> out(K + 1);
    for (int k = 0; k <= K; ++k) out[k] = node(k);
    return out;
  }

  TimeMesh refined(int factor = 2) const { return {t_min, T, K * factor}; }

  bool contains(Real t) const { return t >= t_min * (1 - 1e-12) && t <= T * (1 + 1e-12); }
};

}  // namespace nlslab
