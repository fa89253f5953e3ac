#pragma once

#include "nlslab/types.hpp"

#include <cmath>

namespace nlslab {

/// Periodic truncation of the line to [-L, L) with n equispaced nodes.
/// Dual frequencies are the integer multiples of pi/L, symmetric about 0
/// (Nyquist mode sits at -n/2 * pi/L).
struct GridSpec {
  int n_points;
  Real half_width;

  GridSpec(int n, Real L) : n_points(n), half_width(L) {
    if (n <= 0 || (n & (n - 1)) != 0)
      throw ConfigError("grid.n must be a positive power of two, got " + std::to_string(n));
    if (!(L > 0.0) || !std::isfinite(L))
      throw ConfigError("grid.L must be positive and finite");
  }

  Real spacing() const { return 2.0 * half_width / n_points; }

  Real node(int j) const { return -half_width + j * spacing(); }

  /// Frequency of DFT bin m (FFT storage order).
  Real frequency(int m) const {
    const int k = (m < n_points / 2) ? m : m - n_points;
    return k * pi() / half_width;
  }

  ArrayXr nodes() const {
    ArrayXr x(n_points);
    for (int j = 0; j < n_points; ++j) x[j] = node(j);
    return x;
  }

  ArrayXr frequencies() const {
    ArrayXr xi(n_points);
    for (int m = 0; m < n_points; ++m) xi[m] = frequency(m);
    return xi;
  }

  bool operator==(const GridSpec& o) const {
    return n_points == o.n_points && half_width == o.half_width;
  }
  bool operator!=(const GridSpec& o) const { return !(*this == o); }

  static constexpr Real pi() { return 3.141592653589793238462643383279502884; }
};

}  // namespace nlslab
