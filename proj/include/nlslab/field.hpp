#pragma once

#include "nlslab/grid.hpp"
#include "nlslab/types.hpp"

#include <utility>

namespace nlslab {

/// A complex grid function: one sample per node of its GridSpec.
struct ComplexField {
  GridSpec grid;
  ArrayXc samples;

  ComplexField(GridSpec g, ArrayXc s) : grid(g), samples(std::move(s)) {
    if (samples.size() != grid.n_points)
      throw ConfigError("field sample count does not match grid");
  }

  static ComplexField zeros(const GridSpec& g) {
    return ComplexField(g, ArrayXc::Zero(g.n_points));
  }

  bool all_finite() const {
    return samples.real().isFinite().all() && samples.imag().isFinite().all();
  }
};

inline void require_same_grid(const ComplexField& a, const ComplexField& b) {
  if (a.grid != b.grid) throw ConfigError("fields live on different grids");
}

inline ComplexField operator+(const ComplexField& a, const ComplexField& b) {
  require_same_grid(a, b);
  return {a.grid, a.samples + b.samples};
}

inline ComplexField operator-(const ComplexField& a, const ComplexField& b) {
  require_same_grid(a, b);
  return {a.grid, a.samples - b.samples};
}

inline ComplexField operator*(Complex c, const ComplexField& f) {
  return {f.grid, c * f.samples};
}

inline ComplexField operator*(Real c, const ComplexField& f) {
  return {f.grid, c * f.samples};
}

}  // namespace nlslab
