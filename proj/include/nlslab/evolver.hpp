#pragma once

#include "nlslab/fixedpoint.hpp"

namespace nlslab {

/// Strang split-step integration of the transformed equation on geometric
/// substeps (forward only, 0 < t0 < t1 <= 1). The nonlinear substep is the
/// exact pointwise phase rotation; discrete mass is conserved to rounding.
ComplexField evolve_transformed(const ComplexField& v0, Real t0, Real t1, int steps,
                                const ScatteringDatum& d, const ModelParams& p);

/// Strang split-step integration of the physical equation on uniform steps,
/// either time direction.
ComplexField evolve_physical(const ComplexField& u0, Real t0, Real t1, int steps,
                             const ModelParams& p);

struct CrossValidation {
  Real rel_mismatch;  // relative L2 mismatch at T against the trajectory value
  Real mass_drift;    // |  ||v(T)|| - ||v(t_min)||  | from the evolver
};

/// Independent check of a converged trajectory: evolve v_p(t_min)+v_*(t_min)
/// to T with the split-step integrator and compare against v_p(T)+v_*(T).
CrossValidation cross_validate(const Trajectory& vstar, const ScatteringDatum& d,
                               const ModelParams& p, int steps_per_slab = 8);

}  // namespace nlslab
