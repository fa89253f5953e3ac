#pragma once

#include "nlslab/mesh.hpp"
#include "nlslab/profiles.hpp"
#include "nlslab/spectral.hpp"

#include <vector>

namespace nlslab {

/// First component of the conjugate pair (psi, conj psi); the second
/// component is implicit, so the pair structure holds exactly by
/// construction.
struct PairField {
  ComplexField psi;
};

/// Terms of the modified energy at one time. q_alpha = kinetic + mass_w + d1;
/// q_tilde adds the short-range term d2.
struct EnergyBreakdown {
  Real kinetic;  // ||dx psi||^2 / 4
  Real mass_w;   // t^-alpha ||psi||^2
  Real d1;       // cubic coupling term
  Real d2;       // short-range coupling term

  Real q_alpha() const { return kinetic + mass_w + d1; }
  Real q_tilde() const { return q_alpha() + d2; }
};

/// Scalar-form action of the linearized potential on psi (first row of the
/// pair system under the conjugate structure).
ComplexField potential_apply(const PairField& psi, const ScatteringDatum& d,
                             const ModelParams& p, Real t);

/// Propagator of the linearized system from s to t (forward only), by Strang
/// splitting: exact kinetic multiplier steps and exact frozen-coefficient
/// potential half-steps. Substeps are geometric, `substeps` per mesh slab.
PairField propagate(const PairField& psi0, const ScatteringDatum& d, const ModelParams& p,
                    Real s, Real t, const TimeMesh& mesh, int substeps);

EnergyBreakdown modified_energy(const PairField& psi, const ScatteringDatum& d,
                                const ModelParams& p, Real t);

/// Right side of the modified energy identity (four terms).
Real energy_identity_rhs(const PairField& psi, const ScatteringDatum& d, const ModelParams& p,
                         Real t);

// Context-level kernels used by the drivers (identical math, no re-setup).
ArrayXc propagate_samples(const ProfileContext& ctx, ArrayXc psi, Real s, Real t,
                          const std::vector<Real>& interior_breaks, int substeps);
EnergyBreakdown modified_energy_samples(const ProfileContext& ctx, const ArrayXc& psi, Real t);
Real energy_identity_rhs_samples(const ProfileContext& ctx, const ArrayXc& psi, Real t);

struct EnergyRatioReport {
  Real lambda_cap = 0.0;                // 2 |lambda1| ||phi||_inf^2
  std::vector<Real> sup_ratio_levels;   // sup Q(t)/Q(s) per refinement level
  std::vector<Real> per_sample_sup;     // per audit state at the base level
  bool d2_within_half = true;           // |d2| <= q_alpha / 2 at every node
  bool q_nonnegative = true;            // defocusing positivity

  Real max_rel_step() const;
  Real sup_ratio() const { return sup_ratio_levels.empty() ? 0.0 : sup_ratio_levels.front(); }
};

/// Propagates a family of H1 states across the mesh and records the worst
/// energy growth ratio sup Q(t)/Q(s) over s <= t, repeating on refined
/// meshes. Rejects focusing parameters outside the admissible alpha window.
EnergyRatioReport energy_ratio_audit(const ScatteringDatum& d, const ModelParams& p,
                                     const TimeMesh& mesh, int samples, Rng& rng,
                                     int levels = 3, int base_substeps = 2);

}  // namespace nlslab
