#pragma once

#include "nlslab/datum.hpp"
#include "nlslab/params.hpp"

namespace nlslab {

/// Pointwise data shared by the profile/propagator/energy kernels for one
/// (datum, params) pair. Immutable after construction; safe to share across
/// threads.
struct ProfileContext {
  GridSpec grid;
  ModelParams params;
  ArrayXc phi;            // datum samples
  ArrayXc conj_phi;
  ArrayXc dphi;           // phi'
  ArrayXr abs_phi;        // |phi|
  ArrayXr abs2;           // |phi|^2
  ArrayXr abs_2sigma;     // |phi|^(2 sigma)
  ArrayXr abs_2sigma_m2;  // |phi|^(2 sigma - 2)
  ArrayXr abs_sigma_m1;   // |phi|^(sigma - 1)
  ArrayXr re_phi_dphi;    // Re[phi conj(phi')]
  Real phi_linf;

  ProfileContext(const ScatteringDatum& datum, const ModelParams& p);

  /// Phase of the conformal-picture profile at time t (pointwise).
  ArrayXr phase(Real t) const;

  /// Samples of the conformal-picture profile v_p(t).
  ArrayXc profile_v_samples(Real t) const;

  /// First-row potential coefficients at time t: the action on psi is
  /// c1 * psi + c2 * conj(psi) with c1 real.
  void potential_coefficients(Real t, ArrayXr& c1, ArrayXc& c2) const;
};

/// Conformal-picture profile: unimodular phase times conj(phi); |v_p| = |phi|.
ComplexField profile_v(const ScatteringDatum& d, const ModelParams& p, Real t);

/// Large-time profile with the logarithmic phase only.
ComplexField profile_w(const ScatteringDatum& d, const ModelParams& p, Real t);

/// Large-time profile carrying the additional short-range phase.
ComplexField profile_w_tilde(const ScatteringDatum& d, const ModelParams& p, Real t);

struct ProfileGap {
  Real l2_gap;
  Real h1dot_gap;
};

/// L2 and homogeneous-H1 gaps between the two large-time profiles at t >= 1.
ProfileGap profile_gap(const ScatteringDatum& d, const ModelParams& p, Real t);

}  // namespace nlslab
