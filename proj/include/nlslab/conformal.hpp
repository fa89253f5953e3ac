#pragma once

#include "nlslab/spectral.hpp"

namespace nlslab {

/// Reciprocal time pair linking the physical picture (t_u >= 1) to the
/// transformed picture (t_v = 1/t_u). t_v is always derived, never stored
/// independently.
struct NormBridge {
  Real t_u;

  explicit NormBridge(Real tu) : t_u(tu) {
    if (!(tu >= 1.0)) throw ConfigError("NormBridge requires t_u >= 1");
  }
  Real t_v() const { return 1.0 / t_u; }
};

/// Gap norms of the physical solution against its profile, computed on the
/// transformed side where they are exact identities: the L2 gap transfers
/// unchanged, the x-weighted gap equals the transformed-side gradient gap,
/// and ||u||_inf = t_u^{-1/2} ||v||_inf.
struct UGapNorms {
  Real weighted_gap;  // ||dx (v - v_p)||
  Real l2_gap;        // ||v - v_p||
  Real linf_u;        // t_u^{-1/2} max |v|
  Real bracket_gap;   // sqrt(l2^2 + weighted^2): the <x>-weighted combination
};

UGapNorms u_gap_norms(const ComplexField& v, const ComplexField& v_profile, Real t_u);

/// Max pointwise mismatch between the free flow of a Gaussian and its
/// multiply-dilate-transform-multiply factorization, both in closed form.
Real dollard_residual(Real t, Real amplitude = 1.0);

}  // namespace nlslab
