#include "nlslab/conformal.hpp"

#include <cmath>

namespace nlslab {

UGapNorms u_gap_norms(const ComplexField& v, const ComplexField& v_profile, Real t_u) {
  require_same_grid(v, v_profile);
  if (!(t_u >= 1.0)) throw ConfigError("u_gap_norms requires t_u >= 1");
  const ComplexField diff = v - v_profile;
  UGapNorms out{};
  out.weighted_gap = l2_norm(derivative(diff));
  out.l2_gap = l2_norm(diff);
  out.linf_u = linf_norm(v) / std::sqrt(t_u);
  out.bracket_gap = std::sqrt(out.l2_gap * out.l2_gap + out.weighted_gap * out.weighted_gap);
  return out;
}

Real dollard_residual(Real t, Real amplitude) {
  if (!(t > 0.0)) throw ConfigError("dollard_residual requires t > 0");
  // f = A e^{-x^2/2}; left side is the closed-form free Gaussian, right side
  // the multiply-dilate-Fourier-multiply chain with the exact transform of a
  // complex Gaussian.
  const Complex c = Complex(1.0, 0.0) - Complex(0.0, 1.0) / t;
  const Complex lhs_pref = amplitude / std::sqrt(Complex(1.0, t));
  const Complex rhs_pref = amplitude / (std::sqrt(Complex(0.0, t)) * std::sqrt(c));
  Real worst = 0.0;
  const int npts = 401;
  for (int i = 0; i < npts; ++i) {
    const Real x = -10.0 + 20.0 * i / (npts - 1);
    const Complex lhs = lhs_pref * std::exp(-x * x / (2.0 * Complex(1.0, t)));
    const Complex rhs = rhs_pref * std::exp(Complex(0.0, x * x / (2.0 * t))) *
                        std::exp(-x * x / (2.0 * t * t * c));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace nlslab
