#pragma once

#include "nlslab/field.hpp"

#include <functional>

namespace nlslab {

// Discrete transforms, unnormalized forward / 1/n inverse (FFT storage order).
// Plans are cached per thread, so concurrent use from distinct threads is safe.
ArrayXc dft(const ArrayXc& f);
ArrayXc idft(const ArrayXc& F);

/// Physically scaled spectrum: coefficient of the continuum transform
/// (2*pi)^{-1/2} * integral e^{-i x xi} f dx at the grid frequencies,
/// FFT storage order. Discrete Plancherel: sum |spectrum|^2 * (pi/L) equals
/// the squared discrete L2 norm exactly.
ArrayXc spectrum(const ComplexField& f);

/// Pointwise Fourier multiplier. Rejects non-finite fields and multiplier
/// values at grid frequencies.
ComplexField apply_multiplier(const ComplexField& f, const std::function<Complex(Real)>& m);

/// Multiplier applied from a precomputed FFT-order table (hot paths).
ComplexField apply_multiplier(const ComplexField& f, const ArrayXc& table);

/// e^{-i t H0} with H0 = -(1/2) d^2/dx^2: multiplier e^{-i t xi^2 / 2}.
ComplexField free_propagate(const ComplexField& f, Real t);

/// R(t) f = e^{-i t H0} f - f, for t >= 0.
ComplexField free_flow_remainder(const ComplexField& f, Real t);

Real l2_norm(const ComplexField& f);
Real linf_norm(const ComplexField& f);
Real sobolev_norm(const ComplexField& f, Real s);

/// <f, g> = integral f conj(g) dx by grid quadrature.
Complex inner(const ComplexField& f, const ComplexField& g);

/// Spectral derivative (multiplier i*xi).
ComplexField derivative(const ComplexField& f);

inline Real h1_norm(const ComplexField& f) { return sobolev_norm(f, 1.0); }

}  // namespace nlslab
