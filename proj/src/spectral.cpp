#include "nlslab/spectral.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <map>

namespace nlslab {

namespace {

Eigen::FFT<Real>& plan() {
  thread_local Eigen::FFT<Real> fft;
  return fft;
}

}  // namespace

ArrayXc dft(const ArrayXc& f) {
  Eigen::VectorXcd in = f.matrix();
  Eigen::VectorXcd out;
  plan().fwd(out, in);
  return out.array();
}

ArrayXc idft(const ArrayXc& F) {
  Eigen::VectorXcd in = F.matrix();
  Eigen::VectorXcd out;
  plan().inv(out, in);
  return out.array();
}

ArrayXc spectrum(const ComplexField& f) {
  const int n = f.grid.n_points;
  const Real scale = f.grid.spacing() / std::sqrt(2.0 * GridSpec::pi());
  ArrayXc F = dft(f.samples);
  for (int m = 0; m < n; ++m) {
    // node offset -L turns the DFT phase into (-1)^k at frequency index k
    F[m] *= (m % 2 == 0 ? scale : -scale);
  }
  return F;
}

ComplexField apply_multiplier(const ComplexField& f, const std::function<Complex(Real)>& m) {
  if (!f.all_finite()) throw NumericalError("apply_multiplier: non-finite input field");
  const int n = f.grid.n_points;
  ArrayXc table(n);
  for (int j = 0; j < n; ++j) {
    const Complex v = m(f.grid.frequency(j));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NumericalError("apply_multiplier: non-finite multiplier at xi = " +
                           std::to_string(f.grid.frequency(j)));
    table[j] = v;
  }
  return apply_multiplier(f, table);
}

ComplexField apply_multiplier(const ComplexField& f, const ArrayXc& table) {
  ArrayXc F = dft(f.samples);
  F *= table;
  return {f.grid, idft(F)};
}

ComplexField free_propagate(const ComplexField& f, Real t) {
  if (!std::isfinite(t)) throw ConfigError("free_propagate: t must be finite");
  const int n = f.grid.n_points;
  ArrayXc table(n);
  for (int j = 0; j < n; ++j) {
    const Real xi = f.grid.frequency(j);
    table[j] = std::exp(Complex(0.0, -0.5 * t * xi * xi));
  }
  return apply_multiplier(f, table);
}

ComplexField free_flow_remainder(const ComplexField& f, Real t) {
  if (!(t >= 0.0)) throw ConfigError("free_flow_remainder: t must be nonnegative");
  ComplexField g = free_propagate(f, t);
  g.samples -= f.samples;
  return g;
}

Real l2_norm(const ComplexField& f) {
  return std::sqrt(f.grid.spacing() * f.samples.abs2().sum());
}

Real linf_norm(const ComplexField& f) { return f.samples.abs().maxCoeff(); }

Real sobolev_norm(const ComplexField& f, Real s) {
  const int n = f.grid.n_points;
  const ArrayXc F = dft(f.samples);
  Real acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const Real xi = f.grid.frequency(j);
    acc += std::pow(1.0 + xi * xi, s) * std::norm(F[j]);
  }
  return std::sqrt(f.grid.spacing() / n * acc);
}

Complex inner(const ComplexField& f, const ComplexField& g) {
  require_same_grid(f, g);
  return f.grid.spacing() * (f.samples * g.samples.conjugate()).sum();
}

ComplexField derivative(const ComplexField& f) {
  const int n = f.grid.n_points;
  ArrayXc table(n);
  for (int j = 0; j < n; ++j) table[j] = Complex(0.0, f.grid.frequency(j));
  return apply_multiplier(f, table);
}

}  // namespace nlslab
