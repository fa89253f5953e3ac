#include "nlslab/evolver.hpp"

#include "nlslab/profiles.hpp"

#include <cmath>

namespace nlslab {

namespace {

ArrayXc kinetic_half_table(const GridSpec& g, Real d) {
  ArrayXc table(g.n_points);
  for (int j = 0; j < g.n_points; ++j) {
    const Real xi = g.frequency(j);
    table[j] = std::exp(Complex(0.0, -0.25 * d * xi * xi));
  }
  return table;
}

void check_finite(const ArrayXc& v, Real t, const char* who) {
  if (!v.real().isFinite().all() || !v.imag().isFinite().all())
    throw NumericalError(std::string(who) + ": non-finite state at t = " + std::to_string(t));
}

}  // namespace

ComplexField evolve_transformed(const ComplexField& v0, Real t0, Real t1, int steps,
                                const ScatteringDatum& d, const ModelParams& p) {
  if (!(t0 > 0.0) || !(t1 > t0)) throw ConfigError("evolve_transformed requires 0 < t0 < t1");
  if (!(t1 <= 1.0)) throw ConfigError("evolve_transformed: t1 must be <= 1");
  if (steps < 1) throw ConfigError("evolve_transformed: steps must be >= 1");

  ProfileContext ctx(d, p);
  const GridSpec g = v0.grid;
  const Real ratio = std::pow(t1 / t0, 1.0 / steps);
  ArrayXc v = v0.samples;
  Real ta = t0;
  for (int i = 0; i < steps; ++i) {
    const Real tb = (i + 1 == steps) ? t1 : ta * ratio;
    const Real dt = tb - ta;
    if (!(dt > 1e-15 * ta))
      throw NumericalError("evolve_transformed: step underflow at t = " + std::to_string(ta));
    const Real tm = 0.5 * (ta + tb);
    const ArrayXc half = kinetic_half_table(g, dt);

    v = idft(dft(v) * half);
    // potential-only flow leaves |v| invariant, so the rotation is exact
    ArrayXr coef = (p.lambda1 / tm) * v.abs2();
    if (p.lambda2 != 0.0) {
      const Real w = p.lambda2 * std::pow(tm, p.sigma - 2.0);
      coef += w * v.abs2().pow(p.sigma);
    }
    for (int j = 0; j < g.n_points; ++j) v[j] *= std::polar(1.0, -dt * coef[j]);
    v = idft(dft(v) * half);
    check_finite(v, tb, "evolve_transformed");
    ta = tb;
  }
  return {g, std::move(v)};
}

ComplexField evolve_physical(const ComplexField& u0, Real t0, Real t1, int steps,
                             const ModelParams& p) {
  if (steps < 1) throw ConfigError("evolve_physical: steps must be >= 1");
  if (t0 == t1) return u0;
  const GridSpec g = u0.grid;
  const Real dt = (t1 - t0) / steps;
  const ArrayXc half = kinetic_half_table(g, dt);
  ArrayXc u = u0.samples;
  for (int i = 0; i < steps; ++i) {
    u = idft(dft(u) * half);
    ArrayXr coef = p.lambda1 * u.abs2();
    if (p.lambda2 != 0.0) coef += p.lambda2 * u.abs2().pow(p.sigma);
    for (int j = 0; j < g.n_points; ++j) u[j] *= std::polar(1.0, -dt * coef[j]);
    u = idft(dft(u) * half);
    check_finite(u, t0 + (i + 1) * dt, "evolve_physical");
  }
  return {g, std::move(u)};
}

CrossValidation cross_validate(const Trajectory& vstar, const ScatteringDatum& d,
                               const ModelParams& p, int steps_per_slab) {
  const TimeMesh& mesh = vstar.mesh;
  const ComplexField vp0 = profile_v(d, p, mesh.t_min);
  const ComplexField vpT = profile_v(d, p, mesh.T);
  const ComplexField start = vp0 + vstar.fields.front();
  const ComplexField target = vpT + vstar.fields.back();

  const ComplexField end =
      evolve_transformed(start, mesh.t_min, mesh.T, steps_per_slab * mesh.K, d, p);

  CrossValidation out{};
  const Real denom = l2_norm(target);
  out.rel_mismatch = (denom > 0.0) ? l2_norm(end - target) / denom : l2_norm(end - target);
  out.mass_drift = std::abs(l2_norm(end) - l2_norm(start));
  return out;
}

}  // namespace nlslab
