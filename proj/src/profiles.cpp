#include "nlslab/profiles.hpp"

#include "nlslab/spectral.hpp"

#include <cmath>

namespace nlslab {

ProfileContext::ProfileContext(const ScatteringDatum& datum, const ModelParams& p)
    : grid(datum.grid()), params(p), phi(datum.phi().samples), conj_phi(phi.conjugate()),
      dphi(datum.phi_prime().samples), abs_phi(datum.abs_phi()), abs2(abs_phi * abs_phi),
      abs_2sigma(grid.n_points), abs_2sigma_m2(grid.n_points), abs_sigma_m1(grid.n_points),
      re_phi_dphi((phi * dphi.conjugate()).real()), phi_linf(datum.linf()) {
  const Real s = p.sigma;
  for (int j = 0; j < grid.n_points; ++j) {
    const Real a = abs_phi[j];
    abs_2sigma[j] = std::pow(a, 2.0 * s);
    abs_2sigma_m2[j] = std::pow(a, 2.0 * s - 2.0);
    abs_sigma_m1[j] = std::pow(a, s - 1.0);
  }
}

ArrayXr ProfileContext::phase(Real t) const {
  if (!(t > 0.0)) throw ConfigError("profile phase requires t > 0");
  ArrayXr th = (-params.lambda1 * std::log(t)) * abs2;
  if (params.lambda2 != 0.0) {
    const Real s = params.sigma;
    th -= (params.lambda2 / (s - 1.0) * std::pow(t, s - 1.0)) * abs_2sigma;
  }
  return th;
}

ArrayXc ProfileContext::profile_v_samples(Real t) const {
  const ArrayXr th = phase(t);
  ArrayXc out(grid.n_points);
  for (int j = 0; j < grid.n_points; ++j)
    out[j] = std::polar(1.0, th[j]) * conj_phi[j];
  return out;
}

void ProfileContext::potential_coefficients(Real t, ArrayXr& c1, ArrayXc& c2) const {
  if (!(t > 0.0)) throw ConfigError("potential coefficients require t > 0");
  const ArrayXc vp = profile_v_samples(t);
  const ArrayXc vp2 = vp * vp;
  c1 = (2.0 * params.lambda1 / t) * abs2;
  c2 = (params.lambda1 / t) * vp2;
  if (params.lambda2 != 0.0) {
    const Real s = params.sigma;
    const Real w = params.lambda2 * std::pow(t, s - 2.0);
    c1 += (w * (s + 1.0)) * abs_2sigma;
    c2 += (w * s) * (abs_2sigma_m2 * vp2);
  }
}

ComplexField profile_v(const ScatteringDatum& d, const ModelParams& p, Real t) {
  ProfileContext ctx(d, p);
  return {d.grid(), ctx.profile_v_samples(t)};
}

namespace {

ComplexField large_time_profile(const ScatteringDatum& d, const ModelParams& p, Real t,
                                bool with_correction) {
  if (!(t > 0.0)) throw ConfigError("large-time profiles require t > 0");
  ProfileContext ctx(d, p);
  ArrayXr th = (-p.lambda1 * std::log(t)) * ctx.abs2;
  if (with_correction && p.lambda2 != 0.0) {
    const Real s = p.sigma;
    th -= (p.lambda2 / (1.0 - s) * std::pow(t, 1.0 - s)) * ctx.abs_2sigma;
  }
  ArrayXc out(ctx.grid.n_points);
  for (int j = 0; j < ctx.grid.n_points; ++j)
    out[j] = std::polar(1.0, th[j]) * ctx.phi[j];
  return {d.grid(), out};
}

}  // namespace

ComplexField profile_w(const ScatteringDatum& d, const ModelParams& p, Real t) {
  return large_time_profile(d, p, t, false);
}

ComplexField profile_w_tilde(const ScatteringDatum& d, const ModelParams& p, Real t) {
  return large_time_profile(d, p, t, true);
}

ProfileGap profile_gap(const ScatteringDatum& d, const ModelParams& p, Real t) {
  if (!(t >= 1.0)) throw ConfigError("profile_gap requires t >= 1");
  const ComplexField diff = profile_w(d, p, t) - profile_w_tilde(d, p, t);
  return {l2_norm(diff), l2_norm(derivative(diff))};
}

}  // namespace nlslab
