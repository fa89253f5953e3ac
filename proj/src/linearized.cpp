#include "nlslab/linearized.hpp"

#include <algorithm>
#include <cmath>

namespace nlslab {

namespace {

// Exact pointwise solution of i dpsi/dtau = c1 psi + c2 conj(psi) for
// duration d with frozen coefficients. In (Re, Im) coordinates the generator
// is trace-free with det = c1^2 - |c2|^2, so the exponential reduces to
// cos/cosh of sqrt(|det|) d.
void potential_rotate(ArrayXc& psi, const ArrayXr& c1, const ArrayXc& c2, Real d) {
  const auto n = psi.size();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Real a = c2[j].real();
    const Real b = c2[j].imag();
    const Real c = c1[j];
    const Real sarg = (c * c - a * a - b * b) * d * d;
    Real C, S;
    if (sarg > 1e-12) {
      const Real w = std::sqrt(sarg);
      C = std::cos(w);
      S = std::sin(w) / w;
    } else if (sarg < -1e-12) {
      const Real w = std::sqrt(-sarg);
      C = std::cosh(w);
      S = std::sinh(w) / w;
    } else {
      C = 1.0 - 0.5 * sarg;
      S = 1.0 - sarg / 6.0;
    }
    const Real p = psi[j].real();
    const Real q = psi[j].imag();
    const Real kp = b * p + (c - a) * q;
    const Real kq = -(c + a) * p - b * q;
    psi[j] = Complex(C * p + d * S * kp, C * q + d * S * kq);
  }
}

ArrayXc kinetic_table(const GridSpec& g, Real d) {
  ArrayXc table(g.n_points);
  for (int j = 0; j < g.n_points; ++j) {
    const Real xi = g.frequency(j);
    table[j] = std::exp(Complex(0.0, -0.5 * d * xi * xi));
  }
  return table;
}

// One Strang substep over [a, b]: potential half, kinetic full, potential
// half, with potential coefficients frozen at the substep midpoint.
void strang_substep(const ProfileContext& ctx, ArrayXc& psi, Real a, Real b, ArrayXr& c1,
                    ArrayXc& c2) {
  const Real d = b - a;
  const Real tmid = 0.5 * (a + b);
  ctx.potential_coefficients(tmid, c1, c2);
  potential_rotate(psi, c1, c2, 0.5 * d);
  ArrayXc F = dft(psi);
  F *= kinetic_table(ctx.grid, d);
  psi = idft(F);
  potential_rotate(psi, c1, c2, 0.5 * d);
}

}  // namespace

ComplexField potential_apply(const PairField& f, const ScatteringDatum& d, const ModelParams& p,
                             Real t) {
  ProfileContext ctx(d, p);
  ArrayXr c1;
  ArrayXc c2;
  ctx.potential_coefficients(t, c1, c2);
  return {f.psi.grid, c1 * f.psi.samples + c2 * f.psi.samples.conjugate()};
}

ArrayXc propagate_samples(const ProfileContext& ctx, ArrayXc psi, Real s, Real t,
                          const std::vector<Real>& interior_breaks, int substeps) {
  ArrayXr c1;
  ArrayXc c2;
  Real a = s;
  auto run_interval = [&](Real lo, Real hi) {
    const Real ratio = std::pow(hi / lo, 1.0 / substeps);
    Real ta = lo;
    for (int i = 0; i < substeps; ++i) {
      const Real tb = (i + 1 == substeps) ? hi : ta * ratio;
      strang_substep(ctx, psi, ta, tb, c1, c2);
      ta = tb;
    }
  };
  for (Real brk : interior_breaks) {
    run_interval(a, brk);
    a = brk;
  }
  if (t > a) run_interval(a, t);
  return psi;
}

PairField propagate(const PairField& psi0, const ScatteringDatum& d, const ModelParams& p,
                    Real s, Real t, const TimeMesh& mesh, int substeps) {
  if (!(s > 0.0) || !(t > 0.0)) throw ConfigError("propagate requires positive times");
  if (s > t) throw ConfigError("propagate: backward linearized propagation is out of scope");
  if (!mesh.contains(s) || !mesh.contains(t))
    throw ConfigError("propagate: times must lie in the mesh range");
  if (substeps < 1) throw ConfigError("propagate: substeps must be >= 1");
  if (s == t) return psi0;

  ProfileContext ctx(d, p);
  std::vector<Real> breaks;
  for (int k = 0; k <= mesh.K; ++k) {
    const Real tk = mesh.node(k);
    if (tk > s * (1 + 1e-14) && tk < t * (1 - 1e-14)) breaks.push_back(tk);
  }
  ArrayXc out = propagate_samples(ctx, psi0.psi.samples, s, t, breaks, substeps);
  return {ComplexField{psi0.psi.grid, std::move(out)}};
}

EnergyBreakdown modified_energy_samples(const ProfileContext& ctx, const ArrayXc& psi, Real t) {
  if (!(t > 0.0)) throw ConfigError("modified_energy requires t > 0");
  const Real h = ctx.grid.spacing();
  const ArrayXc vp = ctx.profile_v_samples(t);
  const ArrayXr re = (vp.conjugate() * psi).real();

  ComplexField f{ctx.grid, psi};
  const Real dn = l2_norm(derivative(f));
  const Real l2 = std::sqrt(h * psi.abs2().sum());

  EnergyBreakdown e{};
  e.kinetic = 0.25 * dn * dn;
  e.mass_w = std::pow(t, -ctx.params.alpha) * l2 * l2;
  e.d1 = ctx.params.lambda1 / t * h * (re * re).sum();
  e.d2 = 0.0;
  if (ctx.params.lambda2 != 0.0) {
    const Real s = ctx.params.sigma;
    const ArrayXr wre = ctx.abs_sigma_m1 * re;
    e.d2 = ctx.params.lambda2 * s * std::pow(t, s - 2.0) * h * (wre * wre).sum();
  }
  return e;
}

Real energy_identity_rhs_samples(const ProfileContext& ctx, const ArrayXc& psi, Real t) {
  if (!(t > 0.0)) throw ConfigError("energy_identity_rhs requires t > 0");
  const Real h = ctx.grid.spacing();
  const ModelParams& p = ctx.params;
  const ArrayXc vp = ctx.profile_v_samples(t);
  const ArrayXc vbar_psi = vp.conjugate() * psi;
  const ArrayXr re = vbar_psi.real();
  const ArrayXr im = vbar_psi.imag();
  const ComplexField f{ctx.grid, psi};
  const ArrayXc dpsi = derivative(f).samples;
  const ArrayXr im_dpsi_psibar = (dpsi * psi.conjugate()).imag();

  const Real l2sq = h * psi.abs2().sum();
  Real rhs = -p.alpha * std::pow(t, -p.alpha - 1.0) * l2sq;

  struct Term {
    Real lambda, s;
    const ArrayXr* w_sm1;    // |phi|^(s-1)
    const ArrayXr* w_2sm2;   // |phi|^(2s-2)
  };
  static const ArrayXr kEmpty;
  ArrayXr ones = ArrayXr::Ones(ctx.grid.n_points);
  std::vector<Term> terms;
  terms.push_back({p.lambda1, 1.0, &ones, &ones});
  if (p.lambda2 != 0.0) terms.push_back({p.lambda2, p.sigma, &ctx.abs_sigma_m1, &ctx.abs_2sigma_m2});

  for (const Term& tm : terms) {
    const Real s = tm.s;
    const ArrayXr wre = (*tm.w_sm1) * re;
    rhs -= tm.lambda * s * (2.0 - s) * std::pow(t, s - 3.0) * h * (wre * wre).sum();
    rhs -= 4.0 * tm.lambda * s * std::pow(t, s - 2.0 - p.alpha) * h *
           ((*tm.w_2sm2) * re * im).sum();
    rhs -= tm.lambda * s * std::pow(t, s - 2.0) * h *
           ((*tm.w_2sm2) * ctx.re_phi_dphi * im_dpsi_psibar).sum();
  }
  return rhs;
}

EnergyBreakdown modified_energy(const PairField& psi, const ScatteringDatum& d,
                                const ModelParams& p, Real t) {
  ProfileContext ctx(d, p);
  return modified_energy_samples(ctx, psi.psi.samples, t);
}

Real energy_identity_rhs(const PairField& psi, const ScatteringDatum& d, const ModelParams& p,
                         Real t) {
  ProfileContext ctx(d, p);
  return energy_identity_rhs_samples(ctx, psi.psi.samples, t);
}

Real EnergyRatioReport::max_rel_step() const {
  Real worst = 0.0;
  for (std::size_t i = 0; i + 1 < sup_ratio_levels.size(); ++i)
    worst = std::max(worst,
                     std::abs(sup_ratio_levels[i + 1] - sup_ratio_levels[i]) / sup_ratio_levels[i]);
  return worst;
}

EnergyRatioReport energy_ratio_audit(const ScatteringDatum& d, const ModelParams& p,
                                     const TimeMesh& mesh, int samples, Rng& rng, int levels,
                                     int base_substeps) {
  if (!p.defocusing()) {
    const Real cap = lambda_cap(p, d.linf());
    const auto [lo, hi] = focusing_alpha_window(p, d.linf());
    if (!(cap < 2.0))
      throw ConfigError("energy_ratio_audit: focusing threshold violated, "
                        "|lambda1|*||phi||_inf^2 = " + std::to_string(cap / 2.0) + " >= 1");
    if (!(p.alpha > lo && p.alpha < hi))
      throw ConfigError("energy_ratio_audit: focusing alpha outside the admissible interval (" +
                        std::to_string(lo) + ", " + std::to_string(hi) + ")");
  } else if (!(p.alpha >= 0.0 && p.alpha < 1.0)) {
    throw ConfigError("energy_ratio_audit: defocusing alpha must lie in [0, 1)");
  }

  ProfileContext ctx(d, p);
  const GridSpec g = d.grid();
  const Real t0 = mesh.t_min;

  std::vector<ArrayXc> states;
  states.push_back(ctx.profile_v_samples(t0));
  states.push_back(kImag * ctx.profile_v_samples(t0));
  {
    ArrayXc bump(g.n_points);
    for (int j = 0; j < g.n_points; ++j) {
      const Real x = g.node(j) - 1.0;
      bump[j] = std::exp(-x * x);
    }
    states.push_back(bump);
  }
  while (static_cast<int>(states.size()) < samples) {
    // band-limited random field, modes |m| <= 20
    ArrayXc f = ArrayXc::Zero(g.n_points);
    for (int m = -20; m <= 20; ++m) {
      const Complex c(rng.normal(), rng.normal());
      for (int j = 0; j < g.n_points; ++j)
        f[j] += c / 40.0 * std::polar(1.0, m * GridSpec::pi() * g.node(j) / g.half_width);
    }
    states.push_back(f);
  }

  EnergyRatioReport rep;
  rep.lambda_cap = lambda_cap(p, d.linf());
  for (int lvl = 0; lvl < levels; ++lvl) {
    const int factor = 1 << lvl;
    const TimeMesh m = mesh.refined(factor);
    const int substeps = base_substeps * factor;
    Real level_sup = 0.0;
    for (std::size_t si = 0; si < states.size(); ++si) {
      ArrayXc cur = states[si];
      EnergyBreakdown e = modified_energy_samples(ctx, cur, m.node(0));
      Real q = e.q_alpha();
      Real running_min = q;
      Real sup = 1.0;
      auto record = [&](const EnergyBreakdown& eb) {
        const Real qa = eb.q_alpha();
        if (p.defocusing() && qa < -1e-12 * (eb.kinetic + eb.mass_w)) rep.q_nonnegative = false;
        if (std::abs(eb.d2) > 0.5 * qa) rep.d2_within_half = false;
      };
      record(e);
      for (int k = 0; k < m.K; ++k) {
        cur = propagate_samples(ctx, std::move(cur), m.node(k), m.node(k + 1), {}, substeps);
        e = modified_energy_samples(ctx, cur, m.node(k + 1));
        q = e.q_alpha();
        if (!std::isfinite(q))
          throw NumericalError("energy_ratio_audit: non-finite energy at node " +
                               std::to_string(k + 1));
        record(e);
        sup = std::max(sup, q / running_min);
        running_min = std::min(running_min, q);
      }
      if (lvl == 0) rep.per_sample_sup.push_back(sup);
      level_sup = std::max(level_sup, sup);
    }
    rep.sup_ratio_levels.push_back(level_sup);
  }
  return rep;
}

}  // namespace nlslab
