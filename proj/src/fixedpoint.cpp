#include "nlslab/fixedpoint.hpp"

#include <algorithm>
#include <cmath>

namespace nlslab {

namespace {

// 8-node Gauss-Legendre on [0, 1].
constexpr int kGL = 8;
constexpr Real kGLNode[kGL] = {
    0.01985507175123188415821957, 0.10166676129318663020422303,
    0.23723379504183550709113047, 0.40828267875217509753026193,
    0.59171732124782490246973807, 0.76276620495816449290886953,
    0.89833323870681336979577697, 0.98014492824876811584178043};
constexpr Real kGLWeight[kGL] = {
    0.05061426814518812957626567, 0.11119051722668723527217800,
    0.15685332293894364366898110, 0.18134189168918099148257522,
    0.18134189168918099148257522, 0.15685332293894364366898110,
    0.11119051722668723527217800, 0.05061426814518812957626567};

struct PanelPair {
  Complex i1{0.0, 0.0};  // integral of |z_th|^{2s} - |z0|^{2s}
  Complex i2{0.0, 0.0};  // integral of |z_th|^{2s-2} z_th^2 - |z0|^{2s-2} z0^2
};

PanelPair gl8_panel(Complex z0, Complex zs, Real s, Real a, Real b) {
  PanelPair out;
  const Real az0 = std::abs(z0);
  const Real base1 = std::pow(az0, 2.0 * s);
  const Complex base2 = (az0 > 0.0) ? std::pow(az0, 2.0 * s - 2.0) * z0 * z0 : Complex(0, 0);
  for (int i = 0; i < kGL; ++i) {
    const Real th = a + (b - a) * kGLNode[i];
    const Real w = (b - a) * kGLWeight[i];
    const Complex zt = z0 + th * zs;
    const Real azt = std::abs(zt);
    out.i1 += w * (std::pow(azt, 2.0 * s) - base1);
    const Complex p2 = (azt > 0.0) ? std::pow(azt, 2.0 * s - 2.0) * zt * zt : Complex(0, 0);
    out.i2 += w * (p2 - base2);
  }
  return out;
}

PanelPair adaptive_panel(Complex z0, Complex zs, Real s, Real a, Real b, const PanelPair& whole,
                         Real tol, int depth) {
  const Real mid = 0.5 * (a + b);
  const PanelPair left = gl8_panel(z0, zs, s, a, mid);
  const PanelPair right = gl8_panel(z0, zs, s, mid, b);
  const Real err = std::abs(whole.i1 - left.i1 - right.i1) + std::abs(whole.i2 - left.i2 - right.i2);
  if (err <= tol || depth <= 0)
    return {left.i1 + right.i1, left.i2 + right.i2};
  PanelPair l = adaptive_panel(z0, zs, s, a, mid, left, 0.5 * tol, depth - 1);
  PanelPair r = adaptive_panel(z0, zs, s, mid, b, right, 0.5 * tol, depth - 1);
  return {l.i1 + r.i1, l.i2 + r.i2};
}

Complex assemble(Complex zs, Real s, const PanelPair& pp) {
  return (s + 1.0) * zs * pp.i1 + s * std::conj(zs) * pp.i2;
}

Complex closed_form_cubic(Complex z0, Complex zs) {
  const Real a2 = std::norm(zs);
  return std::conj(z0) * zs * zs + 2.0 * z0 * a2 + a2 * zs;
}

}  // namespace

Complex taylor_remainder_quadrature(Complex z0, Complex zs, Real s) {
  if (std::abs(zs) == 0.0) return {0.0, 0.0};
  // distance of the homotopy segment to the origin decides whether a single
  // panel is enough; |z_theta|^2 is a quadratic in theta
  const Real zs2 = std::norm(zs);
  const Real tstar = -(std::conj(z0) * zs).real() / zs2;
  const Real qmin = std::norm(z0 + std::clamp(tstar, 0.0, 1.0) * zs);
  const bool near_crossing = (tstar > -0.25 && tstar < 1.25) && qmin < 4.0 * zs2;

  const PanelPair whole = gl8_panel(z0, zs, s, 0.0, 1.0);
  if (!near_crossing) return assemble(zs, s, whole);

  const Real scale = std::pow(std::max({std::norm(z0), std::norm(z0 + zs), zs2}), s);
  const Real tol = 1e-14 * std::max(scale, 1e-300);
  return assemble(zs, s, adaptive_panel(z0, zs, s, 0.0, 1.0, whole, tol, 12));
}

Complex taylor_remainder(Complex z0, Complex zs, Real s) {
  if (!(s >= 1.0)) throw ConfigError("taylor_remainder requires sigma >= 1");
  if (s == 1.0) return closed_form_cubic(z0, zs);
  return taylor_remainder_quadrature(z0, zs, s);
}

ArrayXc nonlinear_remainder_samples(const ProfileContext& ctx, const ArrayXc& vstar, Real t) {
  if (!(t > 0.0)) throw ConfigError("nonlinear_remainder requires t > 0");
  const ArrayXc vp = ctx.profile_v_samples(t);
  const int n = ctx.grid.n_points;
  ArrayXc out = ArrayXc::Zero(n);
  const ModelParams& p = ctx.params;
  if (p.lambda1 != 0.0) {
    const Real w = p.lambda1 / t;
    for (int j = 0; j < n; ++j) out[j] += w * closed_form_cubic(vp[j], vstar[j]);
  }
  if (p.lambda2 != 0.0) {
    const Real w = p.lambda2 * std::pow(t, p.sigma - 2.0);
    for (int j = 0; j < n; ++j) out[j] += w * taylor_remainder_quadrature(vp[j], vstar[j], p.sigma);
  }
  return out;
}

ComplexField nonlinear_remainder(const ComplexField& vstar, const ScatteringDatum& d,
                                 const ModelParams& p, Real t) {
  ProfileContext ctx(d, p);
  return {vstar.grid, nonlinear_remainder_samples(ctx, vstar.samples, t)};
}

ArrayXc dispersive_error_samples(const ProfileContext& ctx, Real t) {
  const ComplexField vp{ctx.grid, ctx.profile_v_samples(t)};
  return free_flow_remainder(vp, t).samples;
}

ComplexField dispersive_error(const ScatteringDatum& d, const ModelParams& p, Real t) {
  if (!(t > 0.0)) throw ConfigError("dispersive_error requires t > 0");
  ProfileContext ctx(d, p);
  return {d.grid(), dispersive_error_samples(ctx, t)};
}

ArrayXc linearization_error_samples(const ProfileContext& ctx, Real t) {
  const ArrayXc vp = ctx.profile_v_samples(t);
  const ArrayXc e1 = dispersive_error_samples(ctx, t);
  const ArrayXc conj_e1 = e1.conjugate();
  const ArrayXc vp2 = vp * vp;
  ArrayXc out = ArrayXc::Zero(ctx.grid.n_points);
  const ModelParams& p = ctx.params;

  auto add_coupling = [&](Real lambda, Real s, const ArrayXr& a2s, const ArrayXr& a2sm2) {
    if (lambda == 0.0) return;
    const Real w = lambda * std::pow(t, s - 2.0);
    const ComplexField g{ctx.grid, a2s * vp};  // |v_p|^{2s} v_p = |phi|^{2s} v_p
    const ArrayXc rg = free_flow_remainder(g, t).samples;
    out += w * (-rg + (s + 1.0) * (a2s * e1) + s * (a2sm2 * vp2 * conj_e1));
  };
  const ArrayXr ones = ArrayXr::Ones(ctx.grid.n_points);
  add_coupling(p.lambda1, 1.0, ctx.abs2, ones);
  add_coupling(p.lambda2, p.sigma, ctx.abs_2sigma, ctx.abs_2sigma_m2);
  return out;
}

ComplexField linearization_error(const ScatteringDatum& d, const ModelParams& p, Real t) {
  if (!(t > 0.0)) throw ConfigError("linearization_error requires t > 0");
  ProfileContext ctx(d, p);
  return {d.grid(), linearization_error_samples(ctx, t)};
}

Trajectory::Trajectory(const TimeMesh& m, const GridSpec& g) : mesh(m) {
  fields.reserve(m.K + 1);
  for (int k = 0; k <= m.K; ++k) fields.push_back(ComplexField::zeros(g));
}

Trajectory::Trajectory(TimeMesh m, std::vector<ComplexField> f) : mesh(m), fields(std::move(f)) {
  if (static_cast<int>(fields.size()) != mesh.K + 1)
    throw ConfigError("trajectory node count does not match mesh");
}

Trajectory operator-(const Trajectory& a, const Trajectory& b) {
  if (a.mesh.K != b.mesh.K) throw ConfigError("trajectory meshes differ");
  std::vector<ComplexField> out;
  out.reserve(a.fields.size());
  for (std::size_t i = 0; i < a.fields.size(); ++i) out.push_back(a.fields[i] - b.fields[i]);
  return {a.mesh, std::move(out)};
}

Trajectory duhamel_map(const Trajectory& v, const ScatteringDatum& d, const ModelParams& p,
                       int substeps) {
  ProfileContext ctx(d, p);
  const TimeMesh& mesh = v.mesh;
  const GridSpec g = v.grid();

  std::vector<ComplexField> out;
  out.reserve(mesh.K + 1);
  out.push_back(ComplexField{g, dispersive_error_samples(ctx, mesh.node(0))});

  ArrayXc integral = ArrayXc::Zero(g.n_points);
  for (int k = 0; k < mesh.K; ++k) {
    const Real ta = mesh.node(k);
    const Real tb = mesh.node(k + 1);
    const Real tm = std::sqrt(ta * tb);
    const Real lam = (tm - ta) / (tb - ta);
    const ArrayXc vmid = (1.0 - lam) * v.fields[k].samples + lam * v.fields[k + 1].samples;

    ArrayXc F = kImag * (nonlinear_remainder_samples(ctx, vmid, tm) +
                         linearization_error_samples(ctx, tm));
    integral = propagate_samples(ctx, std::move(integral), ta, tb, {}, substeps);
    F = propagate_samples(ctx, std::move(F), tm, tb, {}, substeps);
    integral += (tb - ta) * F;

    ArrayXc node_value = dispersive_error_samples(ctx, tb) - integral;
    ComplexField nf{g, std::move(node_value)};
    if (!nf.all_finite())
      throw NumericalError("duhamel_map: non-finite field at node " + std::to_string(k + 1) +
                           " (t = " + std::to_string(tb) + ")");
    out.push_back(std::move(nf));
  }
  return {mesh, std::move(out)};
}

Real trajectory_norm(const Trajectory& traj, Real alpha, Real beta) {
  Real sup = 0.0;
  for (int k = 0; k <= traj.mesh.K; ++k) {
    const Real t = traj.mesh.node(k);
    const Real val = std::pow(t, -beta) * (l2_norm(derivative(traj.fields[k])) +
                                           std::pow(t, -alpha / 2.0) * l2_norm(traj.fields[k]));
    sup = std::max(sup, val);
  }
  return sup;
}

namespace {

Real tail_bound_estimate(const ProfileContext& ctx, const Trajectory& vhat) {
  const ModelParams& p = ctx.params;
  const Real t0 = vhat.mesh.t_min;
  const Real m = std::min(p.alpha / 4.0, 3.0 * p.alpha / 4.0 - 0.5);
  const Real pg = 2.0 * p.beta + m - 1.0;
  const Real pe = p.delta_audit - std::max(0.5, p.alpha / 2.0) - 1.0 - p.nu_audit;
  if (pg <= -1.0 || pe <= -1.0) return std::numeric_limits<Real>::infinity();

  const ArrayXc g0 = nonlinear_remainder_samples(ctx, vhat.fields[0].samples, t0);
  const ArrayXc e2 = linearization_error_samples(ctx, t0);
  const Real qg = std::sqrt(std::max(0.0, modified_energy_samples(ctx, kImag * g0, t0).q_alpha()));
  const Real qe = std::sqrt(std::max(0.0, modified_energy_samples(ctx, kImag * e2, t0).q_alpha()));
  const Real cg = qg / std::pow(t0, pg);
  const Real ce = qe / std::pow(t0, pe);
  const Real tail_int = cg * std::pow(t0, pg + 1.0) / (pg + 1.0) +
                        ce * std::pow(t0, pe + 1.0) / (pe + 1.0);
  const Real cap = lambda_cap(p, ctx.phi_linf);
  const Real q_to_x = p.defocusing() ? 3.0 : 2.0 + 1.0 / std::sqrt(1.0 - cap / 2.0);
  return std::pow(t0, -p.beta) * q_to_x * tail_int;
}

}  // namespace

std::pair<Trajectory, IterationReport> solve_fixed_point(const ScatteringDatum& d,
                                                         const ModelParams& p,
                                                         const TimeMesh& mesh, Real tol,
                                                         int max_iter, bool zero_init,
                                                         int substeps) {
  if (!p.defocusing() && !(lambda_cap(p, d.linf()) < 2.0))
    throw ConfigError("solve_fixed_point: focusing preset requires |lambda1|*||phi||_inf^2 < 1");
  if (!(tol > 0.0)) throw ConfigError("solve_fixed_point: tol must be positive");

  ProfileContext ctx(d, p);
  const GridSpec g = d.grid();

  Trajectory v(mesh, g);
  if (!zero_init) {
    for (int k = 0; k <= mesh.K; ++k)
      v.fields[k] = ComplexField{g, dispersive_error_samples(ctx, mesh.node(k))};
  }

  IterationReport rep;
  rep.x_norms.push_back(trajectory_norm(v, p.alpha, p.beta));
  rep.ball_radius = rep.x_norms.back();

  for (int it = 1; it <= max_iter; ++it) {
    Trajectory vn = duhamel_map(v, d, p, substeps);
    const Real diff = trajectory_norm(vn - v, p.alpha, p.beta);
    if (!std::isfinite(diff))
      throw NumericalError("solve_fixed_point: non-finite difference at iteration " +
                           std::to_string(it));
    rep.diffs.push_back(diff);
    v = std::move(vn);
    rep.x_norms.push_back(trajectory_norm(v, p.alpha, p.beta));
    rep.ball_radius = std::max(rep.ball_radius, rep.x_norms.back());
    rep.iterations = it;
    if (diff < tol) {
      rep.converged = true;
      break;
    }
  }
  if (rep.diffs.size() >= 2) {
    rep.contraction_factor = rep.diffs.back() / rep.diffs[rep.diffs.size() - 2];
    rep.first_factor = rep.diffs[1] / rep.diffs[0];
  } else if (rep.diffs.size() == 1 && rep.diffs[0] < tol) {
    rep.contraction_factor = 0.0;  // converged in one sweep
    rep.first_factor = 0.0;
  }
  rep.tail_bound = tail_bound_estimate(ctx, v);
  return {std::move(v), std::move(rep)};
}

}  // namespace nlslab
