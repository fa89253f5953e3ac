#pragma once

#include "nlslab/linearized.hpp"

#include <limits>
#include <utility>

namespace nlslab {

/// Superlinear Taylor remainder G_sigma of |z|^{2 sigma} z around z0:
/// |z0+zs|^{2s}(z0+zs) = |z0|^{2s}z0 + (s+1)|z0|^{2s}zs + s|z0|^{2s-2}z0^2 conj(zs) + G.
/// sigma = 1 uses the exact closed form; sigma > 1 integrates in the
/// homotopy variable with 8-node Gauss-Legendre panels, bisecting near a
/// zero-crossing of the segment.
Complex taylor_remainder(Complex z0, Complex zstar, Real sigma);

/// Quadrature path regardless of sigma (cross-check for the closed form).
Complex taylor_remainder_quadrature(Complex z0, Complex zstar, Real sigma);

/// Coupling-weighted remainder field: sum_j lambda_j t^{sigma_j-2} G_{sigma_j}
/// with base point v_p(t, x) at every node.
ComplexField nonlinear_remainder(const ComplexField& vstar, const ScatteringDatum& d,
                                 const ModelParams& p, Real t);

/// e1(t): the free-flow remainder of the conformal profile.
ComplexField dispersive_error(const ScatteringDatum& d, const ModelParams& p, Real t);

/// e2(t): remainder-vs-linearization commutator terms.
ComplexField linearization_error(const ScatteringDatum& d, const ModelParams& p, Real t);

// Context-level variants (shared by the Picard driver).
ArrayXc nonlinear_remainder_samples(const ProfileContext& ctx, const ArrayXc& vstar, Real t);
ArrayXc dispersive_error_samples(const ProfileContext& ctx, Real t);
ArrayXc linearization_error_samples(const ProfileContext& ctx, Real t);

/// Time-indexed family of fields on a shared grid, one per mesh node.
struct Trajectory {
  TimeMesh mesh;
  std::vector<ComplexField> fields;

  Trajectory(const TimeMesh& m, const GridSpec& g);
  Trajectory(TimeMesh m, std::vector<ComplexField> f);

  const GridSpec& grid() const { return fields.front().grid; }
};

Trajectory operator-(const Trajectory& a, const Trajectory& b);

/// One forward sweep of the integral map: node k value is e1(t_k) minus the
/// accumulated propagated Duhamel integral (midpoint slab rule at the
/// geometric-mean time, linear-in-time interpolation of the input state).
/// The (0, t_min] tail is excluded here and reported by the solver.
Trajectory duhamel_map(const Trajectory& vstar, const ScatteringDatum& d, const ModelParams& p,
                       int substeps = 2);

/// sup_k t_k^{-beta} (||dx f_k|| + t_k^{-alpha/2} ||f_k||).
Real trajectory_norm(const Trajectory& traj, Real alpha, Real beta);

struct IterationReport {
  std::vector<Real> x_norms;   // per iterate (initial state first)
  std::vector<Real> diffs;     // successive-difference trajectory norms
  Real contraction_factor = std::numeric_limits<Real>::quiet_NaN();  // last pair
  Real first_factor = std::numeric_limits<Real>::quiet_NaN();
  Real ball_radius = 0.0;      // max trajectory norm over iterates
  Real tail_bound = 0.0;       // extrapolated (0, t_min] contribution
  int iterations = 0;
  bool converged = false;
};

/// Picard iteration v <- duhamel_map(v) from the e1 trajectory (or zero),
/// stopping when the successive difference drops below tol. A factor >= 1
/// after max_iter yields a failure report (converged = false) with the
/// factor history; non-finite fields abort.
std::pair<Trajectory, IterationReport> solve_fixed_point(const ScatteringDatum& d,
                                                         const ModelParams& p,
                                                         const TimeMesh& mesh, Real tol,
                                                         int max_iter, bool zero_init = false,
                                                         int substeps = 2);

}  // namespace nlslab
