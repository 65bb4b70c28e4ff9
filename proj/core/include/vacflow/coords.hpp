#ifndef VACFLOW_COORDS_HPP
#define VACFLOW_COORDS_HPP

#include <cstddef>
#include <vector>

#include "vacflow/types.hpp"

namespace vacflow {

/// Piecewise-linear cumulative mass of an Eulerian field:
/// values at the M+1 nodes, Y(x0) = 0, Y(x_{j+1}) = Y(x_j) + rho_j (x_{j+1}-x_j).
std::vector<double> cumulative_mass(const EulerianField& f);

/// Exact piecewise-linear inversion of the cumulative mass function at a
/// target mass y (left-continuous inverse; flat vacuum runs resolve to their
/// left edge). y is clamped into [0, total mass].
double invert_cumulative_mass(const EulerianField& f, const std::vector<double>& cum,
                              double y);

/// Resample an Eulerian field onto n_cells equal-mass Lagrangian cells of
/// width h = M_total / n_cells. Cell boundaries are the exact quantiles of the
/// piecewise-linear cumulative mass; cell densities are h / (cell x-width), so
/// the total reconstructed length is preserved exactly. Node velocities are
/// interpolated linearly in x onto the new cell faces.
///
/// Throws std::domain_error on zero total mass.
StaggeredState eulerian_to_lagrangian(const EulerianField& f, std::size_t n_cells,
                                      BoundaryKind bc);

/// Width of the pinned (zero-density) cell, reconstructed by fitting the
/// power-law profile rho ~ a |y - y0|^beta to the two neighbor cells on each
/// side and integrating rho^{-1} over the cell in closed form. Fitted beta is
/// clamped to (0, beta_cap] to keep the integral finite.
double pinned_cell_width(const StaggeredState& s, double beta_cap = 0.995);

/// Per-cell physical widths h / rho, with the pinned cell width reconstructed
/// by pinned_cell_width.
std::vector<double> cell_widths(const StaggeredState& s);

/// Inverse transform x_j = origin + sum_{i<j} h/rho_i. For Dirichlet data the
/// right endpoint defect |x_N - 1| is the caller-visible diagnostic
/// dirichlet_domain_defect; it is reported, never silently corrected.
///
/// Throws PositivityError if any non-pinned density is <= 0.
EulerianField lagrangian_to_eulerian(const StaggeredState& s, double origin = 0.0);

/// |x_N - 1| of a reconstruction that should tile the unit interval.
double dirichlet_domain_defect(const EulerianField& f);

/// Particle trajectory extracted at fixed Lagrangian mass label.
struct ParticleTrajectory {
  std::vector<double> times;
  std::vector<double> positions;
  double mass_label = 0.0;
};

/// Position of mass label y_star inside a snapshot's reconstruction.
double position_of_mass_label(const StaggeredState& s, double y_star, double origin = 0.0);

/// Trajectory of the particle that starts at x0: its mass label
/// y* = cumulative mass at x0 in the first snapshot is constant in time, so
/// X(t) is the Eulerian position of y* in every snapshot.
///
/// Throws std::invalid_argument for x0 outside [0, 1] or an empty snapshot set.
ParticleTrajectory particle_path(const std::vector<StaggeredState>& snapshots, double x0);

} // namespace vacflow

#endif
