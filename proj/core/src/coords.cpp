#include "vacflow/coords.hpp"

#include <algorithm>
#include <cmath>

#include "vacflow/scheme.hpp"

namespace vacflow {

std::vector<double> cumulative_mass(const EulerianField& f) {
  std::vector<double> cum(f.x.size());
  cum[0] = 0.0;
  for (std::size_t i = 0; i < f.rho.size(); ++i)
    cum[i + 1] = cum[i] + f.rho[i] * (f.x[i + 1] - f.x[i]);
  return cum;
}

double invert_cumulative_mass(const EulerianField& f, const std::vector<double>& cum,
                              double y) {
  const double total = cum.back();
  if (y <= 0.0) return f.x.front();
  if (y >= total) return f.x.back();
  // First node with cumulative mass >= y; the containing segment precedes it.
  const auto it = std::lower_bound(cum.begin(), cum.end(), y);
  std::size_t j = static_cast<std::size_t>(it - cum.begin());
  if (cum[j] == y) return f.x[j]; // left edge of any flat (vacuum) run
  const std::size_t i = j - 1;    // segment index, rho[i] > 0 here since cum increased
  return f.x[i] + (y - cum[i]) / f.rho[i];
}

StaggeredState eulerian_to_lagrangian(const EulerianField& f, std::size_t n_cells,
                                      BoundaryKind bc) {
  f.check_invariants();
  if (n_cells < 1) throw std::invalid_argument("eulerian_to_lagrangian: need at least one cell");
  const std::vector<double> cum = cumulative_mass(f);
  const double total = cum.back();
  if (!(total > 0.0)) throw std::domain_error("eulerian_to_lagrangian: zero total mass");

  const double h = total / static_cast<double>(n_cells);
  std::vector<double> bounds(n_cells + 1);
  bounds[0] = f.x.front();
  bounds[n_cells] = f.x.back();
  for (std::size_t k = 1; k < n_cells; ++k)
    bounds[k] = invert_cumulative_mass(f, cum, static_cast<double>(k) * h);

  StaggeredState s;
  s.h = h;
  s.t = f.t;
  s.bc = bc;
  s.rho.resize(n_cells);
  for (std::size_t k = 0; k < n_cells; ++k) {
    const double width = bounds[k + 1] - bounds[k];
    s.rho[k] = h / width;
  }

  const std::size_t n_nodes = bc == BoundaryKind::periodic ? n_cells : n_cells + 1;
  s.u.resize(n_nodes);
  for (std::size_t k = 0; k < n_nodes; ++k) {
    const double xq = bounds[k];
    const auto it = std::upper_bound(f.x.begin(), f.x.end(), xq);
    std::size_t j = static_cast<std::size_t>(it - f.x.begin());
    if (j == 0) j = 1;
    if (j >= f.x.size()) j = f.x.size() - 1;
    const double w = (xq - f.x[j - 1]) / (f.x[j] - f.x[j - 1]);
    s.u[k] = (1.0 - w) * f.u[j - 1] + w * f.u[j];
  }
  if (bc == BoundaryKind::dirichlet) {
    s.u.front() = 0.0;
    s.u.back() = 0.0;
  } else if (bc == BoundaryKind::free_left) {
    s.u.back() = 0.0;
  } else if (bc == BoundaryKind::free_right) {
    s.u.front() = 0.0;
  }
  return s;
}

double pinned_cell_width(const StaggeredState& s, double beta_cap) {
  if (!s.pinned_cell) return 0.0;
  const std::size_t k = *s.pinned_cell;
  const std::size_t n = s.n_cells();
  // Cell centers sit at distances h, 2h from the vacuum center, so
  // rho(2h)/rho(h) = 2^beta.  Half-cell width of integrable rho^{-1}:
  //   integral_0^{h/2} (a s^beta)^{-1} ds = (h/2)^{1-beta} / (a (1-beta)).
  const auto half_width = [&](std::size_t near, std::size_t far, bool have_far) {
    const double rho_near = s.rho[near];
    double beta = 0.5;
    if (have_far && s.rho[far] > 0.0 && rho_near > 0.0)
      beta = std::log2(s.rho[far] / rho_near);
    beta = std::clamp(beta, 1e-3, beta_cap);
    const double amp = rho_near / std::pow(s.h, beta);
    return std::pow(0.5 * s.h, 1.0 - beta) / (amp * (1.0 - beta));
  };
  double left = 0.0;
  double right = 0.0;
  if (k >= 1) left = half_width(k - 1, k >= 2 ? k - 2 : 0, k >= 2);
  if (k + 1 < n) right = half_width(k + 1, k + 2 < n ? k + 2 : 0, k + 2 < n);
  if (k == 0) left = right;
  if (k + 1 >= n) right = left;
  return left + right;
}

std::vector<double> cell_widths(const StaggeredState& s) {
  std::vector<double> w(s.n_cells());
  for (std::size_t i = 0; i < s.n_cells(); ++i) {
    if (s.is_pinned(i)) {
      w[i] = pinned_cell_width(s);
    } else {
      if (!(s.rho[i] > 0.0)) throw PositivityError(i, s.rho[i], s.t);
      w[i] = s.h / s.rho[i];
    }
  }
  return w;
}

EulerianField lagrangian_to_eulerian(const StaggeredState& s, double origin) {
  const std::vector<double> widths = cell_widths(s);
  const std::size_t n = s.n_cells();

  EulerianField f;
  f.t = s.t;
  f.x.resize(n + 1);
  f.x[0] = origin;
  for (std::size_t i = 0; i < n; ++i) f.x[i + 1] = f.x[i] + widths[i];
  f.rho = s.rho;
  f.u.resize(n + 1);
  if (s.bc == BoundaryKind::periodic) {
    for (std::size_t j = 0; j < n; ++j) f.u[j] = s.u[j];
    f.u[n] = s.u[0]; // wrap duplicate at the right edge
  } else {
    f.u = s.u;
  }
  return f;
}

double dirichlet_domain_defect(const EulerianField& f) {
  return std::abs(f.x.back() - 1.0);
}

double position_of_mass_label(const StaggeredState& s, double y_star, double origin) {
  const std::vector<double> widths = cell_widths(s);
  const double total = s.h * static_cast<double>(s.n_cells());
  const double y = std::clamp(y_star, 0.0, total);
  std::size_t i = static_cast<std::size_t>(y / s.h);
  if (i >= s.n_cells()) i = s.n_cells() - 1;
  double x = origin;
  for (std::size_t c = 0; c < i; ++c) x += widths[c];
  const double frac = y / s.h - static_cast<double>(i);
  return x + frac * widths[i];
}

ParticleTrajectory particle_path(const std::vector<StaggeredState>& snapshots, double x0) {
  if (snapshots.empty())
    throw std::invalid_argument("particle_path: no snapshots available");
  if (x0 < 0.0 || x0 > 1.0)
    throw std::invalid_argument("particle_path: x0 outside the domain [0, 1]");

  // Mass label from the initial snapshot's reconstruction.
  const EulerianField f0 = lagrangian_to_eulerian(snapshots.front());
  const std::vector<double> cum = cumulative_mass(f0);
  const auto it = std::upper_bound(f0.x.begin(), f0.x.end(), x0);
  std::size_t j = static_cast<std::size_t>(it - f0.x.begin());
  if (j == 0) j = 1;
  if (j >= f0.x.size()) j = f0.x.size() - 1;
  const double y_star = cum[j - 1] + f0.rho[j - 1] * (x0 - f0.x[j - 1]);

  ParticleTrajectory traj;
  traj.mass_label = y_star;
  traj.times.reserve(snapshots.size());
  traj.positions.reserve(snapshots.size());
  for (const StaggeredState& s : snapshots) {
    traj.times.push_back(s.t);
    traj.positions.push_back(position_of_mass_label(s, y_star));
  }
  return traj;
}

} // namespace vacflow
