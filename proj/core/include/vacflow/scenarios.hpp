#ifndef VACFLOW_SCENARIOS_HPP
#define VACFLOW_SCENARIOS_HPP

#include <string>
#include <vector>

#include "vacflow/types.hpp"

namespace vacflow {

enum class ScenarioKind { point_vacuum, piece_vacuum, smooth_periodic, smooth_dirichlet, custom };

std::string to_string(ScenarioKind k);
ScenarioKind scenario_kind_from_string(const std::string& name);

struct VelocityInit {
  enum class Kind { zero, sinusoidal } kind = Kind::zero;
  double amplitude = 0.0;
  double frequency = 1.0; ///< full periods across the domain
};

/// Initial-data description. Vacuum profiles carry the Eulerian exponent
/// sigma and envelope constants; the constructors use the midpoint constant
/// (A0+A1)/2 (resp. (B0+B1)/2 on the right flank) and renormalize total mass
/// to one, so the effective amplitude after normalization is reported by the
/// constructors' output rather than by A0/A1 themselves.
struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::smooth_periodic;
  double sigma = 2.0;
  double A0 = 1.0, A1 = 1.0; ///< point-vacuum / left-flank envelope constants
  double B0 = 1.0, B1 = 1.0; ///< right-flank envelope constants (piece vacuum)
  double x0 = 0.5;           ///< vacuum point / left interface
  double x1 = 0.6;           ///< right interface (piece vacuum)
  VelocityInit u0;
  std::size_t n_cells = 101;
  BoundaryKind bc = BoundaryKind::dirichlet;
  bool pinned = false;
  double smooth_amplitude = 0.5;      ///< smooth presets: rho0 = 1 + a sin(2 pi x)
  std::size_t sampling_resolution = 4096; ///< Eulerian constructor grid
  std::string custom_profile_path;    ///< kind == custom: snapshot-format CSV
};

/// rho0(x) = (A0+A1)/2 |x-x0|^sigma at cell midpoints, mass-normalized;
/// u0 per spec.u0 (Dirichlet endpoints forced to 0). Errors when sigma falls
/// outside the admissible (sigma_-, sigma_+) window of exponent_window.
EulerianField ic_point_vacuum(const ScenarioSpec& spec, const ModelParams& p);

/// Power-law flanks around an exact vacuum block [x0, x1]; u0 forced to 0 on
/// the block so that m0 = rho0 u0 vanishes on the vacuum.
EulerianField ic_piece_vacuum(const ScenarioSpec& spec, const ModelParams& p);

/// rho0 = 1 + amplitude sin(2 pi x), u0 per spec.u0.
EulerianField ic_smooth(const ScenarioSpec& spec);

/// Loads kind == custom profiles from a snapshot-format CSV (x,rho,u rows)
/// and mass-normalizes.
EulerianField ic_custom(const ScenarioSpec& spec);

/// Density floor per the regularized construction:
///   rho_eps = rho * (M - f L)/M + f,  f = c0_floor * eps^(1/(2 alpha - 2 theta)),
/// which keeps the total mass, satisfies rho_eps >= f everywhere, and
/// converges to rho in L^1 as eps -> 0. eps = 0 is an identity no-op.
EulerianField regularize_ic(const EulerianField& f, const ModelParams& p);

/// The floor value f above.
double regularization_floor(const ModelParams& p);

/// Equal-mass-coordinate projection onto n_cells (via eulerian_to_lagrangian).
/// When pinned is requested: n_cells must be odd, the minimum-density cell of
/// the projection must be the center cell, and the input must actually carry
/// a (near-)vacuum; the center density is then zeroed.
StaggeredState project_to_grid(const EulerianField& f, std::size_t n_cells,
                               BoundaryKind bc, bool pinned_request);

/// Non-fatal admissibility notes (e.g. nonzero u0 next to vacuum, where the
/// higher compatibility conditions are unverified).
std::vector<std::string> scenario_warnings(const ScenarioSpec& spec, const ModelParams& p);

/// Dispatch on spec.kind, regularize when p.eps > 0, project to the grid.
StaggeredState build_initial_state(const ScenarioSpec& spec, const ModelParams& p);
EulerianField build_initial_field(const ScenarioSpec& spec, const ModelParams& p);

/// Named presets addressable from the CLI.
std::vector<std::string> preset_names();
ScenarioSpec preset_scenario(const std::string& name);

} // namespace vacflow

#endif
