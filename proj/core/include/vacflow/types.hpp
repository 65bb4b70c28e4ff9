#ifndef VACFLOW_TYPES_HPP
#define VACFLOW_TYPES_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vacflow {

/// Boundary handling for the staggered Lagrangian grid. Free boundaries are
/// vacuum interfaces: the ghost cell beyond a free end carries zero density,
/// which makes pressure and viscous flux vanish there (zero-stress closure).
enum class BoundaryKind { dirichlet, periodic, free_left, free_right, free_both };

std::string to_string(BoundaryKind bc);
BoundaryKind boundary_from_string(const std::string& name);

/// Physical and regularization parameters of the model
///   p(rho) = a1 * rho^gamma,   mu(rho) = a2 * rho^alpha + eps * rho^theta.
///
/// The eps term is the viscosity regularizer; eps = 0 runs the unregularized
/// scheme, which then relies on the integrator's positivity guard instead of
/// the density floor. `nu` is a moment exponent used only by diagnostics-side
/// admissibility reporting, never by the solver.
struct ModelParams {
  double alpha = 1.0;    ///< viscosity exponent, must exceed 1/2
  double gamma = 2.0;    ///< adiabatic exponent, >= 1 and > alpha/2
  double a1 = 1.0;       ///< pressure coefficient (> 0)
  double a2 = 1.0;       ///< viscosity coefficient (> 0)
  double eps = 0.0;      ///< regularization strength (>= 0)
  double theta = 0.25;   ///< regularization exponent, in (0, 1/2) when eps > 0
  int n_reg = 2;         ///< regularity integer (>= 2), enters the exponent window
  double nu = 1.0;       ///< moment exponent (> 0), diagnostic only
  double c0_floor = 1.0; ///< coefficient of the regularized initial-data floor
};

/// Outcome of validate_params. `violations` lists every failed constraint by
/// the inequality it breaks. `short_time_ok` flags (without rejecting) whether
/// the stricter short-time condition gamma > max{1, alpha} holds.
struct ValidationReport {
  bool ok = true;
  bool short_time_ok = true;
  std::vector<std::string> violations;
};

ValidationReport validate_params(const ModelParams& p);

/// Throws std::invalid_argument naming the first violated inequality.
void require_valid_params(const ModelParams& p);

/// pi(rho): rho*log(rho) for gamma = 1 (0 at rho = 0 by continuity),
/// rho^gamma/(gamma-1) for gamma > 1.
double pi_fn(double rho, double gamma);

/// Specific entropy e(rho) = pi(rho)/rho: log(rho) for gamma = 1,
/// rho^(gamma-1)/(gamma-1) for gamma > 1 (0 at rho = 0 by continuity).
/// Throws std::domain_error at rho = 0 with gamma = 1.
double specific_entropy(double rho, double gamma);

/// Regularized viscosity mu_eps(rho) = a2*rho^alpha + eps*rho^theta.
double mu_eps(double rho, const ModelParams& p);

/// Pressure p(rho) = a1*rho^gamma.
double pressure(double rho, const ModelParams& p);

/// Lagrangian stress coefficient K(rho) = rho*mu_eps(rho)
/// = a2*rho^(1+alpha) + eps*rho^(1+theta).
double stress_coefficient(double rho, const ModelParams& p);

/// Sound speed c(rho) = sqrt(a1*gamma*rho^(gamma-1)).
double sound_speed(double rho, const ModelParams& p);

/// Admissible vacuum-profile exponent ranges: beta (Lagrangian) and
/// sigma (Eulerian), related by sigma = beta/(1-beta).
struct ExponentWindow {
  double beta_minus = 0.0;
  double beta_plus = 0.0;
  double sigma_minus = 0.0;
  double sigma_plus = 0.0;
};

/// beta_- = max{1/(2 alpha), (1/gamma)(1 - 1/(2n))},
/// beta_+ = min{1, (1/alpha)(1 - 1/(2n)), (1/(1+3 alpha))(4 - 1/n)}.
/// Throws std::domain_error when the window is empty (beta_- >= beta_+).
ExponentWindow exponent_window(double alpha, double gamma, int n);

inline double beta_from_sigma(double sigma) { return sigma / (1.0 + sigma); }
inline double sigma_from_beta(double beta) { return beta / (1.0 - beta); }

/// Staggered Lagrangian state in mass coordinates. Cell i (i = 0..N-1)
/// carries density rho[i]; node j carries velocity u[j]. Nodes run 0..N for
/// dirichlet/free boundaries and 0..N-1 for the periodic wrap; cell i sits
/// between nodes i and i+1 (mod N when periodic). Each cell carries mass h.
struct StaggeredState {
  double h = 0.0; ///< mass-coordinate step (total mass / N)
  double t = 0.0;
  std::vector<double> rho;
  std::vector<double> u;
  BoundaryKind bc = BoundaryKind::dirichlet;
  std::optional<std::size_t> pinned_cell;

  std::size_t n_cells() const { return rho.size(); }
  std::size_t n_nodes() const { return u.size(); }
  bool is_pinned(std::size_t cell) const {
    return pinned_cell && *pinned_cell == cell;
  }

  /// Throws std::invalid_argument if any structural invariant fails:
  /// layout sizes, non-pinned positivity, Dirichlet endpoint velocities,
  /// pinned cell centered with N odd.
  void check_invariants() const;
};

/// Reconstructed field in physical coordinates: strictly increasing node
/// positions x (M+1 of them), cell densities rho (M), node velocities u (M+1).
struct EulerianField {
  std::vector<double> x;
  std::vector<double> rho;
  std::vector<double> u;
  double t = 0.0;

  std::size_t n_cells() const { return rho.size(); }
  void check_invariants() const;

  double total_length() const { return x.back() - x.front(); }
  double total_mass() const;
};

/// Uniform-weight mean of rho over the field, total mass / total length.
double mean_density(const EulerianField& f);

} // namespace vacflow

#endif
