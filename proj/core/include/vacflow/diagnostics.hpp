#ifndef VACFLOW_DIAGNOSTICS_HPP
#define VACFLOW_DIAGNOSTICS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "vacflow/types.hpp"

namespace vacflow {

/// One sampled row of every tracked functional.
///
/// `energy` uses the specific-entropy form sum(1/2 u^2 + a1*pi(rho)/rho)h,
/// which is the quantity the discrete balance dE/dt = -D holds for;
/// `energy_pi` records the sum(1/2 u^2 + a1*pi(rho))h variant alongside it.
struct DiagnosticsRecord {
  double t = 0.0;
  double mass = 0.0;            ///< Eulerian sum rho * dx (1 for normalized data)
  double volume = 0.0;          ///< Lagrangian sum h / rho over non-pinned cells
  double energy = 0.0;
  double energy_pi = 0.0;
  double dissipation_cum = 0.0; ///< trapezoid of sum K(rho)((du)/h)^2 h at sample cadence
  double bd_entropy = 0.0;      ///< sum (u^2 + ((rho^a)_y)^2 + eps^2((rho^th)_y)^2 + a1 pi(rho)/rho) dy
  double min_rho = 0.0;         ///< over non-pinned cells
  double max_rho = 0.0;
  double ux_linf = 0.0;         ///< max over cells of |rho (du)/h|  (Eulerian u_x = rho u_y)
  double ux_linf_cum = 0.0;
  double l2_dist = 0.0;         ///< ||(rho - rho_bar0, u - u_s)||_{L^2(Omega)}
  double g_val = 0.0;           ///< ||rho^b - mean(rho^b)||^4_{L^4(Omega)}
  double pinned_cell_width = 0.0;
};

struct DiagnosticsConfig {
  std::optional<double> b_override; ///< exponent of g(t); default from params
};

/// Smallest admissible g-functional exponent, max{alpha+gamma-1, 2alpha+1, 1}.
double default_g_exponent(const ModelParams& p);

// --- pointwise functionals on states ---

/// sum over nodes of 1/2 u^2 h  +  sum over cells of a1 * specific_entropy * h.
double discrete_energy(const StaggeredState& s, const ModelParams& p);

/// Same with pi(rho) in place of pi(rho)/rho.
double discrete_energy_pi(const StaggeredState& s, const ModelParams& p);

/// D = sum over cells of K(rho) ((u_r - u_l)/h)^2 h.
double discrete_dissipation(const StaggeredState& s, const ModelParams& p);

/// sum h / rho over non-pinned cells.
double lagrangian_volume(const StaggeredState& s);

/// Discrete E_eps: u^2 summed over nodes, gradient terms ((rho^alpha)_y)^2 and
/// eps^2 ((rho^theta)_y)^2 from adjacent-cell differences at velocity nodes
/// (one-sided at walls, weight h/2 there), entropy term a1 pi(rho)/rho over cells.
double bd_entropy(const StaggeredState& s, const ModelParams& p);

/// Per-cell Eulerian velocity gradient u_x = rho * (u_r - u_l)/h.
std::vector<double> velocity_gradient_field(const StaggeredState& s);

/// max |u_x| over cells.
double ux_linf(const StaggeredState& s);

/// g = integral over the reconstructed field of (rho^b - mean(rho^b))^4 dx,
/// normalized by the domain length.
double g_functional(const EulerianField& f, double b);
double g_functional(const StaggeredState& s, const ModelParams& p,
                    std::optional<double> b_override = std::nullopt);

/// Stateful sampler: carries the cumulative integrals (dissipation, ux_linf)
/// between samples and the equilibrium target (rho_bar0, u_s) fixed from the
/// initial state. Samples must be fed in increasing time order.
class DiagnosticsAccumulator {
 public:
  DiagnosticsAccumulator(const StaggeredState& s0, const ModelParams& p,
                         DiagnosticsConfig cfg = {});

  DiagnosticsRecord sample(const StaggeredState& s);

  double rho_bar0() const { return rho_bar0_; }
  double u_s() const { return u_s_; }

 private:
  ModelParams params_;
  DiagnosticsConfig cfg_;
  double rho_bar0_ = 1.0;
  double u_s_ = 0.0;
  bool first_ = true;
  double prev_t_ = 0.0;
  double prev_diss_rate_ = 0.0;
  double prev_ux_ = 0.0;
  double diss_cum_ = 0.0;
  double ux_cum_ = 0.0;
};

// --- series-level operations ---

/// Earliest sample time T such that min_rho >= rho_thresh for every sample in
/// [T, T + hold]; requires the series to actually cover T + hold.
std::optional<double> vacuum_vanish_time(const std::vector<DiagnosticsRecord>& series,
                                         double rho_thresh, double hold);

struct BlowupIndicator {
  double integral = 0.0; ///< trapezoid of ux_linf over [t1, t1+eta]
  double peak = 0.0;
  double peak_time = 0.0;
};

/// Integral of ||u_x||_inf over [t1, t1+eta] with linear interpolation at the
/// window endpoints. Throws std::invalid_argument if the series does not
/// cover the window.
BlowupIndicator blowup_indicator(const std::vector<DiagnosticsRecord>& series,
                                 double t1, double eta);

/// Least-squares exponential fit l2_dist ~ c0 exp(-mu0 (t - t_start)).
struct DecayFit {
  double c0 = 0.0;
  double mu0 = 0.0;
  double r2 = 0.0;
  double t_start = 0.0;
  int excluded = 0;        ///< non-positive samples dropped from the fit
  bool degenerate = false; ///< zero-variance regressor (constant input)
};

/// Fit on (t, log l2_dist) for t >= t_start. Throws std::invalid_argument
/// with fewer than 5 usable samples.
DecayFit decay_fit(const std::vector<DiagnosticsRecord>& series, double t_start);
DecayFit decay_fit_xy(const std::vector<double>& t, const std::vector<double>& y,
                      double t_start);

/// Envelope constants of rho against |x - X0|^sigma over |x - X0| <= window
/// (cell centers; the cell containing X0 and zero-density cells excluded).
struct EnvelopeFit {
  double a_minus = 0.0;
  double a_plus = 0.0;
  double sigma_used = 0.0;
  double max_violation = 0.0; ///< worst relative deviation from the single-constant fit
};

EnvelopeFit envelope_fit(const EulerianField& f, double x0, double sigma, double window);

} // namespace vacflow

#endif
