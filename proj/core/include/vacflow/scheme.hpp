#ifndef VACFLOW_SCHEME_HPP
#define VACFLOW_SCHEME_HPP

#include <cstddef>
#include <vector>

#include "vacflow/types.hpp"

namespace vacflow {

/// Thrown by rhs/step when a non-pinned density is non-positive (or falls
/// below the integrator's positivity floor). Carries the offending cell.
struct PositivityError : std::runtime_error {
  PositivityError(std::size_t cell_, double value_, double time_);
  std::size_t cell;
  double value;
  double time;
};

/// Time derivative of a StaggeredState. Layout mirrors the state:
/// drho per cell, du per node. du is identically 0 at Dirichlet boundary
/// nodes and drho is identically 0 at the pinned cell.
struct StateDerivative {
  std::vector<double> drho;
  std::vector<double> du;
};

/// Ghost-resolved views of the density and velocity arrays, covering the
/// stencil of rhs. Index conventions: cells i in [-1, N], nodes j in [-1, N+1]
/// (periodic indices wrap instead).
///
/// dirichlet:  rho(-1) = rho(0), rho(N) = rho(N-1) (mirror); ghost u = 0.
/// periodic:   both arrays wrap.
/// free end:   ghost density 0, so pressure and viscous flux vanish there
///             (zero-stress closure); ghost u = 0 (never enters a flux).
class GhostView {
 public:
  explicit GhostView(const StaggeredState& s) : s_(s) {}

  double rho(long i) const;
  double u(long j) const;

 private:
  const StaggeredState& s_;
};

/// Equivalent to constructing a GhostView; named form of the boundary rule.
inline GhostView apply_bc(const StaggeredState& s) { return GhostView(s); }

/// Scratch buffers for rhs so repeated evaluations do not allocate.
struct SchemeWorkspace {
  std::vector<double> stress; // per-cell total stress K(rho) du/h - p(rho)
};

/// Right-hand side of the semi-discrete staggered system:
///   d rho_i/dt = -rho_i^2 (u_{i+1} - u_i)/h
///   d u_j/dt   = (G_j - G_{j-1})/h,  G_i = K(rho_i)(u_{i+1}-u_i)/h - p(rho_i)
/// with K(rho) = a2 rho^(1+alpha) + eps rho^(1+theta) and p(rho) = a1 rho^gamma.
/// Boundary nodes follow the GhostView closure; Dirichlet node derivatives and
/// the pinned-cell density derivative are identically zero.
///
/// Pure function; throws PositivityError if any non-pinned density is <= 0.
StateDerivative rhs(const StaggeredState& s, const ModelParams& p);
void rhs(const StaggeredState& s, const ModelParams& p, StateDerivative& out,
         SchemeWorkspace& ws);

/// Residuals of the discrete momentum identity for point-vacuum states with
/// pinned cell k: for every cell c,
///   K(rho_c)(u_{c+1}-u_c)/h - [ S_c + p(rho_c) ],
/// where S_c telescopes du/dt * h from the pinned cell outward
/// (S_c = sum_{j=k+1..c} du_j h for c > k, S_c = -sum_{j=c+1..k} du_j h for
/// c < k, and the residual at the pinned cell itself is 0). For the exact
/// derivative d = rhs(s) every residual vanishes up to rounding.
///
/// Throws std::invalid_argument when no cell is pinned.
std::vector<double> momentum_identity_residual(const StaggeredState& s,
                                               const StateDerivative& d,
                                               const ModelParams& p);

} // namespace vacflow

#endif
