#include "vacflow/scheme.hpp"

#include <cmath>
#include <sstream>

namespace vacflow {

namespace {

std::string positivity_message(std::size_t cell, double value, double time) {
  std::ostringstream os;
  os << "non-positive density " << value << " at cell " << cell << ", t = " << time;
  return os.str();
}

// x^m for small non-negative integer m, by squaring.
inline double ipow(double x, int m) {
  double r = 1.0;
  double b = x;
  while (m > 0) {
    if (m & 1) r *= b;
    b *= b;
    m >>= 1;
  }
  return r;
}

// Exponent evaluator specialized for the quarter-integer exponents that
// dominate the flagship parameter sets (gamma = 2, 1+alpha = 2, 1+theta = 5/4).
// Generic exponents fall back to std::pow. x >= 0 is assumed.
struct PowSpec {
  enum class Kind { integer, half, quarter, general } kind = Kind::general;
  int m = 0;
  double p = 1.0;

  static PowSpec make(double p) {
    PowSpec s;
    s.p = p;
    for (int denom : {1, 2, 4}) {
      const double scaled = p * denom;
      const double rounded = std::nearbyint(scaled);
      if (scaled == rounded && rounded >= 0.0 && rounded <= 64.0) {
        s.m = static_cast<int>(rounded);
        s.kind = denom == 1 ? Kind::integer : (denom == 2 ? Kind::half : Kind::quarter);
        return s;
      }
    }
    return s;
  }

  double operator()(double x) const {
    switch (kind) {
      case Kind::integer: return ipow(x, m);
      case Kind::half: return ipow(std::sqrt(x), m);
      case Kind::quarter: return ipow(std::sqrt(std::sqrt(x)), m);
      case Kind::general: break;
    }
    return std::pow(x, p);
  }
};

} // namespace

PositivityError::PositivityError(std::size_t cell_, double value_, double time_)
    : std::runtime_error(positivity_message(cell_, value_, time_)),
      cell(cell_),
      value(value_),
      time(time_) {}

double GhostView::rho(long i) const {
  const long n = static_cast<long>(s_.n_cells());
  if (s_.bc == BoundaryKind::periodic) return s_.rho[static_cast<std::size_t>(((i % n) + n) % n)];
  if (i < 0) {
    const bool free_end = s_.bc == BoundaryKind::free_left || s_.bc == BoundaryKind::free_both;
    return free_end ? 0.0 : s_.rho.front(); // mirror at a wall
  }
  if (i >= n) {
    const bool free_end = s_.bc == BoundaryKind::free_right || s_.bc == BoundaryKind::free_both;
    return free_end ? 0.0 : s_.rho.back();
  }
  return s_.rho[static_cast<std::size_t>(i)];
}

double GhostView::u(long j) const {
  const long n = static_cast<long>(s_.n_nodes());
  if (s_.bc == BoundaryKind::periodic) return s_.u[static_cast<std::size_t>(((j % n) + n) % n)];
  if (j < 0 || j >= n) return 0.0;
  return s_.u[static_cast<std::size_t>(j)];
}

void rhs(const StaggeredState& s, const ModelParams& p, StateDerivative& out,
         SchemeWorkspace& ws) {
  const std::size_t n = s.n_cells();
  const double inv_h = 1.0 / s.h;
  const bool periodic = s.bc == BoundaryKind::periodic;

  for (std::size_t i = 0; i < n; ++i) {
    if (!(s.rho[i] > 0.0) && !s.is_pinned(i)) throw PositivityError(i, s.rho[i], s.t);
  }

  out.drho.resize(n);
  out.du.resize(s.n_nodes());
  ws.stress.resize(n);

  const PowSpec pow_gamma = PowSpec::make(p.gamma);
  const PowSpec pow_kphys = PowSpec::make(1.0 + p.alpha);
  const PowSpec pow_kreg = PowSpec::make(1.0 + p.theta);
  const bool regularized = p.eps > 0.0;

  for (std::size_t i = 0; i < n; ++i) {
    const double rho_i = s.rho[i];
    const double du_cell = (periodic ? s.u[(i + 1) % n] : s.u[i + 1]) - s.u[i];
    const double grad = du_cell * inv_h;
    double k_coef = p.a2 * pow_kphys(rho_i);
    if (regularized) k_coef += p.eps * pow_kreg(rho_i);
    ws.stress[i] = k_coef * grad - p.a1 * pow_gamma(rho_i);
    out.drho[i] = -rho_i * rho_i * grad;
  }
  if (s.pinned_cell) out.drho[*s.pinned_cell] = 0.0;

  if (periodic) {
    out.du[0] = (ws.stress[0] - ws.stress[n - 1]) * inv_h;
    for (std::size_t j = 1; j < n; ++j)
      out.du[j] = (ws.stress[j] - ws.stress[j - 1]) * inv_h;
    return;
  }

  for (std::size_t j = 1; j < n; ++j)
    out.du[j] = (ws.stress[j] - ws.stress[j - 1]) * inv_h;

  // Ends: Dirichlet nodes are constrained (u = 0, so du = 0); free ends see a
  // zero-stress ghost cell.
  const bool left_free = s.bc == BoundaryKind::free_left || s.bc == BoundaryKind::free_both;
  const bool right_free = s.bc == BoundaryKind::free_right || s.bc == BoundaryKind::free_both;
  out.du[0] = left_free ? ws.stress[0] * inv_h : 0.0;
  out.du[n] = right_free ? -ws.stress[n - 1] * inv_h : 0.0;
}

StateDerivative rhs(const StaggeredState& s, const ModelParams& p) {
  StateDerivative d;
  SchemeWorkspace ws;
  rhs(s, p, d, ws);
  return d;
}

std::vector<double> momentum_identity_residual(const StaggeredState& s,
                                               const StateDerivative& d,
                                               const ModelParams& p) {
  if (!s.pinned_cell)
    throw std::invalid_argument("momentum_identity_residual: requires a pinned point-vacuum cell");
  const std::size_t n = s.n_cells();
  const std::size_t k = *s.pinned_cell;
  const bool periodic = s.bc == BoundaryKind::periodic;
  const auto face_velocity = [&](std::size_t j) {
    return periodic ? s.u[j % n] : s.u[j];
  };

  std::vector<double> res(n, 0.0);
  double partial = 0.0;
  for (std::size_t c = k + 1; c < n; ++c) {
    partial += d.du[c] * s.h;
    const double lhs =
        stress_coefficient(s.rho[c], p) * (face_velocity(c + 1) - s.u[c]) / s.h;
    res[c] = lhs - (partial + pressure(s.rho[c], p));
  }
  partial = 0.0;
  for (std::size_t c = k; c-- > 0;) {
    partial -= d.du[c + 1] * s.h;
    const double lhs =
        stress_coefficient(s.rho[c], p) * (face_velocity(c + 1) - s.u[c]) / s.h;
    res[c] = lhs - (partial + pressure(s.rho[c], p));
  }
  return res;
}

} // namespace vacflow
