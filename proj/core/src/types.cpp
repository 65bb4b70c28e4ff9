#include "vacflow/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace vacflow {

std::string to_string(BoundaryKind bc) {
  switch (bc) {
    case BoundaryKind::dirichlet: return "dirichlet";
    case BoundaryKind::periodic: return "periodic";
    case BoundaryKind::free_left: return "free-left";
    case BoundaryKind::free_right: return "free-right";
    case BoundaryKind::free_both: return "free-both";
  }
  return "dirichlet";
}

BoundaryKind boundary_from_string(const std::string& name) {
  if (name == "dirichlet") return BoundaryKind::dirichlet;
  if (name == "periodic") return BoundaryKind::periodic;
  if (name == "free-left" || name == "free_left") return BoundaryKind::free_left;
  if (name == "free-right" || name == "free_right") return BoundaryKind::free_right;
  if (name == "free-both" || name == "free_both") return BoundaryKind::free_both;
  throw std::invalid_argument("unknown boundary condition: " + name);
}

ValidationReport validate_params(const ModelParams& p) {
  ValidationReport r;
  auto fail = [&r](const std::string& msg) {
    r.ok = false;
    r.violations.push_back(msg);
  };
  if (!(p.alpha > 0.5)) fail("alpha > 1/2 violated");
  if (!(p.gamma >= 1.0)) fail("gamma >= 1 violated");
  if (!(p.gamma > p.alpha / 2.0)) fail("gamma > alpha/2 violated");
  if (!(p.a1 > 0.0)) fail("a1 > 0 violated");
  if (!(p.a2 > 0.0)) fail("a2 > 0 violated");
  if (!(p.eps >= 0.0)) fail("eps >= 0 violated");
  if (p.eps > 0.0 && !(p.theta > 0.0 && p.theta < 0.5))
    fail("theta in (0, 1/2) violated (required when eps > 0)");
  if (!(p.n_reg >= 2)) fail("n_reg >= 2 violated");
  if (!(p.nu > 0.0)) fail("nu > 0 violated");
  if (!(p.c0_floor > 0.0)) fail("c0_floor > 0 violated");
  r.short_time_ok = p.gamma > std::max(1.0, p.alpha);
  return r;
}

void require_valid_params(const ModelParams& p) {
  const ValidationReport r = validate_params(p);
  if (!r.ok) throw std::invalid_argument("invalid model parameters: " + r.violations.front());
}

double pi_fn(double rho, double gamma) {
  if (rho < 0.0) throw std::domain_error("pi_fn: negative density");
  if (gamma == 1.0) return rho > 0.0 ? rho * std::log(rho) : 0.0;
  return std::pow(rho, gamma) / (gamma - 1.0);
}

double specific_entropy(double rho, double gamma) {
  if (rho < 0.0) throw std::domain_error("specific_entropy: negative density");
  if (gamma == 1.0) {
    if (rho == 0.0) throw std::domain_error("specific_entropy diverges at rho = 0 for gamma = 1");
    return std::log(rho);
  }
  return std::pow(rho, gamma - 1.0) / (gamma - 1.0);
}

double mu_eps(double rho, const ModelParams& p) {
  double v = p.a2 * std::pow(rho, p.alpha);
  if (p.eps > 0.0) v += p.eps * std::pow(rho, p.theta);
  return v;
}

double pressure(double rho, const ModelParams& p) {
  return p.a1 * std::pow(rho, p.gamma);
}

double stress_coefficient(double rho, const ModelParams& p) {
  double v = p.a2 * std::pow(rho, 1.0 + p.alpha);
  if (p.eps > 0.0) v += p.eps * std::pow(rho, 1.0 + p.theta);
  return v;
}

double sound_speed(double rho, const ModelParams& p) {
  return std::sqrt(p.a1 * p.gamma * std::pow(rho, p.gamma - 1.0));
}

ExponentWindow exponent_window(double alpha, double gamma, int n) {
  if (n < 2) throw std::invalid_argument("exponent_window: n must be >= 2");
  if (!(alpha > 0.5) || !(gamma >= 1.0))
    throw std::invalid_argument("exponent_window: requires alpha > 1/2 and gamma >= 1");
  const double half = 1.0 - 1.0 / (2.0 * n);
  ExponentWindow w;
  w.beta_minus = std::max(1.0 / (2.0 * alpha), half / gamma);
  w.beta_plus = std::min({1.0, half / alpha, (4.0 - 1.0 / n) / (1.0 + 3.0 * alpha)});
  if (!(w.beta_minus < w.beta_plus)) {
    std::ostringstream os;
    os << "exponent_window: empty admissible window, beta_- = " << w.beta_minus
       << " >= beta_+ = " << w.beta_plus;
    throw std::domain_error(os.str());
  }
  w.sigma_minus = sigma_from_beta(w.beta_minus);
  // beta_+ = 1 corresponds to an unbounded Eulerian exponent.
  w.sigma_plus = w.beta_plus < 1.0 ? sigma_from_beta(w.beta_plus)
                                   : std::numeric_limits<double>::infinity();
  return w;
}

void StaggeredState::check_invariants() const {
  const std::size_t n = n_cells();
  if (n < 1) throw std::invalid_argument("state: empty density array");
  if (!(h > 0.0)) throw std::invalid_argument("state: mass step h must be positive");
  const std::size_t expected_nodes = bc == BoundaryKind::periodic ? n : n + 1;
  if (n_nodes() != expected_nodes)
    throw std::invalid_argument("state: velocity layout does not match boundary condition");
  if (pinned_cell) {
    if (n % 2 == 0 || *pinned_cell != (n - 1) / 2)
      throw std::invalid_argument("state: pinned cell requires odd N with the center cell pinned");
    if (rho[*pinned_cell] != 0.0)
      throw std::invalid_argument("state: pinned cell density must be exactly 0");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (is_pinned(i)) continue;
    if (!(rho[i] > 0.0))
      throw std::invalid_argument("state: non-pinned density must be positive at cell " +
                                  std::to_string(i));
  }
  if (bc == BoundaryKind::dirichlet) {
    if (u.front() != 0.0 || u.back() != 0.0)
      throw std::invalid_argument("state: Dirichlet boundary velocities must be 0");
  } else if (bc == BoundaryKind::free_left) {
    if (u.back() != 0.0)
      throw std::invalid_argument("state: free-left keeps the right boundary velocity 0");
  } else if (bc == BoundaryKind::free_right) {
    if (u.front() != 0.0)
      throw std::invalid_argument("state: free-right keeps the left boundary velocity 0");
  }
}

void EulerianField::check_invariants() const {
  if (x.size() < 2 || rho.size() + 1 != x.size() || u.size() != x.size())
    throw std::invalid_argument("field: layout requires M+1 nodes, M cells, M+1 velocities");
  for (std::size_t j = 1; j < x.size(); ++j)
    if (!(x[j] > x[j - 1]))
      throw std::invalid_argument("field: node positions must be strictly increasing");
  for (double r : rho)
    if (!(r >= 0.0)) throw std::invalid_argument("field: densities must be non-negative");
}

double EulerianField::total_mass() const {
  double m = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) m += rho[i] * (x[i + 1] - x[i]);
  return m;
}

double mean_density(const EulerianField& f) { return f.total_mass() / f.total_length(); }

} // namespace vacflow
