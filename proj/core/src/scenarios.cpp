#include "vacflow/scenarios.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include "vacflow/coords.hpp"

namespace vacflow {

std::string to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::point_vacuum: return "point_vacuum";
    case ScenarioKind::piece_vacuum: return "piece_vacuum";
    case ScenarioKind::smooth_periodic: return "smooth_periodic";
    case ScenarioKind::smooth_dirichlet: return "smooth_dirichlet";
    case ScenarioKind::custom: return "custom";
  }
  return "smooth_periodic";
}

ScenarioKind scenario_kind_from_string(const std::string& name) {
  if (name == "point_vacuum") return ScenarioKind::point_vacuum;
  if (name == "piece_vacuum") return ScenarioKind::piece_vacuum;
  if (name == "smooth_periodic") return ScenarioKind::smooth_periodic;
  if (name == "smooth_dirichlet") return ScenarioKind::smooth_dirichlet;
  if (name == "custom") return ScenarioKind::custom;
  throw std::invalid_argument("unknown scenario kind: " + name);
}

namespace {

double u0_at(const VelocityInit& u0, double x) {
  if (u0.kind == VelocityInit::Kind::zero) return 0.0;
  return u0.amplitude * std::sin(2.0 * std::numbers::pi * u0.frequency * x);
}

/// Sample a density profile at midpoints of a uniform grid on [0,1],
/// renormalize total mass to one, attach node velocities.
EulerianField sample_profile(const ScenarioSpec& spec,
                             const std::function<double(double)>& rho0) {
  const std::size_t m = spec.sampling_resolution;
  if (m < 8) throw std::invalid_argument("scenario: sampling_resolution too small");
  EulerianField f;
  f.t = 0.0;
  f.x.resize(m + 1);
  f.rho.resize(m);
  f.u.resize(m + 1);
  const double dx = 1.0 / static_cast<double>(m);
  for (std::size_t j = 0; j <= m; ++j) {
    f.x[j] = static_cast<double>(j) * dx;
    f.u[j] = u0_at(spec.u0, f.x[j]);
  }
  f.x.back() = 1.0;
  double mass = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    f.rho[i] = rho0((static_cast<double>(i) + 0.5) * dx);
    if (f.rho[i] < 0.0) throw std::invalid_argument("scenario: negative density profile");
    mass += f.rho[i] * dx;
  }
  if (!(mass > 0.0)) throw std::invalid_argument("scenario: profile carries no mass");
  for (double& r : f.rho) r /= mass;
  if (spec.bc != BoundaryKind::periodic) {
    if (spec.bc != BoundaryKind::free_left) f.u.front() = 0.0;
    if (spec.bc != BoundaryKind::free_right) f.u.back() = 0.0;
  } else {
    f.u.back() = f.u.front();
  }
  return f;
}

void check_sigma_window(double sigma, const ModelParams& p) {
  const ExponentWindow w = exponent_window(p.alpha, p.gamma, p.n_reg);
  if (!(sigma > w.sigma_minus && sigma < w.sigma_plus)) {
    std::ostringstream os;
    os << "scenario: sigma = " << sigma << " outside the admissible window ("
       << w.sigma_minus << ", " << w.sigma_plus << ")";
    throw std::invalid_argument(os.str());
  }
}

} // namespace

EulerianField ic_point_vacuum(const ScenarioSpec& spec, const ModelParams& p) {
  require_valid_params(p);
  check_sigma_window(spec.sigma, p);
  if (!(spec.x0 > 0.0 && spec.x0 < 1.0))
    throw std::invalid_argument("scenario: x0 must lie in (0, 1)");
  if (!(spec.A0 > 0.0 && spec.A0 <= spec.A1))
    throw std::invalid_argument("scenario: need 0 < A0 <= A1");
  const double amp = 0.5 * (spec.A0 + spec.A1);
  return sample_profile(spec, [&](double x) {
    return amp * std::pow(std::abs(x - spec.x0), spec.sigma);
  });
}

EulerianField ic_piece_vacuum(const ScenarioSpec& spec, const ModelParams& p) {
  require_valid_params(p);
  check_sigma_window(spec.sigma, p);
  if (!(spec.x0 > 0.0 && spec.x1 < 1.0 && spec.x0 < spec.x1))
    throw std::invalid_argument("scenario: need 0 < x0 < x1 < 1");
  if (!(spec.A0 > 0.0 && spec.A0 <= spec.A1) || !(spec.B0 > 0.0 && spec.B0 <= spec.B1))
    throw std::invalid_argument("scenario: need 0 < A0 <= A1 and 0 < B0 <= B1");
  const double amp_l = 0.5 * (spec.A0 + spec.A1);
  const double amp_r = 0.5 * (spec.B0 + spec.B1);
  ScenarioSpec clipped = spec;
  EulerianField f = sample_profile(clipped, [&](double x) {
    if (x < spec.x0) return amp_l * std::pow(spec.x0 - x, spec.sigma);
    if (x > spec.x1) return amp_r * std::pow(x - spec.x1, spec.sigma);
    return 0.0;
  });
  // m0 = rho0 u0 must vanish on the vacuum block; zero u there outright.
  for (std::size_t j = 0; j < f.x.size(); ++j)
    if (f.x[j] >= spec.x0 && f.x[j] <= spec.x1) f.u[j] = 0.0;
  return f;
}

EulerianField ic_smooth(const ScenarioSpec& spec) {
  if (!(std::abs(spec.smooth_amplitude) < 1.0))
    throw std::invalid_argument("scenario: |smooth_amplitude| must stay below 1");
  return sample_profile(spec, [&](double x) {
    return 1.0 + spec.smooth_amplitude * std::sin(2.0 * std::numbers::pi * x);
  });
}

EulerianField ic_custom(const ScenarioSpec& spec) {
  std::ifstream in(spec.custom_profile_path);
  if (!in) throw std::invalid_argument("scenario: cannot open " + spec.custom_profile_path);
  EulerianField f;
  f.t = 0.0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'x') continue; // header
    std::istringstream row(line);
    double x, rho, u;
    char c1, c2;
    if (!(row >> x >> c1 >> rho >> c2 >> u))
      throw std::invalid_argument("scenario: malformed profile row: " + line);
    f.x.push_back(x);
    f.rho.push_back(rho);
    f.u.push_back(u);
  }
  if (f.x.size() < 2) throw std::invalid_argument("scenario: profile needs at least 2 rows");
  f.rho.pop_back(); // last row carries the trailing node only
  f.check_invariants();
  const double mass = f.total_mass();
  if (!(mass > 0.0)) throw std::invalid_argument("scenario: profile carries no mass");
  for (double& r : f.rho) r /= mass;
  return f;
}

double regularization_floor(const ModelParams& p) {
  if (p.eps <= 0.0) return 0.0;
  return p.c0_floor * std::pow(p.eps, 1.0 / (2.0 * p.alpha - 2.0 * p.theta));
}

EulerianField regularize_ic(const EulerianField& f, const ModelParams& p) {
  if (p.eps == 0.0) return f; // identity no-op
  if (!(p.eps > 0.0) || !(p.theta > 0.0 && p.theta < 0.5))
    throw std::invalid_argument("regularize_ic: requires eps > 0 and theta in (0, 1/2)");
  const double floor = regularization_floor(p);
  const double mass = f.total_mass();
  const double length = f.total_length();
  const double scale = (mass - floor * length) / mass;
  if (!(scale > 0.0))
    throw std::invalid_argument("regularize_ic: floor exceeds the mean density");
  EulerianField out = f;
  for (double& r : out.rho) r = r * scale + floor;
  return out;
}

StaggeredState project_to_grid(const EulerianField& f, std::size_t n_cells,
                               BoundaryKind bc, bool pinned_request) {
  if (n_cells < 3) throw std::invalid_argument("project_to_grid: need at least 3 cells");
  StaggeredState s = eulerian_to_lagrangian(f, n_cells, bc);
  if (!pinned_request) return s;

  if (n_cells % 2 == 0)
    throw std::invalid_argument("project_to_grid: pinning requires odd N");
  double min_rho = s.rho[0];
  std::size_t argmin = 0;
  for (std::size_t i = 1; i < n_cells; ++i)
    if (s.rho[i] < min_rho) {
      min_rho = s.rho[i];
      argmin = i;
    }
  double mean = 0.0;
  for (double r : s.rho) mean += r;
  mean /= static_cast<double>(n_cells);
  if (min_rho > 1e-3 * mean)
    throw std::invalid_argument("project_to_grid: pinning requested on vacuum-free data");
  const std::size_t center = (n_cells - 1) / 2;
  if (argmin != center)
    throw std::invalid_argument("project_to_grid: the vacuum point does not map to the "
                                "center cell; shift x0 or the grid");
  s.rho[center] = 0.0;
  s.pinned_cell = center;
  return s;
}

std::vector<std::string> scenario_warnings(const ScenarioSpec& spec, const ModelParams& p) {
  std::vector<std::string> w;
  const bool has_vacuum =
      spec.kind == ScenarioKind::point_vacuum || spec.kind == ScenarioKind::piece_vacuum;
  if (has_vacuum && spec.u0.kind != VelocityInit::Kind::zero)
    w.push_back("nonzero u0 next to vacuum: higher compatibility conditions unverified");
  if (has_vacuum && !validate_params(p).short_time_ok)
    w.push_back("short-time condition gamma > max{1, alpha} not satisfied; "
                "vacuum-persistence structure is not guaranteed");
  if (spec.pinned && p.eps > 0.0)
    w.push_back("pinned cell combined with eps-regularized viscosity: the regularized "
                "construction assumes no pinning");
  return w;
}

EulerianField build_initial_field(const ScenarioSpec& spec, const ModelParams& p) {
  EulerianField f;
  switch (spec.kind) {
    case ScenarioKind::point_vacuum: f = ic_point_vacuum(spec, p); break;
    case ScenarioKind::piece_vacuum: f = ic_piece_vacuum(spec, p); break;
    case ScenarioKind::smooth_periodic:
    case ScenarioKind::smooth_dirichlet: f = ic_smooth(spec); break;
    case ScenarioKind::custom: f = ic_custom(spec); break;
  }
  if (p.eps > 0.0) f = regularize_ic(f, p);
  return f;
}

StaggeredState build_initial_state(const ScenarioSpec& spec, const ModelParams& p) {
  if (spec.pinned && p.gamma == 1.0)
    throw std::invalid_argument("scenario: gamma = 1 with a pinned vacuum cell is not "
                                "admissible (specific entropy diverges)");
  return project_to_grid(build_initial_field(spec, p), spec.n_cells, spec.bc, spec.pinned);
}

std::vector<std::string> preset_names() {
  return {"shallow-water-point-vacuum", "shallow-water-piece-vacuum", "smooth-periodic",
          "smooth-dirichlet"};
}

ScenarioSpec preset_scenario(const std::string& name) {
  ScenarioSpec s;
  if (name == "shallow-water-point-vacuum") {
    s.kind = ScenarioKind::point_vacuum;
    s.sigma = 2.0;
    s.x0 = 0.5;
    s.A0 = s.A1 = 1.0;
    s.n_cells = 201;
    s.bc = BoundaryKind::dirichlet;
    return s;
  }
  if (name == "shallow-water-piece-vacuum") {
    s.kind = ScenarioKind::piece_vacuum;
    s.sigma = 2.0;
    s.x0 = 0.4;
    s.x1 = 0.6;
    s.A0 = s.A1 = s.B0 = s.B1 = 1.0;
    s.n_cells = 201;
    s.bc = BoundaryKind::dirichlet;
    return s;
  }
  if (name == "smooth-periodic") {
    s.kind = ScenarioKind::smooth_periodic;
    s.n_cells = 101;
    s.bc = BoundaryKind::periodic;
    return s;
  }
  if (name == "smooth-dirichlet") {
    s.kind = ScenarioKind::smooth_dirichlet;
    s.n_cells = 101;
    s.bc = BoundaryKind::dirichlet;
    return s;
  }
  throw std::invalid_argument("unknown scenario preset: " + name);
}

} // namespace vacflow
