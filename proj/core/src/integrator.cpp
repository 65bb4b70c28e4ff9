#include "vacflow/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vacflow {

std::string to_string(TimeMethod m) {
  switch (m) {
    case TimeMethod::rk4: return "rk4";
    case TimeMethod::rk2: return "rk2";
    case TimeMethod::euler: return "euler";
  }
  return "rk4";
}

TimeMethod time_method_from_string(const std::string& name) {
  if (name == "rk4") return TimeMethod::rk4;
  if (name == "rk2") return TimeMethod::rk2;
  if (name == "euler") return TimeMethod::euler;
  throw std::invalid_argument("unknown time method: " + name);
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::completed: return "completed";
    case Termination::positivity_failure: return "positivity_failure";
    case Termination::dt_underflow: return "dt_underflow";
  }
  return "completed";
}

double stable_dt(const StaggeredState& s, const ModelParams& p,
                 const IntegratorConfig& cfg) {
  double k_max = 0.0;
  double c_max = 0.0;
  double rho_max = 0.0;
  for (double rho : s.rho) {
    k_max = std::max(k_max, stress_coefficient(rho, p));
    c_max = std::max(c_max, sound_speed(rho, p));
    rho_max = std::max(rho_max, rho);
  }
  const double inf = std::numeric_limits<double>::infinity();
  const double diffusive = k_max > 0.0 ? s.h * s.h / (2.0 * k_max) : inf;
  constexpr double tiny = 1e-300;
  const double acoustic = s.h / (c_max * rho_max + tiny);
  const double dt = cfg.cfl_safety * std::min({diffusive, acoustic, cfg.dt_max});
  return std::clamp(dt, cfg.dt_min, cfg.dt_max);
}

namespace {

void enforce_constraints(StaggeredState& s) {
  switch (s.bc) {
    case BoundaryKind::dirichlet:
      s.u.front() = 0.0;
      s.u.back() = 0.0;
      break;
    case BoundaryKind::free_left:
      s.u.back() = 0.0;
      break;
    case BoundaryKind::free_right:
      s.u.front() = 0.0;
      break;
    default:
      break;
  }
  if (s.pinned_cell) s.rho[*s.pinned_cell] = 0.0;
}

void check_positivity(const StaggeredState& s, double floor) {
  for (std::size_t i = 0; i < s.n_cells(); ++i) {
    if (s.is_pinned(i)) continue;
    if (!(s.rho[i] > floor)) throw PositivityError(i, s.rho[i], s.t);
  }
}

// Stage and derivative buffers reused across steps.
struct Stepper {
  StateDerivative k1, k2, k3, k4;
  SchemeWorkspace ws;
  StaggeredState stage;

  static void blend(StaggeredState& out, const StaggeredState& base, double c,
                    const StateDerivative& k) {
    for (std::size_t i = 0; i < base.rho.size(); ++i)
      out.rho[i] = base.rho[i] + c * k.drho[i];
    for (std::size_t j = 0; j < base.u.size(); ++j)
      out.u[j] = base.u[j] + c * k.du[j];
  }

  void advance(const StaggeredState& s, double dt, const ModelParams& p,
               const IntegratorConfig& cfg, StaggeredState& out) {
    out = s;
    if (dt == 0.0) return;
    rhs(s, p, k1, ws);
    switch (cfg.method) {
      case TimeMethod::euler: {
        blend(out, s, dt, k1);
        break;
      }
      case TimeMethod::rk2: {
        stage = s;
        blend(stage, s, 0.5 * dt, k1);
        stage.t = s.t + 0.5 * dt;
        rhs(stage, p, k2, ws);
        blend(out, s, dt, k2);
        break;
      }
      case TimeMethod::rk4: {
        stage = s;
        blend(stage, s, 0.5 * dt, k1);
        stage.t = s.t + 0.5 * dt;
        rhs(stage, p, k2, ws);
        blend(stage, s, 0.5 * dt, k2);
        rhs(stage, p, k3, ws);
        blend(stage, s, dt, k3);
        stage.t = s.t + dt;
        rhs(stage, p, k4, ws);
        const double c = dt / 6.0;
        for (std::size_t i = 0; i < s.rho.size(); ++i)
          out.rho[i] = s.rho[i] +
                       c * (k1.drho[i] + 2.0 * k2.drho[i] + 2.0 * k3.drho[i] + k4.drho[i]);
        for (std::size_t j = 0; j < s.u.size(); ++j)
          out.u[j] = s.u[j] + c * (k1.du[j] + 2.0 * k2.du[j] + 2.0 * k3.du[j] + k4.du[j]);
        break;
      }
    }
    out.t = s.t + dt;
    enforce_constraints(out);
    check_positivity(out, cfg.positivity_floor);
  }
};

void validate_config(const IntegratorConfig& cfg) {
  if (!(cfg.cfl_safety > 0.0 && cfg.cfl_safety <= 1.0))
    throw std::invalid_argument("integrator: cfl_safety must lie in (0, 1]");
  if (!(cfg.dt_min <= cfg.dt_max))
    throw std::invalid_argument("integrator: dt_min must not exceed dt_max");
  if (!(cfg.dt_min > 0.0)) throw std::invalid_argument("integrator: dt_min must be positive");
  if (!(cfg.sample_interval > 0.0))
    throw std::invalid_argument("integrator: sample_interval must be positive");
  if (!(cfg.t_end >= 0.0)) throw std::invalid_argument("integrator: t_end must be non-negative");
}

bool finite_state(const StaggeredState& s, std::size_t& bad_cell) {
  for (std::size_t i = 0; i < s.rho.size(); ++i)
    if (!std::isfinite(s.rho[i])) {
      bad_cell = i;
      return false;
    }
  for (std::size_t j = 0; j < s.u.size(); ++j)
    if (!std::isfinite(s.u[j])) {
      bad_cell = j;
      return false;
    }
  return true;
}

} // namespace

StaggeredState step(const StaggeredState& s, double dt, const ModelParams& p,
                    const IntegratorConfig& cfg) {
  if (dt < 0.0) throw std::invalid_argument("step: dt must be non-negative");
  Stepper stepper;
  StaggeredState out;
  stepper.advance(s, dt, p, cfg, out);
  return out;
}

RunOutput run(const StaggeredState& s0, const ModelParams& p, const IntegratorConfig& cfg,
              const DiagnosticsConfig& diag_cfg, const SnapshotPolicy& snapshots) {
  require_valid_params(p);
  s0.check_invariants();
  validate_config(cfg);
  if (s0.pinned_cell && p.gamma == 1.0)
    throw std::invalid_argument("run: gamma = 1 with a pinned vacuum cell is not admissible "
                                "(specific entropy diverges)");

  std::vector<double> snap_times = snapshots.times;
  std::sort(snap_times.begin(), snap_times.end());
  snap_times.erase(std::unique(snap_times.begin(), snap_times.end()), snap_times.end());
  for (double ts : snap_times)
    if (ts < 0.0 || ts > cfg.t_end)
      throw std::invalid_argument("run: snapshot time outside [0, t_end]");

  RunOutput out;
  DiagnosticsAccumulator acc(s0, p, diag_cfg);
  StaggeredState state = s0;

  out.series.push_back(acc.sample(state));
  out.snapshots.push_back(state);

  Stepper stepper;
  StaggeredState next = state;
  std::size_t snap_idx = 0;
  while (snap_idx < snap_times.size() && snap_times[snap_idx] <= 0.0) ++snap_idx;
  long sample_idx = 1;

  const auto push_snapshot = [&](const StaggeredState& s) {
    if (!out.snapshots.empty() && out.snapshots.back().t == s.t) return;
    out.snapshots.push_back(s);
  };

  while (state.t < cfg.t_end) {
    const double next_sample =
        std::min(cfg.t_end, static_cast<double>(sample_idx) * cfg.sample_interval);
    const double next_snap =
        snap_idx < snap_times.size() ? snap_times[snap_idx] : cfg.t_end;
    const double target = std::min({next_sample, next_snap, cfg.t_end});

    // Advance to the target, retrying with halved dt on positivity rejection.
    while (state.t < target) {
      const double remaining = target - state.t;
      double dt = stable_dt(state, p, cfg);
      bool lands = dt >= remaining;
      if (lands) dt = remaining;
      for (;;) {
        try {
          stepper.advance(state, dt, p, cfg, next);
          break;
        } catch (const PositivityError& e) {
          if (dt <= cfg.dt_min) {
            out.termination = Termination::dt_underflow;
            out.fail_time = state.t;
            out.fail_cell = e.cell;
            if (out.series.back().t < state.t) out.series.push_back(acc.sample(state));
            push_snapshot(state);
            return out;
          }
          dt = std::max(0.5 * dt, cfg.dt_min);
          lands = false;
        }
      }
      std::swap(state, next);
      if (lands) state.t = target;
      std::size_t bad_cell = 0;
      if (!finite_state(state, bad_cell)) {
        out.termination = Termination::positivity_failure;
        out.fail_time = state.t;
        out.fail_cell = bad_cell;
        return out;
      }
    }

    bool sampled = false;
    if (state.t == next_sample) {
      out.series.push_back(acc.sample(state));
      sampled = true;
      ++sample_idx;
      while (static_cast<double>(sample_idx) * cfg.sample_interval <= state.t) ++sample_idx;
    }
    if (snap_idx < snap_times.size() && state.t == snap_times[snap_idx]) {
      push_snapshot(state);
      ++snap_idx;
    } else if (snapshots.at_every_sample && sampled) {
      push_snapshot(state);
    }
  }

  if (out.series.back().t < cfg.t_end) out.series.push_back(acc.sample(state));
  push_snapshot(state);
  out.termination = Termination::completed;
  out.fail_time = cfg.t_end;
  return out;
}

} // namespace vacflow
