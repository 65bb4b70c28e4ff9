#ifndef VACFLOW_INTEGRATOR_HPP
#define VACFLOW_INTEGRATOR_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "vacflow/diagnostics.hpp"
#include "vacflow/scheme.hpp"
#include "vacflow/types.hpp"

namespace vacflow {

enum class TimeMethod { rk4, rk2, euler };

std::string to_string(TimeMethod m);
TimeMethod time_method_from_string(const std::string& name);

struct IntegratorConfig {
  TimeMethod method = TimeMethod::rk4;
  double cfl_safety = 0.9;      ///< in (0, 1]
  double dt_max = 1e-2;
  double dt_min = 1e-14;
  double t_end = 1.0;
  double sample_interval = 1e-2;
  double positivity_floor = 0.0; ///< step rejected when a density falls to or below this
};

enum class Termination { completed, positivity_failure, dt_underflow };

std::string to_string(Termination t);

/// Full trace of one run: diagnostics rows at the sample cadence, raw states
/// at the snapshot times, and how the run ended.
struct RunOutput {
  std::vector<DiagnosticsRecord> series;
  std::vector<StaggeredState> snapshots;
  Termination termination = Termination::completed;
  double fail_time = 0.0;
  std::size_t fail_cell = 0;
};

struct SnapshotPolicy {
  std::vector<double> times;    ///< must lie in [0, t_end]
  bool at_every_sample = false; ///< also snapshot at the diagnostics cadence
};

/// Explicit-stability step size:
///   dt = cfl_safety * min( h^2 / (2 max K(rho)),  h / (max c(rho) max rho + tiny),
///                          dt_max ),
/// clamped to [dt_min, dt_max]. Degenerate (all-vacuum) denominators fall
/// through to the dt_max branch.
double stable_dt(const StaggeredState& s, const ModelParams& p,
                 const IntegratorConfig& cfg);

/// One explicit step of the configured method. Boundary values are re-imposed
/// exactly after the stage combination and the pinned cell is re-zeroed.
/// Throws PositivityError if a non-pinned density ends at or below
/// cfg.positivity_floor; dt = 0 returns the input state unchanged.
StaggeredState step(const StaggeredState& s, double dt, const ModelParams& p,
                    const IntegratorConfig& cfg);

/// Integrate to cfg.t_end with dt from stable_dt, shortened to land exactly on
/// sample times, snapshot times, and t_end. A rejected step (positivity) is
/// retried with halved dt; termination turns to dt_underflow when the halving
/// cascade reaches dt_min and the step still fails, and to positivity_failure
/// when an accepted state turns out non-finite. Deterministic for fixed
/// inputs; single-threaded.
RunOutput run(const StaggeredState& s0, const ModelParams& p, const IntegratorConfig& cfg,
              const DiagnosticsConfig& diag_cfg = {}, const SnapshotPolicy& snapshots = {});

} // namespace vacflow

#endif
