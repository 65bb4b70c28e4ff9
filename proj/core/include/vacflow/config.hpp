#ifndef VACFLOW_CONFIG_HPP
#define VACFLOW_CONFIG_HPP

#include <string>
#include <vector>

#include "vacflow/diagnostics.hpp"
#include "vacflow/integrator.hpp"
#include "vacflow/scenarios.hpp"
#include "vacflow/types.hpp"

namespace vacflow {

struct ConfigError : std::runtime_error {
  ConfigError(int line_, const std::string& message);
  int line;
};

struct OutputConfig {
  std::string dir = "runs/out";
  std::vector<double> snapshot_times;
  bool snapshots_at_samples = false;
};

/// Knobs of the run summary (not of the solver): vacuum-vanishing detector
/// threshold/hold and the decay-fit window start T0 + decay_margin.
struct SummaryConfig {
  double rho_thresh = 0.05;
  double hold = 1.0;
  double decay_margin = 2.0;
};

struct RunConfig {
  ScenarioSpec scenario;
  ModelParams params;
  IntegratorConfig integrator;
  OutputConfig outputs;
  DiagnosticsConfig diagnostics;
  SummaryConfig summary;
  unsigned long seed = 0; ///< randomized test data only; the solver is deterministic
};

/// Parse the flat key=value format with dotted sections:
///
///   scenario.preset=smooth-periodic   # applied first, then overridden
///   scenario.sigma=2.0
///   params.alpha=1.0
///   integrator.t_end=1.0
///   outputs.snapshot_times=0.5,1.0
///
/// '#' starts a comment; blank lines are skipped. Unknown keys are errors
/// (with a nearest-key suggestion); model parameters are validated.
RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// Canonical rendering: every key, sorted sections, shortest round-trip
/// doubles. serialize_config(parse_config(x)) is a fixed point.
std::string serialize_config(const RunConfig& cfg);

} // namespace vacflow

#endif
