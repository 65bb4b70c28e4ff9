#include "vacflow/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vacflow/coords.hpp"

namespace vacflow {

double default_g_exponent(const ModelParams& p) {
  return std::max({p.alpha + p.gamma - 1.0, 2.0 * p.alpha + 1.0, 1.0});
}

namespace {

double face_velocity(const StaggeredState& s, std::size_t cell, bool right) {
  const std::size_t n = s.n_cells();
  if (s.bc == BoundaryKind::periodic) return right ? s.u[(cell + 1) % n] : s.u[cell];
  return right ? s.u[cell + 1] : s.u[cell];
}

double cell_velocity_jump(const StaggeredState& s, std::size_t cell) {
  return face_velocity(s, cell, true) - face_velocity(s, cell, false);
}

double entropy_sum(const StaggeredState& s, const ModelParams& p, bool specific) {
  double acc = 0.0;
  for (std::size_t i = 0; i < s.n_cells(); ++i) {
    if (s.is_pinned(i)) continue; // pi(0) = pi(0)/0 -> 0 for gamma > 1
    acc += specific ? specific_entropy(s.rho[i], p.gamma) : pi_fn(s.rho[i], p.gamma);
  }
  return p.a1 * acc * s.h;
}

double kinetic_sum(const StaggeredState& s) {
  double acc = 0.0;
  for (double v : s.u) acc += v * v;
  return 0.5 * acc * s.h;
}

} // namespace

double discrete_energy(const StaggeredState& s, const ModelParams& p) {
  return kinetic_sum(s) + entropy_sum(s, p, true);
}

double discrete_energy_pi(const StaggeredState& s, const ModelParams& p) {
  return kinetic_sum(s) + entropy_sum(s, p, false);
}

double discrete_dissipation(const StaggeredState& s, const ModelParams& p) {
  double acc = 0.0;
  const double inv_h = 1.0 / s.h;
  for (std::size_t i = 0; i < s.n_cells(); ++i) {
    const double grad = cell_velocity_jump(s, i) * inv_h;
    acc += stress_coefficient(s.rho[i], p) * grad * grad;
  }
  return acc * s.h;
}

double lagrangian_volume(const StaggeredState& s) {
  double acc = 0.0;
  for (std::size_t i = 0; i < s.n_cells(); ++i) {
    if (s.is_pinned(i)) continue;
    acc += 1.0 / s.rho[i];
  }
  return acc * s.h;
}

double bd_entropy(const StaggeredState& s, const ModelParams& p) {
  const std::size_t n = s.n_cells();
  const double inv_h = 1.0 / s.h;
  double acc = 0.0;
  for (double v : s.u) acc += v * v * s.h;

  const auto grad_terms = [&](double rho_left, double rho_right) {
    const double ga = (std::pow(rho_right, p.alpha) - std::pow(rho_left, p.alpha)) * inv_h;
    double g = ga * ga;
    if (p.eps > 0.0) {
      const double gt = (std::pow(rho_right, p.theta) - std::pow(rho_left, p.theta)) * inv_h;
      g += p.eps * p.eps * gt * gt;
    }
    return g;
  };

  if (s.bc == BoundaryKind::periodic) {
    for (std::size_t j = 0; j < n; ++j)
      acc += grad_terms(s.rho[(j + n - 1) % n], s.rho[j]) * s.h;
  } else {
    for (std::size_t j = 1; j < n; ++j) acc += grad_terms(s.rho[j - 1], s.rho[j]) * s.h;
    if (n >= 2) {
      // one-sided at the walls, half weight
      acc += grad_terms(s.rho[0], s.rho[1]) * 0.5 * s.h;
      acc += grad_terms(s.rho[n - 2], s.rho[n - 1]) * 0.5 * s.h;
    }
  }

  return acc + entropy_sum(s, p, true);
}

std::vector<double> velocity_gradient_field(const StaggeredState& s) {
  std::vector<double> ux(s.n_cells());
  const double inv_h = 1.0 / s.h;
  for (std::size_t i = 0; i < s.n_cells(); ++i)
    ux[i] = s.rho[i] * cell_velocity_jump(s, i) * inv_h;
  return ux;
}

double ux_linf(const StaggeredState& s) {
  double m = 0.0;
  const double inv_h = 1.0 / s.h;
  for (std::size_t i = 0; i < s.n_cells(); ++i)
    m = std::max(m, std::abs(s.rho[i] * cell_velocity_jump(s, i) * inv_h));
  return m;
}

double g_functional(const EulerianField& f, double b) {
  const double length = f.total_length();
  double mean = 0.0;
  for (std::size_t i = 0; i < f.n_cells(); ++i)
    mean += std::pow(f.rho[i], b) * (f.x[i + 1] - f.x[i]);
  mean /= length;
  double acc = 0.0;
  for (std::size_t i = 0; i < f.n_cells(); ++i) {
    const double d = std::pow(f.rho[i], b) - mean;
    const double d2 = d * d;
    acc += d2 * d2 * (f.x[i + 1] - f.x[i]);
  }
  return acc / length;
}

double g_functional(const StaggeredState& s, const ModelParams& p,
                    std::optional<double> b_override) {
  const double b = b_override.value_or(default_g_exponent(p));
  return g_functional(lagrangian_to_eulerian(s), b);
}

DiagnosticsAccumulator::DiagnosticsAccumulator(const StaggeredState& s0,
                                               const ModelParams& p,
                                               DiagnosticsConfig cfg)
    : params_(p), cfg_(cfg) {
  const std::vector<double> widths = cell_widths(s0);
  double mass = 0.0;
  double length = 0.0;
  double momentum = 0.0;
  for (std::size_t i = 0; i < s0.n_cells(); ++i) {
    mass += s0.rho[i] * widths[i];
    length += widths[i];
    const double u_mid =
        0.5 * (face_velocity(s0, i, false) + face_velocity(s0, i, true));
    momentum += u_mid * s0.h; // integral of u dy = integral of rho u dx
  }
  rho_bar0_ = mass / length;
  u_s_ = s0.bc == BoundaryKind::periodic ? momentum / mass : 0.0;
}

DiagnosticsRecord DiagnosticsAccumulator::sample(const StaggeredState& s) {
  DiagnosticsRecord r;
  r.t = s.t;
  const std::vector<double> widths = cell_widths(s);

  double mass = 0.0;
  double l2 = 0.0;
  r.min_rho = std::numeric_limits<double>::infinity();
  r.max_rho = 0.0;
  for (std::size_t i = 0; i < s.n_cells(); ++i) {
    mass += s.rho[i] * widths[i];
    const double u_mid = 0.5 * (face_velocity(s, i, false) + face_velocity(s, i, true));
    const double drho = s.rho[i] - rho_bar0_;
    const double du = u_mid - u_s_;
    l2 += (drho * drho + du * du) * widths[i];
    if (s.is_pinned(i)) continue;
    r.min_rho = std::min(r.min_rho, s.rho[i]);
    r.max_rho = std::max(r.max_rho, s.rho[i]);
  }
  r.mass = mass;
  r.l2_dist = std::sqrt(l2);
  r.volume = lagrangian_volume(s);
  r.energy = discrete_energy(s, params_);
  r.energy_pi = discrete_energy_pi(s, params_);
  r.bd_entropy = bd_entropy(s, params_);
  r.ux_linf = ux_linf(s);
  r.pinned_cell_width = s.pinned_cell ? pinned_cell_width(s) : 0.0;

  {
    EulerianField f;
    f.t = s.t;
    f.x.resize(s.n_cells() + 1);
    f.x[0] = 0.0;
    for (std::size_t i = 0; i < s.n_cells(); ++i) f.x[i + 1] = f.x[i] + widths[i];
    f.rho = s.rho;
    f.u.assign(s.n_cells() + 1, 0.0);
    r.g_val = g_functional(f, cfg_.b_override.value_or(default_g_exponent(params_)));
  }

  const double diss_rate = discrete_dissipation(s, params_);
  if (!first_) {
    const double dt = s.t - prev_t_;
    diss_cum_ += 0.5 * (diss_rate + prev_diss_rate_) * dt;
    ux_cum_ += 0.5 * (r.ux_linf + prev_ux_) * dt;
  }
  first_ = false;
  prev_t_ = s.t;
  prev_diss_rate_ = diss_rate;
  prev_ux_ = r.ux_linf;
  r.dissipation_cum = diss_cum_;
  r.ux_linf_cum = ux_cum_;
  return r;
}

std::optional<double> vacuum_vanish_time(const std::vector<DiagnosticsRecord>& series,
                                         double rho_thresh, double hold) {
  if (series.empty()) return std::nullopt;
  const double t_last = series.back().t;
  for (std::size_t m = 0; m < series.size(); ++m) {
    const double T = series[m].t;
    if (T + hold > t_last) return std::nullopt; // window not covered
    bool sustained = true;
    for (std::size_t j = m; j < series.size() && series[j].t <= T + hold; ++j) {
      if (series[j].min_rho < rho_thresh) {
        sustained = false;
        break;
      }
    }
    if (sustained) return T;
  }
  return std::nullopt;
}

BlowupIndicator blowup_indicator(const std::vector<DiagnosticsRecord>& series,
                                 double t1, double eta) {
  const double t2 = t1 + eta;
  if (series.size() < 2 || series.front().t > t1 || series.back().t < t2)
    throw std::invalid_argument("blowup_indicator: series does not cover the window");

  const auto value_at = [&](double t, std::size_t hint) {
    std::size_t j = hint;
    while (j + 1 < series.size() && series[j + 1].t < t) ++j;
    const double w = (t - series[j].t) / (series[j + 1].t - series[j].t);
    return series[j].ux_linf * (1.0 - w) + series[j + 1].ux_linf * w;
  };

  BlowupIndicator out;
  double prev_t = t1;
  double prev_v = value_at(t1, 0);
  out.peak = prev_v;
  out.peak_time = t1;
  for (const DiagnosticsRecord& r : series) {
    if (r.t <= t1) continue;
    if (r.t >= t2) break;
    out.integral += 0.5 * (prev_v + r.ux_linf) * (r.t - prev_t);
    if (r.ux_linf > out.peak) {
      out.peak = r.ux_linf;
      out.peak_time = r.t;
    }
    prev_t = r.t;
    prev_v = r.ux_linf;
  }
  const double end_v = value_at(t2, 0);
  out.integral += 0.5 * (prev_v + end_v) * (t2 - prev_t);
  if (end_v > out.peak) {
    out.peak = end_v;
    out.peak_time = t2;
  }
  return out;
}

DecayFit decay_fit_xy(const std::vector<double>& t, const std::vector<double>& y,
                      double t_start) {
  DecayFit fit;
  fit.t_start = t_start;
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < t_start) continue;
    if (!(y[i] > 0.0)) {
      ++fit.excluded;
      continue;
    }
    xs.push_back(t[i] - t_start);
    ys.push_back(std::log(y[i]));
  }
  if (xs.size() < 5)
    throw std::invalid_argument("decay_fit: fewer than 5 usable samples after t_start");

  const double n = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) {
    fit.degenerate = true;
    fit.c0 = std::exp(my);
    return fit;
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  fit.mu0 = -slope;
  fit.c0 = std::exp(intercept);
  if (syy == 0.0) {
    // perfectly constant response: slope 0, flag rather than 0/0
    fit.degenerate = true;
    fit.r2 = 0.0;
  } else {
    fit.r2 = (sxy * sxy) / (sxx * syy);
  }
  return fit;
}

DecayFit decay_fit(const std::vector<DiagnosticsRecord>& series, double t_start) {
  std::vector<double> t;
  std::vector<double> y;
  t.reserve(series.size());
  y.reserve(series.size());
  for (const DiagnosticsRecord& r : series) {
    t.push_back(r.t);
    y.push_back(r.l2_dist);
  }
  return decay_fit_xy(t, y, t_start);
}

EnvelopeFit envelope_fit(const EulerianField& f, double x0, double sigma, double window) {
  if (!(window > 0.0)) throw std::invalid_argument("envelope_fit: window must be positive");
  EnvelopeFit fit;
  fit.sigma_used = sigma;
  fit.a_minus = std::numeric_limits<double>::infinity();
  fit.a_plus = 0.0;
  double log_sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < f.n_cells(); ++i) {
    const double xc = 0.5 * (f.x[i] + f.x[i + 1]);
    const double d = std::abs(xc - x0);
    if (d > window) continue;
    if (x0 >= f.x[i] && x0 <= f.x[i + 1]) continue; // the vacuum cell itself
    if (!(f.rho[i] > 0.0)) continue;
    const double ratio = f.rho[i] / std::pow(d, sigma);
    fit.a_minus = std::min(fit.a_minus, ratio);
    fit.a_plus = std::max(fit.a_plus, ratio);
    log_sum += std::log(ratio);
    ++count;
  }
  if (count == 0) throw std::invalid_argument("envelope_fit: no cells in the window");
  const double a_hat = std::exp(log_sum / static_cast<double>(count));
  fit.max_violation = std::max(fit.a_plus / a_hat, a_hat / fit.a_minus) - 1.0;
  return fit;
}

} // namespace vacflow
