#include "eulertop/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace eulertop {

double swap_time(double i0, double k3) {
  if (!(i0 > 0.0)) {
    throw UndefinedProtocolError("swap_time: i0 must be positive");
  }
  if (k3 == 0.0) {
    throw UndefinedProtocolError("swap_time: k3 = 0 leaves no precession to swap with");
  }
  if (k3 < 0.0) {
    throw UndefinedProtocolError(
        "swap_time: negative k3 gives a negative dwell; flip the rotor sign convention");
  }
  return 2.0 * std::numbers::pi * i0 / (3.0 * k3);
}

StationaryPair stationary_pair(double i0, double k3, double big_j) {
  if (!(i0 > 0.0)) {
    throw PreconditionError("stationary_pair: i0 must be positive");
  }
  if (!(big_j > 2.0 * std::abs(k3))) {
    throw NoBistabilityError("stationary_pair: requires |J| > 2|k3|");
  }
  const double w = std::sqrt(big_j * big_j - 4.0 * k3 * k3);
  return {{w, 0.0, 2.0 * k3}, {-w, 0.0, 2.0 * k3}};
}

namespace {

// Dominant period of the stroboscopic series by normalized autocorrelation.
int dominant_period(const std::vector<double>& x) {
  const std::size_t n = x.size();
  if (n < 4) return 0;
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double v : x) var += (v - mean) * (v - mean);
  if (!(var > 0.0)) return 1;  // constant series repeats every period
  const std::size_t max_lag = std::min<std::size_t>(32, n / 2);
  int best_lag = 0;
  double best = -2.0;
  for (std::size_t lag = 1; lag <= max_lag; ++lag) {
    double acc = 0.0;
    for (std::size_t i = 0; i + lag < n; ++i) acc += (x[i] - mean) * (x[i + lag] - mean);
    const double r = acc / var;
    if (r > best + 1e-12) {
      best = r;
      best_lag = static_cast<int>(lag);
    }
  }
  return best > 0.2 ? best_lag : 0;
}

}  // namespace

FloquetRun run_protocol(const FloquetProtocol& p, const BodyState& initial, std::size_t periods,
                        std::size_t trajectory_stride) {
  if (periods < 1) {
    throw PreconditionError("run_protocol: at least one period required");
  }
  if (!(p.tau0 > 0.0) || !(p.tau_swap > 0.0)) {
    throw PreconditionError("run_protocol: dwell times must be positive");
  }
  if (!initial.finite()) {
    throw InvalidStateError("run_protocol: non-finite initial state");
  }
  const InertiaConfig shape_a = p.shape_a();
  const InertiaConfig shape_b = p.shape_b();
  const FieldCoeffs fa = FieldCoeffs::from(shape_a);
  const FieldCoeffs fb = FieldCoeffs::from(shape_b);

  const double dt_nom =
      p.dt_nominal > 0.0 ? p.dt_nominal : (p.tau0 + p.tau_swap) / 1e4;
  const std::size_t steps_a = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(p.tau0 / dt_nom)));
  const std::size_t steps_b = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(p.tau_swap / dt_nom)));
  const double dt_a = p.tau0 / static_cast<double>(steps_a);
  const double dt_b = p.tau_swap / static_cast<double>(steps_b);

  FloquetRun run;
  run.strobo.samples.reserve(periods + 1);
  run.strobo.samples.push_back(initial);

  Vec3 j = initial.vec();
  double t = 0.0;
  std::size_t step_count = 0;
  bool diverged = false;

  auto record = [&](char shape, const InertiaConfig& cfg) {
    if (trajectory_stride == 0 || step_count % trajectory_stride != 0) return;
    const BodyState s = BodyState::from(j);
    run.trajectory.push_back({t, s, body_energy(s, cfg), norm_sq(j), shape});
  };

  record('A', shape_a);
  for (std::size_t period = 0; period < periods && !diverged; ++period) {
    for (std::size_t k = 0; k < steps_a; ++k) {
      j = rk4_step(fa, j, dt_a);
      t += dt_a;
      ++step_count;
      if (!all_finite(j)) {
        diverged = true;
        break;
      }
      record('A', shape_a);
    }
    for (std::size_t k = 0; k < steps_b && !diverged; ++k) {
      j = rk4_step(fb, j, dt_b);
      t += dt_b;
      ++step_count;
      if (!all_finite(j)) {
        diverged = true;
        break;
      }
      record('B', shape_b);
    }
    if (!diverged) run.strobo.samples.push_back(BodyState::from(j));
  }

  // Escape detection: a stroboscopic sample far from both stationary states
  // of shape A. Skipped when the protocol is not bistable.
  run.strobo.escaped = diverged;
  const double big_j = initial.norm();
  if (big_j > 2.0 * std::abs(p.k3)) {
    const StationaryPair pair = stationary_pair(p.i0, p.k3, big_j);
    const double half_sep = std::sqrt(big_j * big_j - 4.0 * p.k3 * p.k3);
    const double radius = 0.5 * half_sep;
    for (const BodyState& s : run.strobo.samples) {
      const double dp = norm(s.vec() - pair.plus.vec());
      const double dm = norm(s.vec() - pair.minus.vec());
      if (std::min(dp, dm) > radius) {
        run.strobo.escaped = true;
        break;
      }
    }
  }

  std::vector<double> j1_series;
  j1_series.reserve(run.strobo.samples.size());
  for (const BodyState& s : run.strobo.samples) j1_series.push_back(s.j1);
  run.strobo.subharmonic_period = dominant_period(j1_series);
  return run;
}

}  // namespace eulertop
