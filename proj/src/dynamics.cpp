#include "eulertop/dynamics.hpp"

#include <cmath>
#include <sstream>

namespace eulertop {

namespace {

void require_positive_moments(double i1, double i2, double i3) {
  if (!(i1 > 0.0) || !(i2 > 0.0) || !(i3 > 0.0) || !std::isfinite(i1) || !std::isfinite(i2) ||
      !std::isfinite(i3)) {
    throw InvalidStateError("principal moments of inertia must be finite and strictly positive");
  }
}

void require_finite_rotor(double k1, double k2, double k3) {
  if (!std::isfinite(k1) || !std::isfinite(k2) || !std::isfinite(k3)) {
    throw InvalidStateError("rotor angular momentum components must be finite");
  }
}

}  // namespace

InertiaConfig InertiaConfig::physical(double i1, double i2, double i3, double k1, double k2,
                                      double k3) {
  InertiaConfig cfg = formal(i1, i2, i3, k1, k2, k3);
  if (!cfg.satisfies_triangle()) {
    std::ostringstream msg;
    msg << "moments (" << i1 << ", " << i2 << ", " << i3
        << ") violate the triangle inequality; no mass distribution realizes them";
    throw InvalidStateError(msg.str());
  }
  return cfg;
}

InertiaConfig InertiaConfig::formal(double i1, double i2, double i3, double k1, double k2,
                                    double k3) {
  require_positive_moments(i1, i2, i3);
  require_finite_rotor(k1, k2, k3);
  InertiaConfig cfg;
  cfg.i1 = i1;
  cfg.i2 = i2;
  cfg.i3 = i3;
  cfg.k1 = k1;
  cfg.k2 = k2;
  cfg.k3 = k3;
  return cfg;
}

bool InertiaConfig::satisfies_triangle() const {
  return i1 <= i2 + i3 && i2 <= i1 + i3 && i3 <= i1 + i2;
}

FieldCoeffs FieldCoeffs::from(const InertiaConfig& cfg) {
  FieldCoeffs f;
  f.a1 = 1.0 / cfg.i3 - 1.0 / cfg.i2;
  f.a2 = 1.0 / cfg.i1 - 1.0 / cfg.i3;
  f.a3 = 1.0 / cfg.i2 - 1.0 / cfg.i1;
  f.b1 = cfg.k1 / cfg.i1;
  f.b2 = cfg.k2 / cfg.i2;
  f.b3 = cfg.k3 / cfg.i3;
  return f;
}

Vec3 djdt(const BodyState& state, const InertiaConfig& cfg) {
  if (!state.finite()) {
    throw InvalidStateError("djdt: non-finite angular momentum components");
  }
  return FieldCoeffs::from(cfg).eval(state.vec());
}

BodyVectors convert(const BodyState& state, const InertiaConfig& cfg) {
  if (!state.finite()) {
    throw InvalidStateError("convert: non-finite angular momentum components");
  }
  const Vec3 l = state.vec() - cfg.k();
  return {l, {l.x / cfg.i1, l.y / cfg.i2, l.z / cfg.i3}};
}

double body_energy(const BodyState& state, const InertiaConfig& cfg) {
  const Vec3 l = state.vec() - cfg.k();
  return l.x * l.x / (2.0 * cfg.i1) + l.y * l.y / (2.0 * cfg.i2) + l.z * l.z / (2.0 * cfg.i3);
}

double precession_frequency(const InertiaConfig& cfg, double j3) {
  const double scale_i = std::max({cfg.i1, cfg.i2, cfg.i3});
  const double scale_k = std::max({std::abs(cfg.k1), std::abs(cfg.k2), std::abs(cfg.k3), 1e-300});
  if (std::abs(cfg.i1 - cfg.i2) > 1e-9 * scale_i) {
    throw NotApplicableError("precession_frequency: requires a symmetric top (i1 = i2)");
  }
  if (std::abs(cfg.k1) > 1e-9 * scale_k || std::abs(cfg.k2) > 1e-9 * scale_k) {
    throw NotApplicableError("precession_frequency: requires a coaxial rotor (k1 = k2 = 0)");
  }
  return (1.0 / cfg.i1 - 1.0 / cfg.i3) * j3 + cfg.k3 / cfg.i3;
}

Vec3 rk4_step(const FieldCoeffs& f, const Vec3& j, double dt) {
  const Vec3 k1 = f.eval(j);
  const Vec3 k2 = f.eval(j + (0.5 * dt) * k1);
  const Vec3 k3 = f.eval(j + (0.5 * dt) * k2);
  const Vec3 k4 = f.eval(j + dt * k3);
  return j + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Trajectory integrate(const BodyState& initial, const InertiaConfig& cfg, double dt,
                     std::size_t steps, bool renormalize, std::size_t sample_stride) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw PreconditionError("integrate: dt must be positive and finite");
  }
  if (steps < 1) {
    throw PreconditionError("integrate: step count must be at least 1");
  }
  if (sample_stride < 1) sample_stride = 1;
  if (!initial.finite()) {
    throw InvalidStateError("integrate: non-finite initial state");
  }

  const FieldCoeffs f = FieldCoeffs::from(cfg);
  const double j0 = norm(initial.vec());

  Trajectory traj;
  traj.step_dt = dt;
  traj.stride = sample_stride;
  traj.samples.reserve(steps / sample_stride + 2);

  auto push_sample = [&](std::size_t step, const Vec3& j) {
    const BodyState s = BodyState::from(j);
    traj.samples.push_back(
        {static_cast<double>(step) * dt, s, body_energy(s, cfg), norm_sq(j)});
  };

  Vec3 j = initial.vec();
  push_sample(0, j);
  for (std::size_t step = 1; step <= steps; ++step) {
    j = rk4_step(f, j, dt);
    if (renormalize) {
      const double n = norm(j);
      if (n > 0.0) j = (j0 / n) * j;
    }
    if (!all_finite(j)) {
      throw IntegrationDivergedError("integrate: state became non-finite at step " +
                                         std::to_string(step),
                                     traj.samples.size() - 1);
    }
    // Strict stride sampling keeps the stored t grid uniform; callers that
    // need the final state should pick steps divisible by the stride.
    if (step % sample_stride == 0) {
      push_sample(step, j);
    }
  }
  return traj;
}

}  // namespace eulertop
