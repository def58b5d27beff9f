#pragma once

// Rigid-body angular momentum dynamics in the body frame: the quadratic
// Euler vector field with a constant internal-rotor term, its conserved
// quantities, fixed-step RK4 integration, and the symmetric-top precession
// frequency.
//
// Conventions: total angular momentum J = L + K, with L = I omega the body
// angular momentum and K the rotor angular momentum (constant in the body
// frame). hbar = 1; all quantities dimensionless in consistent units.

#include <cstddef>
#include <string>
#include <vector>

#include "eulertop/errors.hpp"
#include "eulertop/vec3.hpp"

namespace eulertop {

struct InertiaConfig {
  double i1 = 1.0, i2 = 1.0, i3 = 1.0;  // principal moments of inertia, > 0
  double k1 = 0.0, k2 = 0.0, k3 = 0.0;  // rotor angular momentum, body frame

  // Validates positivity and the triangle inequality i_j <= i_k + i_l.
  static InertiaConfig physical(double i1, double i2, double i3, double k1 = 0.0, double k2 = 0.0,
                                double k3 = 0.0);
  // Validates positivity only. Used for correspondence round trips where the
  // moments are a formal parameterization, not a realizable mass distribution.
  static InertiaConfig formal(double i1, double i2, double i3, double k1 = 0.0, double k2 = 0.0,
                              double k3 = 0.0);

  Vec3 k() const { return {k1, k2, k3}; }
  double moment(int axis) const { return axis == 0 ? i1 : (axis == 1 ? i2 : i3); }
  bool satisfies_triangle() const;
};

struct BodyState {
  double j1 = 0.0, j2 = 0.0, j3 = 0.0;

  Vec3 vec() const { return {j1, j2, j3}; }
  static BodyState from(const Vec3& v) { return {v.x, v.y, v.z}; }
  double norm() const { return std::sqrt(j1 * j1 + j2 * j2 + j3 * j3); }
  bool finite() const { return std::isfinite(j1) && std::isfinite(j2) && std::isfinite(j3); }
};

// Precomputed coefficients of the quadratic-plus-linear field
//   dJ1/dt = a1 J2 J3 + b2 J3 - b3 J2   (cyclic).
// Classical configs give a1 = 1/I3 - 1/I2, b_k = K_k/I_k; the collective-spin
// parameterization gives a1 = 2(chi2 - chi3), b_k = Omega_k. Both describe the
// same family of flows.
struct FieldCoeffs {
  double a1 = 0.0, a2 = 0.0, a3 = 0.0;
  double b1 = 0.0, b2 = 0.0, b3 = 0.0;

  static FieldCoeffs from(const InertiaConfig& cfg);

  Vec3 eval(const Vec3& j) const {
    return {a1 * j.y * j.z + b2 * j.z - b3 * j.y, a2 * j.z * j.x + b3 * j.x - b1 * j.z,
            a3 * j.x * j.y + b1 * j.y - b2 * j.x};
  }
};

// dJ/dt for the given state. Throws InvalidStateError on non-finite input.
Vec3 djdt(const BodyState& state, const InertiaConfig& cfg);

struct BodyVectors {
  Vec3 l;      // L = J - K
  Vec3 omega;  // omega_k = L_k / I_k
};
BodyVectors convert(const BodyState& state, const InertiaConfig& cfg);

// E_body = sum L_k^2 / (2 I_k). Conserved by the flow, along with |J|^2.
double body_energy(const BodyState& state, const InertiaConfig& cfg);

// Body-frame precession frequency of a symmetric top (i1 = i2) with a coaxial
// rotor (k1 = k2 = 0): Omega~ = (1/I1 - 1/I3) J3 + K3/I3.
// Throws NotApplicableError for asymmetric configs or transverse rotors.
double precession_frequency(const InertiaConfig& cfg, double j3);

struct TrajectorySample {
  double t;
  BodyState state;
  double e_body;     // recomputed at the sample, not carried along
  double j_squared;  // recomputed at the sample
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  double step_dt = 0.0;     // integrator step
  std::size_t stride = 1;   // steps between stored samples
  std::string method = "rk4";

  double sample_dt() const { return step_dt * static_cast<double>(stride); }
};

// Classical fixed-step RK4. If renormalize is set, each step rescales J back
// to the initial norm (projection onto the momentum sphere); off by default
// so conservation drift stays observable as a diagnostic.
// Throws IntegrationDivergedError (carrying the last valid sample index) if
// the state becomes non-finite mid-run.
Trajectory integrate(const BodyState& initial, const InertiaConfig& cfg, double dt,
                     std::size_t steps, bool renormalize = false, std::size_t sample_stride = 1);

// One RK4 step of an arbitrary field of this family. Exposed for the
// periodic-reshaping protocol, which switches coefficient sets mid-run.
Vec3 rk4_step(const FieldCoeffs& f, const Vec3& j, double dt);

}  // namespace eulertop
