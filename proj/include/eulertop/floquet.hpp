#pragma once

// Periodic body-reshaping protocol: the body alternates between a symmetric
// top with a perpendicular rotor (shape A, two stable stationary momenta J+-)
// and a symmetric top with a coaxial rotor (shape B), whose precession swaps
// J+ and J- after tau_swap = 2 pi I0 / (3 K3). Sampled stroboscopically once
// per drive period, the response alternates with period 2 tau: a classical
// discrete time crystal.

#include <cstddef>
#include <vector>

#include "eulertop/dynamics.hpp"

namespace eulertop {

struct FloquetProtocol {
  double i0 = 1.0;        // base moment of inertia of both shapes
  double k3 = 1.0;        // rotor angular momentum along axis 3 (shared)
  double tau0 = 1.0;      // dwell in shape A
  double tau_swap = 1.0;  // dwell in shape B
  double dt_nominal = 0.0;  // integrator step; <= 0 picks (tau0+tau_swap)/1e4

  // shape A: I = (2 I0, I0, I0), rotor perpendicular to the symmetry axis
  InertiaConfig shape_a() const { return InertiaConfig::physical(2.0 * i0, i0, i0, 0.0, 0.0, k3); }
  // shape B: I = (I0, I0, 2 I0), rotor along the symmetry axis
  InertiaConfig shape_b() const { return InertiaConfig::physical(i0, i0, 2.0 * i0, 0.0, 0.0, k3); }
};

// tau_swap = 2 pi i0 / (3 k3): half a precession turn of shape B at the
// stationary latitude J3 = 2 k3. Throws UndefinedProtocolError for k3 <= 0
// (flip the rotor sign convention instead of asking for a negative dwell).
double swap_time(double i0, double k3);

struct StationaryPair {
  BodyState plus;   // (+sqrt(J^2 - 4 k3^2), 0, 2 k3)
  BodyState minus;  // (-sqrt(J^2 - 4 k3^2), 0, 2 k3)
};

// The two stable stationary momenta of shape A. Requires big_j > 2 |k3|,
// otherwise NoBistabilityError.
StationaryPair stationary_pair(double i0, double k3, double big_j);

struct FloquetSample {
  double t;
  BodyState state;
  double e_body;     // of the shape active at the sample
  double j_squared;
  char shape;        // 'A' or 'B'
};

struct StroboscopicRecord {
  std::vector<BodyState> samples;  // at t = k (tau0 + tau_swap), k = 0..periods
  int subharmonic_period = 0;      // dominant period of stroboscopic J1; 0 = none detected
  bool escaped = false;            // some sample left the basin of both J+-
};

struct FloquetRun {
  std::vector<FloquetSample> trajectory;  // decimated; empty when stride == 0
  StroboscopicRecord strobo;
};

// Integrates `periods` repetitions of (shape A for tau0, shape B for
// tau_swap). J is continuous across the instantaneous reshapings; E_body
// jumps by the reshaping work. Each dwell uses the largest step <= dt that
// divides it exactly. trajectory_stride = 0 disables full-trajectory
// recording; k stores every k-th step.
FloquetRun run_protocol(const FloquetProtocol& p, const BodyState& initial, std::size_t periods,
                        std::size_t trajectory_stride = 0);

}  // namespace eulertop
