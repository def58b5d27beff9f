#pragma once

// Classical squeezing diagnostic: a narrow cone of initial angular momenta is
// integrated member-by-member and the spread is tracked as a variance ellipse
// in the tangent plane of the (fixed) initial cone center.

#include <cstddef>
#include <string>
#include <vector>

#include "eulertop/dynamics.hpp"
#include "eulertop/exec.hpp"
#include "eulertop/vec3.hpp"

namespace eulertop {

struct EnsembleCone {
  Vec3 center;          // unit direction of the cone axis
  double half_angle;    // radians
  std::size_t count;    // number of members
  double big_j;         // common |J| of every member
  std::vector<BodyState> samples;
};

// Members are placed uniformly around the cone rim, all at exactly half_angle
// from the center and with norm big_j.
EnsembleCone make_cone(const Vec3& center, double half_angle, std::size_t count, double big_j);

struct EnsembleSample {
  double t;
  double var_major;  // eigenvalues of the 2x2 tangent-plane covariance
  double var_minor;
  double tilt;       // major-axis angle from e_theta, radians
};

struct EnsembleResult {
  std::vector<EnsembleSample> series;
  std::vector<std::string> warnings;
};

// Integrates every member under cfg and fits the covariance of the
// angle-scaled tangent-plane deviations at each stored time. Half-angles
// above 0.2 rad produce a warning (the tangent-plane picture degrades), not
// an error. Aggregation order is by member index, so Serial and Parallel
// execution give identical output.
EnsembleResult ensemble_squeeze(const EnsembleCone& cone, const InertiaConfig& cfg, double dt,
                                std::size_t steps, std::size_t output_stride = 1,
                                Execution exec = Execution::Parallel);

}  // namespace eulertop
