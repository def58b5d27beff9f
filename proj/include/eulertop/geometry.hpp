#pragma once

#include <cmath>

#include "eulertop/vec3.hpp"

namespace eulertop {

// Orthonormal tangent basis (e_theta, e_phi) at a unit direction on the
// sphere. At the poles phi is undefined; the basis falls back to the x/y axes.
struct TangentBasis {
  Vec3 e_theta;
  Vec3 e_phi;
};

inline TangentBasis tangent_basis(const Vec3& u) {
  const double st = std::sqrt(u.x * u.x + u.y * u.y);
  if (st < 1e-300) {
    return {{u.z > 0.0 ? 1.0 : -1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
  }
  const double ct = u.z;
  const double cp = u.x / st, sp = u.y / st;
  return {{ct * cp, ct * sp, -st}, {-sp, cp, 0.0}};
}

// Eigen-decomposition of a 2x2 covariance matrix: variance along the major
// and minor principal axes plus the major-axis tilt from the first basis
// vector, in (-pi/2, pi/2].
struct VarianceEllipse {
  double var_major = 0.0;
  double var_minor = 0.0;
  double tilt = 0.0;
};

inline VarianceEllipse covariance_ellipse(double cxx, double cxy, double cyy) {
  const double half_tr = 0.5 * (cxx + cyy);
  const double half_d = 0.5 * (cxx - cyy);
  const double r = std::sqrt(half_d * half_d + cxy * cxy);
  VarianceEllipse e;
  e.var_major = half_tr + r;
  e.var_minor = half_tr - r;
  e.tilt = 0.5 * std::atan2(2.0 * cxy, cxx - cyy);
  return e;
}

// Angle-scaled tangent-plane coordinates of a unit direction relative to a
// unit center: (angle to center) times the unit tangent direction, expressed
// in the given basis.
inline void angular_deviation(const Vec3& center, const TangentBasis& basis, const Vec3& u,
                              double& d_theta, double& d_phi) {
  const double c = dot(center, u);
  const Vec3 perp = u - c * center;
  const double s = norm(perp);
  const double angle = std::atan2(s, c);
  if (s < 1e-300) {
    d_theta = 0.0;
    d_phi = 0.0;
    return;
  }
  const Vec3 t = perp / s;
  d_theta = angle * dot(t, basis.e_theta);
  d_phi = angle * dot(t, basis.e_phi);
}

}  // namespace eulertop
