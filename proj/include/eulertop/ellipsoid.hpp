#pragma once

// Principal curvature radii of an axis-aligned ellipsoid at a surface point,
// in closed form. Used to decide the stability of stationary angular momenta
// by comparing the energy-surface radii against the momentum-sphere radius.

namespace eulertop {

struct PrincipalRadii {
  double r1;  // larger radius
  double r2;  // smaller radius
};

// Ellipsoid (x/a)^2 + (y/b)^2 + (z/c)^2 = 1. The point must satisfy the
// surface equation within 1e-9 (relative); otherwise InvalidPointError.
// Returns r1 >= r2 > 0 (equal on a sphere).
PrincipalRadii ellipsoid_principal_radii(double a, double b, double c, double x, double y,
                                         double z);

}  // namespace eulertop
