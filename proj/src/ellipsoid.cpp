#include "eulertop/ellipsoid.hpp"

#include <algorithm>
#include <cmath>

#include "eulertop/errors.hpp"

namespace eulertop {

PrincipalRadii ellipsoid_principal_radii(double a, double b, double c, double x, double y,
                                         double z) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0)) {
    throw PreconditionError("ellipsoid_principal_radii: semi-axes must be positive");
  }
  const double on_surface = (x / a) * (x / a) + (y / b) * (y / b) + (z / c) * (z / c);
  if (std::abs(on_surface - 1.0) > 1e-9) {
    throw InvalidPointError("ellipsoid_principal_radii: point is not on the ellipsoid surface");
  }

  const double a2 = a * a, b2 = b * b, c2 = c * c;
  // g = x^2/a^4 + y^2/b^4 + z^2/c^4 (half the squared gradient of the quadric)
  const double g = (x * x) / (a2 * a2) + (y * y) / (b2 * b2) + (z * z) / (c2 * c2);
  const double m = a2 + b2 + c2 - (x * x + y * y + z * z);
  const double prod = 4.0 * a2 * b2 * c2 * g;
  double disc = m * m - prod;
  // The discriminant vanishes at umbilic points (everywhere on a sphere) but
  // rounding leaves it at +-eps * m^2; clamp so umbilics return equal radii
  // instead of an O(sqrt(eps)) split.
  if (std::abs(disc) < 64.0 * 2.2e-16 * (m * m + prod)) disc = 0.0;
  const double root = std::sqrt(std::max(0.0, disc));
  const double num = 2.0 * a2 * b2 * c2 * std::pow(g, 1.5);

  const double r_small = num / (m + root);
  const double r_large = num / (m - root);
  return {r_large, r_small};
}

}  // namespace eulertop
