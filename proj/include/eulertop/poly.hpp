#pragma once

// Degree-6 polynomial whose real roots in [-J, J] are the J3 components of
// stationary angular momenta, plus the root isolation used to extract them.
// Coefficients exist in two algebraically equivalent forms, one in rigid-body
// variables (I, K) and one in twisting variables (chi, Omega); both are
// normalized to a6 = 1.

#include <array>
#include <vector>

#include "eulertop/correspondence.hpp"
#include "eulertop/dynamics.hpp"

namespace eulertop {

struct Degree6Poly {
  std::array<double, 7> a{};  // a[0] + a[1] x + ... + a[6] x^6, a[6] == 1

  double eval(double x) const {
    double r = a[6];
    for (int k = 5; k >= 0; --k) r = r * x + a[k];
    return r;
  }
  double deriv(double x) const {
    double r = 6.0 * a[6];
    for (int k = 5; k >= 1; --k) r = r * x + static_cast<double>(k) * a[k];
    return r;
  }
};

// Rigid-body coefficient set. Requires I3 distinct from I1 and I2 (the
// derivation divides by I3 - I1 and I3 - I2); otherwise throws
// DegenerateAxisError and the caller should use the analytic branch.
Degree6Poly poly_coeffs_classical(const InertiaConfig& cfg, double big_j);

// Twisting-variable coefficient set; requires chi3 distinct from chi1, chi2.
Degree6Poly poly_coeffs_quantum(const TwistingConfig& cfg, double big_j);

struct RealRoot {
  double x;
  int multiplicity;  // 2 when detected as a (near-)double root
};

// All real roots in the closed interval [-J, J], deduplicated at 1e-9*J and
// polished to residual < 1e-12 * max_k |a_k| J^k. Sign-change bisection on a
// 1024-cell Chebyshev-spaced pre-grid plus Newton polishing; double roots are
// found through the roots of the derivative (small p residual there) with a
// fine rescan around each candidate. Sorted ascending; may be empty.
std::vector<RealRoot> real_roots(const Degree6Poly& p, double big_j);

}  // namespace eulertop
