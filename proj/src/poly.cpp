#include "eulertop/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace eulertop {

namespace {

double poly_eval(const std::vector<double>& c, double x) {
  double r = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

std::vector<double> poly_derivative(const std::vector<double>& c) {
  std::vector<double> d;
  d.reserve(c.size() > 1 ? c.size() - 1 : 0);
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
  return d;
}

// Bisection on a bracketing interval followed by Newton polishing.
double refine_root(const std::vector<double>& c, const std::vector<double>& dc, double lo,
                   double hi) {
  double flo = poly_eval(c, lo);
  double fhi = poly_eval(c, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  for (int it = 0; it < 80 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = poly_eval(c, mid);
    if (fm == 0.0) return mid;
    if ((flo < 0.0) != (fm < 0.0)) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 4; ++it) {
    const double d = poly_eval(dc, x);
    if (d == 0.0) break;
    const double step = poly_eval(c, x) / d;
    const double next = x - step;
    if (next < lo || next > hi) break;
    x = next;
  }
  return x;
}

// All simple real roots of c in [lo, hi] via sign changes on a Chebyshev-
// spaced grid of `cells` intervals.
std::vector<double> sign_change_roots(const std::vector<double>& c, double lo, double hi,
                                      int cells) {
  const std::vector<double> dc = poly_derivative(c);
  std::vector<double> roots;
  double x_prev = lo;
  double f_prev = poly_eval(c, x_prev);
  for (int i = 1; i <= cells; ++i) {
    // Chebyshev spacing clusters nodes near the endpoints, where the
    // axis-aligned roots of the stationary polynomial live.
    const double t = -std::cos(std::numbers::pi * static_cast<double>(i) / cells);
    const double x = lo + 0.5 * (hi - lo) * (t + 1.0);
    const double f = poly_eval(c, x);
    if (f == 0.0) {
      roots.push_back(x);
    } else if (f_prev != 0.0 && (f_prev < 0.0) != (f < 0.0)) {
      roots.push_back(refine_root(c, dc, x_prev, x));
    }
    x_prev = x;
    f_prev = f;
  }
  return roots;
}

}  // namespace

Degree6Poly poly_coeffs_classical(const InertiaConfig& cfg, double big_j) {
  const double i1 = cfg.i1, i2 = cfg.i2, i3 = cfg.i3;
  const double k1 = cfg.k1, k2 = cfg.k2, k3 = cfg.k3;
  const double span = std::max({i1, i2, i3}) - std::min({i1, i2, i3});
  if (std::abs(i3 - i1) <= 1e-9 * span || std::abs(i3 - i2) <= 1e-9 * span) {
    throw DegenerateAxisError(
        "poly_coeffs_classical: i3 must be distinct from i1 and i2; use the analytic branch");
  }
  const double j2 = big_j * big_j;
  const double d1 = i3 - i1, d2 = i3 - i2;
  const double dd = d1 * d2;
  const double dd2 = dd * dd;
  const double s = i1 * i3 - 2.0 * i1 * i2 + i2 * i3;
  const double bracket = s * s + 2.0 * i1 * i2 * dd;

  Degree6Poly p;
  p.a[0] = -j2 * k3 * k3 * k3 * k3 * i1 * i1 * i2 * i2 / dd2;
  p.a[1] = -2.0 * j2 * k3 * k3 * k3 * i1 * i2 * s / dd2;
  p.a[2] = (i1 * i1 * i2 * i2 * k3 * k3 * k3 * k3 +
            i3 * i3 * k3 * k3 * (i1 * i1 * k2 * k2 + i2 * i2 * k1 * k1) -
            j2 * k3 * k3 * bracket) /
           dd2;
  p.a[3] = (2.0 * k3 * k3 * k3 * i1 * i2 * s +
            2.0 * k3 * i3 * i3 * (i2 * d2 * k1 * k1 + i1 * d1 * k2 * k2)) /
               dd2 -
           2.0 * j2 * k3 * s / dd;
  p.a[4] = k3 * k3 * bracket / dd2 + i3 * i3 * (k1 * k1 / (d1 * d1) + k2 * k2 / (d2 * d2)) - j2;
  p.a[5] = 2.0 * k3 * s / dd;
  p.a[6] = 1.0;
  return p;
}

Degree6Poly poly_coeffs_quantum(const TwistingConfig& cfg, double big_j) {
  const double c1 = cfg.chi1, c2 = cfg.chi2, c3 = cfg.chi3;
  const double o1 = cfg.omega1, o2 = cfg.omega2, o3 = cfg.omega3;
  // Only eigenvalue differences enter the coefficients, so distinctness is
  // measured against the eigenvalue span, not the absolute magnitude.
  const double span = std::max({c1, c2, c3}) - std::min({c1, c2, c3});
  if (std::abs(c1 - c3) <= 1e-9 * span || std::abs(c2 - c3) <= 1e-9 * span) {
    throw DegenerateAxisError(
        "poly_coeffs_quantum: chi3 must be distinct from chi1 and chi2; use the analytic branch");
  }
  const double j2 = big_j * big_j;
  const double d1 = c1 - c3, d2 = c2 - c3;
  const double dd = d1 * d2;
  const double dd2 = dd * dd;
  const double s = c1 + c2 - 2.0 * c3;
  const double bracket = s * s + 2.0 * dd;

  Degree6Poly p;
  p.a[0] = -j2 * o3 * o3 * o3 * o3 / (16.0 * dd2);
  p.a[1] = j2 * o3 * o3 * o3 * s / (4.0 * dd2);
  p.a[2] = o3 * o3 * (o1 * o1 + o2 * o2 + o3 * o3 - 4.0 * j2 * bracket) / (16.0 * dd2);
  p.a[3] = o3 * (o1 * o1 * (c3 - c2) + o2 * o2 * (c3 - c1) - o3 * o3 * s) / (4.0 * dd2) +
           j2 * o3 * s / dd;
  p.a[4] = o3 * o3 * bracket / (4.0 * dd2) + o1 * o1 / (4.0 * d1 * d1) +
           o2 * o2 / (4.0 * d2 * d2) - j2;
  p.a[5] = -o3 * s / dd;
  p.a[6] = 1.0;
  return p;
}

std::vector<RealRoot> real_roots(const Degree6Poly& p, double big_j) {
  if (!(big_j > 0.0) || !std::isfinite(big_j)) {
    throw PreconditionError("real_roots: |J| must be positive and finite");
  }
  for (double c : p.a) {
    if (!std::isfinite(c)) throw PreconditionError("real_roots: non-finite coefficient");
  }

  // Residual tolerance scale: max_k |a_k| J^k.
  double scale = 0.0;
  {
    double jp = 1.0;
    for (int k = 0; k <= 6; ++k) {
      scale = std::max(scale, std::abs(p.a[k]) * jp);
      jp *= big_j;
    }
  }
  const double res_tol = 1e-12 * scale;
  const double dedup_tol = 1e-9 * big_j;

  const std::vector<double> c(p.a.begin(), p.a.end());
  const std::vector<double> dc = poly_derivative(c);

  std::vector<RealRoot> found;
  for (double r : sign_change_roots(c, -big_j, big_j, 1024)) {
    found.push_back({r, 1});
  }

  // Double roots leave no sign change; they sit at roots of the derivative
  // where p itself is (numerically) zero. A fine rescan around each
  // derivative root also recovers tight simple-root pairs.
  const double cell = 2.0 * big_j / 1024.0;
  for (double r : sign_change_roots(dc, -big_j, big_j, 1024)) {
    if (std::abs(p.eval(r)) < res_tol) {
      found.push_back({r, 2});
    } else {
      const double lo = std::max(-big_j, r - cell);
      const double hi = std::min(big_j, r + cell);
      for (double rr : sign_change_roots(c, lo, hi, 256)) {
        found.push_back({rr, 1});
      }
    }
  }

  // Interval endpoints are legitimate roots (the polar stationary momenta).
  for (double e : {-big_j, big_j}) {
    if (std::abs(p.eval(e)) < res_tol) found.push_back({e, 1});
  }

  std::sort(found.begin(), found.end(), [](const RealRoot& a, const RealRoot& b) { return a.x < b.x; });

  std::vector<RealRoot> out;
  for (const RealRoot& r : found) {
    if (!out.empty() && std::abs(r.x - out.back().x) <= dedup_tol) {
      out.back().multiplicity = std::max(out.back().multiplicity, r.multiplicity);
    } else {
      out.push_back(r);
    }
  }
  // Final residual filter: everything kept must actually solve the polynomial.
  std::erase_if(out, [&](const RealRoot& r) { return std::abs(p.eval(r.x)) > 64.0 * res_tol; });
  return out;
}

}  // namespace eulertop
