#include "eulertop/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace eulertop {

RealMatrix RealMatrix::identity(int n) {
  RealMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& v : d_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::hermiticity_defect() const {
  double m = 0.0;
  for (int r = 0; r < n_; ++r) {
    for (int c = r; c < n_; ++c) {
      m = std::max(m, std::abs(at(r, c) - std::conj(at(c, r))));
    }
  }
  return m;
}

bool ComplexMatrix::is_real(double tol) const {
  for (const cplx& v : d_) {
    if (std::abs(v.imag()) > tol) return false;
  }
  return true;
}

std::vector<cplx> ComplexMatrix::apply(const std::vector<cplx>& v) const {
  std::vector<cplx> out(static_cast<std::size_t>(n_), cplx(0.0, 0.0));
  for (int r = 0; r < n_; ++r) {
    cplx acc(0.0, 0.0);
    for (int c = 0; c < n_; ++c) acc += at(r, c) * v[static_cast<std::size_t>(c)];
    out[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

namespace {

double offdiag_sq(const RealMatrix& a) {
  double s = 0.0;
  const int n = a.size();
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < n; ++c) s += a.at(r, c) * a.at(r, c);
  }
  return 2.0 * s;
}

double frob_sq(const RealMatrix& a) {
  double s = 0.0;
  const int n = a.size();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) s += a.at(r, c) * a.at(r, c);
  }
  return s;
}

}  // namespace

RealEigenSystem jacobi_eigensystem(RealMatrix a, double tol_factor, int max_sweeps) {
  const int n = a.size();
  RealMatrix v = RealMatrix::identity(n);
  if (n == 0) return {{}, v};

  const double target = tol_factor * tol_factor * std::max(frob_sq(a), 1e-300);
  double off_prev = offdiag_sq(a);
  for (int sweep = 0; sweep < max_sweeps && off_prev > target; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a.at(p, q);
        if (apq == 0.0) continue;
        const double app = a.at(p, p), aqq = a.at(q, q);
        // Skip rotations that cannot change anything at working precision.
        if (std::abs(apq) < 1e-300 ||
            std::abs(apq) <= 1e-18 * (std::abs(app) + std::abs(aqq))) {
          continue;
        }
        const double theta = 0.5 * (aqq - app) / apq;
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a.at(p, p) = app - t * apq;
        a.at(q, q) = aqq + t * apq;
        a.at(p, q) = 0.0;
        a.at(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a.at(k, p), akq = a.at(k, q);
          a.at(k, p) = akp - s * (akq + tau * akp);
          a.at(k, q) = akq + s * (akp - tau * akq);
          a.at(p, k) = a.at(k, p);
          a.at(q, k) = a.at(k, q);
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v.at(k, p), vkq = v.at(k, q);
          v.at(k, p) = vkp - s * (vkq + tau * vkp);
          v.at(k, q) = vkq + s * (vkp - tau * vkq);
        }
      }
    }
    const double off = offdiag_sq(a);
    if (off >= off_prev) break;  // stagnated at rounding level
    off_prev = off;
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a.at(x, x) < a.at(y, y); });

  RealEigenSystem sys;
  sys.values.resize(static_cast<std::size_t>(n));
  sys.vectors = RealMatrix(n);
  for (int c = 0; c < n; ++c) {
    sys.values[static_cast<std::size_t>(c)] = a.at(order[c], order[c]);
    for (int r = 0; r < n; ++r) sys.vectors.at(r, c) = v.at(r, order[c]);
  }
  return sys;
}

ComplexEigenSystem hermitian_eigensystem(const ComplexMatrix& h) {
  const int n = h.size();
  const double scale = std::max(h.max_abs(), 1e-300);
  if (h.hermiticity_defect() > 1e-10 * scale) {
    throw PreconditionError("hermitian_eigensystem: input is not Hermitian");
  }

  ComplexEigenSystem sys;
  sys.vectors = ComplexMatrix(n);

  if (h.is_real(1e-300)) {
    RealMatrix a(n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) a.at(r, c) = 0.5 * (h.at(r, c).real() + h.at(c, r).real());
    }
    RealEigenSystem rs = jacobi_eigensystem(std::move(a));
    sys.values = rs.values;
    for (int c = 0; c < n; ++c) {
      for (int r = 0; r < n; ++r) sys.vectors.at(r, c) = cplx(rs.vectors.at(r, c), 0.0);
    }
    return sys;
  }

  // Real-symmetric embedding of H = A + iB: M = [[A, -B], [B, A]].
  RealMatrix m(2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const cplx sym = 0.5 * (h.at(r, c) + std::conj(h.at(c, r)));
      m.at(r, c) = sym.real();
      m.at(n + r, n + c) = sym.real();
      m.at(r, n + c) = -sym.imag();
      m.at(n + r, c) = sym.imag();
    }
  }
  RealEigenSystem rs = jacobi_eigensystem(std::move(m));

  // Every eigenvalue of H shows up twice; each embedded eigenvector (x; y)
  // maps to the complex vector x + iy, and its partner maps to i times the
  // same ray. Walk the sorted pairs and keep an orthonormal set.
  const double span = std::max(std::abs(rs.values.back() - rs.values.front()), 1e-300);
  std::vector<std::vector<cplx>> kept;
  kept.reserve(static_cast<std::size_t>(n));
  sys.values.reserve(static_cast<std::size_t>(n));

  for (int idx = 0; idx < 2 * n && static_cast<int>(kept.size()) < n; ++idx) {
    std::vector<cplx> cand(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
      cand[static_cast<std::size_t>(r)] = cplx(rs.vectors.at(r, idx), rs.vectors.at(n + r, idx));
    }
    // project out previously accepted vectors of (numerically) equal eigenvalue
    for (std::size_t k = 0; k < kept.size(); ++k) {
      if (std::abs(sys.values[k] - rs.values[static_cast<std::size_t>(idx)]) > 1e-8 * span) continue;
      cplx proj(0.0, 0.0);
      for (int r = 0; r < n; ++r) proj += std::conj(kept[k][static_cast<std::size_t>(r)]) * cand[static_cast<std::size_t>(r)];
      for (int r = 0; r < n; ++r) cand[static_cast<std::size_t>(r)] -= proj * kept[k][static_cast<std::size_t>(r)];
    }
    double nn = 0.0;
    for (const cplx& z : cand) nn += std::norm(z);
    if (nn < 0.25) continue;  // same ray as an accepted vector
    const double inv = 1.0 / std::sqrt(nn);
    for (cplx& z : cand) z *= inv;
    // deterministic phase: largest-magnitude component made real positive
    int imax = 0;
    double amax = 0.0;
    for (int r = 0; r < n; ++r) {
      if (std::abs(cand[static_cast<std::size_t>(r)]) > amax) {
        amax = std::abs(cand[static_cast<std::size_t>(r)]);
        imax = r;
      }
    }
    const cplx phase = std::abs(cand[static_cast<std::size_t>(imax)]) /
                       cand[static_cast<std::size_t>(imax)];
    for (cplx& z : cand) z *= phase;

    sys.values.push_back(rs.values[static_cast<std::size_t>(idx)]);
    kept.push_back(std::move(cand));
  }

  if (static_cast<int>(kept.size()) != n) {
    throw Error("hermitian_eigensystem: failed to extract a full eigenbasis from the embedding");
  }
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) sys.vectors.at(r, c) = kept[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
  }
  return sys;
}

}  // namespace eulertop
