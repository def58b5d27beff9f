#include "eulertop/spin.hpp"

#include <algorithm>
#include <cmath>

#include "eulertop/geometry.hpp"

namespace eulertop {

namespace {

double ladder_s(double j, double m) { return std::sqrt(j * (j + 1.0) - m * (m + 1.0)); }

void require_n(int n, int min_n, const char* who) {
  if (n < min_n) {
    throw PreconditionError(std::string(who) + ": particle count must be at least " +
                            std::to_string(min_n));
  }
}

}  // namespace

SpinMatrices spin_matrices(int n) {
  require_n(n, 0, "spin_matrices");
  SpinMatrices sm;
  sm.n = n;
  sm.j = 0.5 * n;
  const int dim = n + 1;
  sm.j1 = ComplexMatrix(dim);
  sm.j2 = ComplexMatrix(dim);
  sm.j3 = ComplexMatrix(dim);
  for (int i = 0; i < dim; ++i) {
    const double m = -sm.j + i;
    sm.j3.at(i, i) = cplx(m, 0.0);
    if (i + 1 < dim) {
      const double s = ladder_s(sm.j, m);  // <m+1| J+ |m>
      sm.j1.at(i + 1, i) = cplx(0.5 * s, 0.0);
      sm.j1.at(i, i + 1) = cplx(0.5 * s, 0.0);
      sm.j2.at(i + 1, i) = cplx(0.0, -0.5 * s);
      sm.j2.at(i, i + 1) = cplx(0.0, 0.5 * s);
    }
  }
  return sm;
}

ComplexMatrix build_hamiltonian(const TwistingConfig& cfg) {
  require_n(cfg.n, 1, "build_hamiltonian");
  const int dim = cfg.n + 1;
  const double j = 0.5 * cfg.n;
  const double casimir = j * (j + 1.0);
  ComplexMatrix h(dim);
  for (int i = 0; i < dim; ++i) {
    const double m = -j + i;
    h.at(i, i) = cplx(cfg.chi3 * m * m + cfg.omega3 * m +
                          0.5 * (cfg.chi1 + cfg.chi2) * (casimir - m * m),
                      0.0);
    if (i + 1 < dim) {
      const double s = ladder_s(j, m);
      const cplx lin = 0.5 * s * cplx(cfg.omega1, -cfg.omega2);  // J+ coefficient
      h.at(i + 1, i) = lin;
      h.at(i, i + 1) = std::conj(lin);
    }
    if (i + 2 < dim) {
      const double s2 = ladder_s(j, m) * ladder_s(j, m + 1.0);
      const double quad = 0.25 * (cfg.chi1 - cfg.chi2) * s2;
      h.at(i + 2, i) = cplx(quad, 0.0);
      h.at(i, i + 2) = cplx(quad, 0.0);
    }
  }
  return h;
}

namespace {

Spectrum spectrum_from_values(std::vector<double> values, const TwistingConfig& cfg) {
  Spectrum s;
  s.cfg = cfg;
  s.energies = std::move(values);
  const double span =
      s.energies.empty() ? 0.0 : s.energies.back() - s.energies.front();
  s.degeneracy_tol = 1e-10 * std::max(1.0, std::abs(span));
  std::size_t start = 0;
  for (std::size_t i = 1; i <= s.energies.size(); ++i) {
    if (i == s.energies.size() || s.energies[i] - s.energies[i - 1] > s.degeneracy_tol) {
      if (i - start >= 2) {
        std::vector<int> grp;
        for (std::size_t k = start; k < i; ++k) grp.push_back(static_cast<int>(k));
        s.degeneracy_groups.push_back(std::move(grp));
      }
      start = i;
    }
  }
  return s;
}

}  // namespace

Spectrum eigensystem(const ComplexMatrix& h) {
  ComplexEigenSystem sys = hermitian_eigensystem(h);
  return spectrum_from_values(std::move(sys.values), TwistingConfig{});
}

EigenSolution eigensystem_full(const ComplexMatrix& h) {
  ComplexEigenSystem sys = hermitian_eigensystem(h);
  return {std::move(sys.values), std::move(sys.vectors)};
}

Spectrum make_spectrum(const TwistingConfig& cfg) {
  ComplexEigenSystem sys = hermitian_eigensystem(build_hamiltonian(cfg));
  return spectrum_from_values(std::move(sys.values), cfg);
}

std::vector<Spectrum> spectrum_sweep(const TwistingConfig& base, const Vec3& direction,
                                     const std::vector<double>& omega_over_j_grid,
                                     Execution exec) {
  require_n(base.n, 1, "spectrum_sweep");
  if (!std::is_sorted(omega_over_j_grid.begin(), omega_over_j_grid.end())) {
    throw PreconditionError("spectrum_sweep: grid must be sorted ascending");
  }
  const Vec3 unit = normalized(direction);
  const double big_j = base.j();
  std::vector<Spectrum> out(omega_over_j_grid.size());
  for_index(omega_over_j_grid.size(), exec, [&](std::size_t i) {
    TwistingConfig cfg = base;
    const double w = omega_over_j_grid[i] * big_j;
    cfg.omega1 = unit.x * w;
    cfg.omega2 = unit.y * w;
    cfg.omega3 = unit.z * w;
    out[i] = make_spectrum(cfg);
  });
  return out;
}

const char* to_string(SingularityKind k) {
  switch (k) {
    case SingularityKind::SupportMin: return "support_min";
    case SingularityKind::SupportMax: return "support_max";
    case SingularityKind::Peak: return "peak";
    default: return "discontinuity";
  }
}

SingularityReport spectral_singularities(const Spectrum& s,
                                         const std::vector<StationaryPoint>& classical_points) {
  const std::vector<double>& e = s.energies;
  const int m = static_cast<int>(e.size()) - 1;
  if (m < 20) {
    throw PreconditionError("spectral_singularities: need at least 21 levels");
  }
  SingularityReport report;
  report.mean_spacing = (e.back() - e.front()) / m;
  if (!(report.mean_spacing > 0.0)) {
    throw PreconditionError("spectral_singularities: degenerate spectrum support");
  }

  report.singularities.push_back({e.front(), SingularityKind::SupportMin});
  report.singularities.push_back({e.back(), SingularityKind::SupportMax});

  // Inverse nearest-neighbour spacing smoothed over a 5-level window. The
  // window spans four spacings, which keeps tunnelling-pair alternation out
  // of the estimate.
  std::vector<double> rho(e.size(), 0.0);
  for (int i = 2; i <= m - 2; ++i) {
    const double w = e[i + 2] - e[i - 2];
    rho[i] = w > 0.0 ? 4.0 / w : 0.0;
  }
  std::vector<double> interior(rho.begin() + 2, rho.end() - 2);
  std::nth_element(interior.begin(), interior.begin() + interior.size() / 2, interior.end());
  const double baseline = interior[interior.size() / 2];

  // density peaks: local maxima well above the baseline density
  std::vector<int> peak_idx;
  for (int i = 4; i <= m - 4; ++i) {
    if (rho[i] < 1.4 * baseline) continue;
    if (rho[i] >= rho[i - 1] && rho[i] >= rho[i - 2] && rho[i] > rho[i + 1] && rho[i] > rho[i + 2]) {
      if (!peak_idx.empty() && i - peak_idx.back() <= 2) {
        if (rho[i] > rho[peak_idx.back()]) peak_idx.back() = i;
      } else {
        peak_idx.push_back(i);
      }
    }
  }
  for (int i : peak_idx) report.singularities.push_back({e[i], SingularityKind::Peak});

  // interior discontinuities: sharp jump between the densities estimated
  // from a few spacings on either side
  std::vector<double> jump(e.size(), 0.0);
  for (int i = 3; i <= m - 3; ++i) {
    const double left = e[i] - e[i - 3];
    const double right = e[i + 3] - e[i];
    if (!(left > 0.0) || !(right > 0.0)) continue;
    const double ratio = right / left;
    jump[i] = std::max(ratio, 1.0 / ratio);
  }
  for (int i = 3; i <= m - 3; ++i) {
    if (jump[i] < 1.7) continue;
    if (jump[i] < jump[i - 1] || jump[i] <= jump[i + 1]) continue;
    bool near_peak = false;
    for (int p : peak_idx) near_peak = near_peak || std::abs(p - i) <= 2;
    if (!near_peak) report.singularities.push_back({e[i], SingularityKind::Discontinuity});
  }

  std::sort(report.singularities.begin(), report.singularities.end(),
            [](const SpectralSingularity& a, const SpectralSingularity& b) {
              return a.energy < b.energy;
            });

  for (const StationaryPoint& cp : classical_points) {
    const SpectralSingularity* best = nullptr;
    for (const SpectralSingularity& sg : report.singularities) {
      if (best == nullptr ||
          std::abs(sg.energy - cp.energy) < std::abs(best->energy - cp.energy)) {
        best = &sg;
      }
    }
    const double off = std::abs(best->energy - cp.energy);
    report.matches.push_back(
        {cp.energy, cp.stability, best->energy, best->kind, off, off / report.mean_spacing});
  }
  return report;
}

double QuantumState::norm() const {
  double s = 0.0;
  for (const cplx& a : amps) s += std::norm(a);
  return std::sqrt(s);
}

QuantumState spin_coherent_state(double theta, double phi, int n) {
  require_n(n, 1, "spin_coherent_state");
  QuantumState st;
  st.n = n;
  st.amps.assign(static_cast<std::size_t>(n) + 1, cplx(0.0, 0.0));
  const double c = std::cos(0.5 * theta);
  const double sn = std::sin(0.5 * theta);
  // amplitude of m = j - k: sqrt(C(n,k)) cos^(n-k) sin^k e^{i k phi}
  for (int k = 0; k <= n; ++k) {
    double amp;
    if (sn == 0.0) {
      amp = k == 0 ? 1.0 : 0.0;
    } else if (c == 0.0) {
      amp = k == n ? 1.0 : 0.0;
    } else {
      const double lg = 0.5 * (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                               std::lgamma(n - k + 1.0)) +
                        (n - k) * std::log(std::abs(c)) + k * std::log(std::abs(sn));
      amp = std::exp(lg);
      if (c < 0.0 && (n - k) % 2 != 0) amp = -amp;
      if (sn < 0.0 && k % 2 != 0) amp = -amp;
    }
    const int i = n - k;  // basis index of m = j - k
    st.amps[static_cast<std::size_t>(i)] = amp * std::polar(1.0, k * phi);
  }
  return st;
}

std::vector<MomentSample> evolve_moments(const QuantumState& state, const TwistingConfig& cfg,
                                         const std::vector<double>& times, Execution exec) {
  require_n(cfg.n, 1, "evolve_moments");
  if (state.n != cfg.n) {
    throw PreconditionError("evolve_moments: state and config particle counts differ");
  }
  const int dim = cfg.n + 1;
  const EigenSolution eig = eigensystem_full(build_hamiltonian(cfg));
  const SpinMatrices sm = spin_matrices(cfg.n);

  // eigenbasis amplitudes a = V^dagger psi0
  std::vector<cplx> a(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k) {
    cplx acc(0.0, 0.0);
    for (int r = 0; r < dim; ++r) acc += std::conj(eig.vectors.at(r, k)) * state.amps[static_cast<std::size_t>(r)];
    a[static_cast<std::size_t>(k)] = acc;
  }

  std::vector<MomentSample> out(times.size());
  for_index(times.size(), exec, [&](std::size_t ti) {
    const double t = times[ti];
    std::vector<cplx> psi(static_cast<std::size_t>(dim), cplx(0.0, 0.0));
    for (int k = 0; k < dim; ++k) {
      const cplx coef = a[static_cast<std::size_t>(k)] * std::polar(1.0, -eig.energies[static_cast<std::size_t>(k)] * t);
      for (int r = 0; r < dim; ++r) psi[static_cast<std::size_t>(r)] += coef * eig.vectors.at(r, k);
    }

    const std::vector<cplx> w[3] = {sm.j1.apply(psi), sm.j2.apply(psi), sm.j3.apply(psi)};
    MomentSample& ms = out[ti];
    ms.t = t;
    double nn = 0.0;
    for (const cplx& z : psi) nn += std::norm(z);
    ms.state_norm = std::sqrt(nn);

    double mean[3];
    for (int b = 0; b < 3; ++b) {
      cplx acc(0.0, 0.0);
      for (int r = 0; r < dim; ++r) acc += std::conj(psi[static_cast<std::size_t>(r)]) * w[b][static_cast<std::size_t>(r)];
      mean[b] = acc.real();
    }
    ms.mean = {mean[0], mean[1], mean[2]};
    for (int bi = 0; bi < 3; ++bi) {
      for (int bk = bi; bk < 3; ++bk) {
        cplx acc(0.0, 0.0);
        for (int r = 0; r < dim; ++r) acc += std::conj(w[bi][static_cast<std::size_t>(r)]) * w[bk][static_cast<std::size_t>(r)];
        const double c2 = acc.real() - mean[bi] * mean[bk];  // symmetrized by Re(...)
        ms.cov[bi][bk] = c2;
        ms.cov[bk][bi] = c2;
      }
    }

    const double mlen = norm(ms.mean);
    const Vec3 dir = mlen > 1e-12 ? ms.mean / mlen : Vec3{0.0, 0.0, 1.0};
    const TangentBasis tb = tangent_basis(dir);
    auto quad = [&](const Vec3& u, const Vec3& v) {
      double s = 0.0;
      const double uu[3] = {u.x, u.y, u.z};
      const double vv[3] = {v.x, v.y, v.z};
      for (int bi = 0; bi < 3; ++bi) {
        for (int bk = 0; bk < 3; ++bk) s += uu[bi] * ms.cov[bi][bk] * vv[bk];
      }
      return s;
    };
    const VarianceEllipse ve = covariance_ellipse(quad(tb.e_theta, tb.e_theta),
                                                  quad(tb.e_theta, tb.e_phi),
                                                  quad(tb.e_phi, tb.e_phi));
    ms.var_major = ve.var_major;
    ms.var_minor = ve.var_minor;
    ms.tilt = ve.tilt;
  });
  return out;
}

}  // namespace eulertop
