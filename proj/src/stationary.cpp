#include "eulertop/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <queue>

#include "eulertop/ellipsoid.hpp"
#include "eulertop/geometry.hpp"

namespace eulertop {

const char* to_string(Stability s) {
  switch (s) {
    case Stability::StableMin: return "stable_min";
    case Stability::StableMax: return "stable_max";
    case Stability::Saddle: return "saddle";
    default: return "marginal";
  }
}

const char* to_string(Branch b) {
  switch (b) {
    case Branch::GenericRoot: return "generic_root";
    case Branch::AxisPole: return "axis_pole";
    default: return "analytic_lmg";
  }
}

const char* to_string(LocalType t) {
  switch (t) {
    case LocalType::Max: return "max";
    case LocalType::Min: return "min";
    default: return "saddle";
  }
}

namespace {

struct RawPoint {
  Vec3 pos;
  Branch branch;
};

struct RawAnalysis {
  std::vector<RawPoint> points;
  bool ring = false;
  int ring_axis = -1;
  double ring_coord = 0.0;
  bool sphere = false;
};

double field_scale(const FieldCoeffs& f, double big_j) {
  return (std::abs(f.a1) + std::abs(f.a2) + std::abs(f.a3)) * big_j * big_j +
         (std::abs(f.b1) + std::abs(f.b2) + std::abs(f.b3)) * big_j + 1e-300;
}

Vec3 axis_vec(int k, double v) {
  Vec3 r;
  component(r, k) = v;
  return r;
}

// Stationary momenta of the flow given by eigenvalues chi and linear term om,
// on the sphere of radius big_j. Everything is done in twisting variables;
// classical configs are mapped exactly beforehand.
RawAnalysis find_raw(Vec3 chi_v, Vec3 om_v, double big_j) {
  RawAnalysis out;
  double ch[3] = {chi_v.x, chi_v.y, chi_v.z};
  double om[3] = {om_v.x, om_v.y, om_v.z};
  const double J = big_j;

  const double chi_max = std::max({ch[0], ch[1], ch[2]});
  const double chi_min = std::min({ch[0], ch[1], ch[2]});
  const double chi_span = chi_max - chi_min;
  const double chi_abs = std::max({std::abs(ch[0]), std::abs(ch[1]), std::abs(ch[2])});
  const double om_norm = std::sqrt(om[0] * om[0] + om[1] * om[1] + om[2] * om[2]);

  // Isotropic tensor: the quadratic part is constant on the sphere.
  if (chi_span <= 1e-13 * std::max(chi_abs, 1e-300)) {
    if (om_norm == 0.0) {
      out.sphere = true;  // every direction is stationary
      return out;
    }
    const Vec3 u = Vec3{om[0], om[1], om[2]} / om_norm;
    out.points.push_back({J * u, Branch::AxisPole});
    out.points.push_back({(-J) * u, Branch::AxisPole});
    return out;
  }

  const double tol_eq = 1e-9 * chi_span;

  // Detect a symmetric pair (at most one once the isotropic case is gone).
  int pa = -1, pb = -1, pc = -1;
  for (int k = 0; k < 3; ++k) {
    const int l = (k + 1) % 3;
    if (std::abs(ch[k] - ch[l]) <= tol_eq) {
      pa = k;
      pb = l;
      pc = 3 - k - l;
    }
  }

  // A symmetric pair leaves the tensor invariant under rotations in its
  // plane; rotate the linear term so only one in-plane component survives.
  double rot_c = 1.0, rot_s = 0.0;
  bool rotated = false;
  if (pa >= 0 && std::abs(om[pb]) > 0.0) {
    const double oa = om[pa], ob = om[pb];
    const double h = std::hypot(oa, ob);
    rot_c = oa / h;
    rot_s = ob / h;
    om[pa] = h;
    om[pb] = 0.0;
    rotated = true;
  }

  const double om_scale = std::max({std::abs(om[0]), std::abs(om[1]), std::abs(om[2])});
  bool zero[3];
  int n_nonzero = 0;
  for (int k = 0; k < 3; ++k) {
    zero[k] = std::abs(om[k]) <= 1e-13 * om_scale || om_scale == 0.0;
    if (!zero[k]) ++n_nonzero;
  }

  auto emit = [&](const Vec3& p, Branch b) { out.points.push_back({p, b}); };

  if (n_nonzero == 0) {
    // Free rotation: the principal axes, or poles plus a degenerate circle
    // for a symmetric top.
    if (pa >= 0) {
      emit(axis_vec(pc, J), Branch::AxisPole);
      emit(axis_vec(pc, -J), Branch::AxisPole);
      out.ring = true;
      out.ring_axis = pc;
      out.ring_coord = 0.0;
    } else {
      for (int k = 0; k < 3; ++k) {
        emit(axis_vec(k, J), Branch::AxisPole);
        emit(axis_vec(k, -J), Branch::AxisPole);
      }
    }
  } else if (n_nonzero == 1) {
    // Linear term along a single axis s: poles are always stationary, and
    // each transverse axis u with chi_u != chi_s contributes a tilted pair at
    // J_s = om_s / (2 (chi_u - chi_s)) while that latitude exists.
    int s = 0;
    for (int k = 0; k < 3; ++k) {
      if (!zero[k]) s = k;
    }
    emit(axis_vec(s, J), Branch::AxisPole);
    emit(axis_vec(s, -J), Branch::AxisPole);
    if (pa >= 0 && pc == s) {
      // equal transverse eigenvalues: the two pair families merge into a ring
      const double t = om[s] / (2.0 * (ch[pa] - ch[s]));
      if (std::abs(t) < J) {
        out.ring = true;
        out.ring_axis = s;
        out.ring_coord = t;
      }
    } else {
      for (int u = 0; u < 3; ++u) {
        if (u == s || std::abs(ch[u] - ch[s]) <= tol_eq) continue;
        const double t = om[s] / (2.0 * (ch[u] - ch[s]));
        if (std::abs(t) < J) {
          const double w = std::sqrt(std::max(0.0, J * J - t * t));
          Vec3 p;
          component(p, s) = t;
          component(p, u) = w;
          emit(p, Branch::AnalyticLmg);
          component(p, u) = -w;
          emit(p, Branch::AnalyticLmg);
        }
      }
    }
  } else {
    const FieldCoeffs fc = [&] {
      TwistingConfig t;
      t.chi1 = ch[0];
      t.chi2 = ch[1];
      t.chi3 = ch[2];
      t.omega1 = om[0];
      t.omega2 = om[1];
      t.omega3 = om[2];
      return quantum_field_coeffs(t);
    }();
    const double f_scale = field_scale(fc, J);
    auto residual_ok = [&](const Vec3& p) { return norm(fc.eval(p)) <= 1e-6 * f_scale; };

    // Families pinned to a zero-linear-term axis: the multiplier sits at that
    // axis's eigenvalue, the two driven components follow, and the norm
    // closes the remaining one.
    for (int k = 0; k < 3; ++k) {
      if (!zero[k]) continue;
      bool feasible = true;
      Vec3 q;
      double sum2 = 0.0;
      for (int l = 0; l < 3; ++l) {
        if (l == k) continue;
        if (std::abs(ch[k] - ch[l]) <= tol_eq) {
          feasible = false;
          break;
        }
        const double val = om[l] / (2.0 * (ch[k] - ch[l]));
        component(q, l) = val;
        sum2 += val * val;
      }
      if (!feasible) continue;
      const double rem = J * J - sum2;
      if (rem < 0.0) continue;
      const double w = std::sqrt(rem);
      component(q, k) = w;
      emit(q, Branch::AnalyticLmg);
      if (w > 0.0) {
        component(q, k) = -w;
        emit(q, Branch::AnalyticLmg);
      }
    }

    // Polynomial branch. Special axis: largest driven |om| among axes whose
    // eigenvalue is distinct from both others (the coefficient denominators).
    int s = -1;
    double best = -1.0;
    for (int k = 0; k < 3; ++k) {
      if (zero[k]) continue;
      const int l1 = (k + 1) % 3, l2 = (k + 2) % 3;
      if (std::abs(ch[k] - ch[l1]) <= tol_eq || std::abs(ch[k] - ch[l2]) <= tol_eq) continue;
      if (std::abs(om[k]) > best) {
        best = std::abs(om[k]);
        s = k;
      }
    }
    if (s < 0) {
      throw DegenerateAxisError(
          "stationary_points: no axis with distinct eigenvalue carries a linear term");
    }
    const int u = (s + 1) % 3 < (s + 2) % 3 ? (s + 1) % 3 : (s + 2) % 3;
    const int v = 3 - s - u;

    TwistingConfig perm;
    perm.chi1 = ch[u];
    perm.chi2 = ch[v];
    perm.chi3 = ch[s];
    perm.omega1 = om[u];
    perm.omega2 = om[v];
    perm.omega3 = om[s];

    const Degree6Poly poly = poly_coeffs_quantum(perm, J);
    for (const RealRoot& root : real_roots(poly, J)) {
      const double r = root.x;
      double comp[2];
      bool degenerate[2];
      const int axes[2] = {u, v};
      for (int idx = 0; idx < 2; ++idx) {
        const int a = axes[idx];
        const double den = 2.0 * (ch[s] - ch[a]) * r + om[s];
        const double den_scale = 2.0 * std::abs(ch[s] - ch[a]) * J + std::abs(om[s]);
        degenerate[idx] = std::abs(den) <= 1e-8 * den_scale;
        comp[idx] = degenerate[idx] ? 0.0 : om[a] * r / den;
      }
      if (!degenerate[0] && !degenerate[1]) {
        Vec3 p;
        component(p, s) = r;
        component(p, u) = comp[0];
        component(p, v) = comp[1];
        if (std::abs(norm(p) - J) <= 1e-8 * J) emit(p, Branch::GenericRoot);
      } else if (degenerate[0] != degenerate[1]) {
        // One driven component is ill-conditioned at this root; close it
        // through the norm and keep the signs that are genuinely stationary.
        const int good = degenerate[0] ? 1 : 0;
        const int bad = 1 - good;
        const double rem = J * J - r * r - comp[good] * comp[good];
        if (rem >= -1e-12 * J * J) {
          const double w = std::sqrt(std::max(0.0, rem));
          for (double sign : {1.0, -1.0}) {
            Vec3 p;
            component(p, s) = r;
            component(p, axes[good]) = comp[good];
            component(p, axes[bad]) = sign * w;
            if (residual_ok(p)) emit(p, Branch::GenericRoot);
            if (w == 0.0) break;
          }
        }
      }
      // Both denominators degenerate at one root would be a ring-like set;
      // the symmetric-top canonicalization above removes those configs.
    }
  }

  // Undo the symmetric-plane rotation.
  if (rotated) {
    for (RawPoint& rp : out.points) {
      const double a = component(rp.pos, pa), b = component(rp.pos, pb);
      component(rp.pos, pa) = rot_c * a - rot_s * b;
      component(rp.pos, pb) = rot_s * a + rot_c * b;
    }
  }

  // Deduplicate merged points (pair families collapsing onto a pole at a
  // critical magnitude).
  std::sort(out.points.begin(), out.points.end(), [](const RawPoint& x, const RawPoint& y) {
    if (x.pos.z != y.pos.z) return x.pos.z < y.pos.z;
    if (x.pos.x != y.pos.x) return x.pos.x < y.pos.x;
    return x.pos.y < y.pos.y;
  });
  std::vector<RawPoint> dedup;
  for (const RawPoint& rp : out.points) {
    if (!dedup.empty() && norm(rp.pos - dedup.back().pos) <= 1e-7 * J) continue;
    dedup.push_back(rp);
  }
  out.points = std::move(dedup);
  return out;
}

// Curvature/half-space classification against an explicit quadric
//   sum_k q_k (x_k - c_k)^2 = Q0 through the point p. q_k > 0.
StabilityInfo classify_quadric(const Vec3& p, const double q[3], const Vec3& c, double big_j) {
  const Vec3 d = p - c;
  const double q0 = q[0] * d.x * d.x + q[1] * d.y * d.y + q[2] * d.z * d.z;
  if (!(q0 > 1e-280)) {
    // The surface degenerates to the point itself: an isolated minimum.
    return {Stability::StableMin, 0.0, 0.0};
  }
  const double a = std::sqrt(q0 / q[0]);
  const double b = std::sqrt(q0 / q[1]);
  const double cc = std::sqrt(q0 / q[2]);
  const PrincipalRadii r = ellipsoid_principal_radii(a, b, cc, d.x, d.y, d.z);

  StabilityInfo info{Stability::Marginal, r.r1, r.r2};
  const double band = 1e-6 * big_j;
  if (std::abs(r.r1 - big_j) <= band || std::abs(r.r2 - big_j) <= band) {
    return info;
  }
  const Vec3 n = p / big_j;  // outward sphere normal at the contact point
  const double side = dot(n, c - p);
  if (side > 0.0) {
    // Surface center beyond the tangent plane: external contact, a minimum.
    info.stability = Stability::StableMin;
  } else if (r.r1 > big_j && r.r2 > big_j) {
    info.stability = Stability::StableMax;
  } else if (r.r1 < big_j && r.r2 < big_j) {
    info.stability = Stability::StableMin;
  } else {
    info.stability = Stability::Saddle;
  }
  return info;
}

StabilityInfo stability_core(const BodyState& p, const TwistingConfig& cfg, double big_j) {
  double q[3] = {cfg.chi1, cfg.chi2, cfg.chi3};
  const double mn = std::min({q[0], q[1], q[2]});
  if (!(mn > 0.0)) {
    const double mx = std::max({std::abs(q[0]), std::abs(q[1]), std::abs(q[2])});
    const double shift = -mn + (mx > 0.0 ? mx : 1.0);
    for (double& x : q) x += shift;
  }
  const Vec3 c{-cfg.omega1 / (2.0 * q[0]), -cfg.omega2 / (2.0 * q[1]),
               -cfg.omega3 / (2.0 * q[2])};
  return classify_quadric(p.vec(), q, c, big_j);
}

StabilityInfo stability_core(const BodyState& p, const InertiaConfig& cfg, double big_j) {
  // E_body surface: sum (J_k - K_k)^2 / (2 I_k) = E.
  const double q[3] = {0.5 / cfg.i1, 0.5 / cfg.i2, 0.5 / cfg.i3};
  return classify_quadric(p.vec(), q, cfg.k(), big_j);
}

void require_stationary(const Vec3& f, const FieldCoeffs& coeffs, double big_j) {
  if (norm(f) > 1e-6 * field_scale(coeffs, big_j)) {
    throw PreconditionError("classify_stability: input state is not stationary");
  }
}

void require_big_j(double big_j) {
  if (!(big_j > 0.0) || !std::isfinite(big_j)) {
    throw PreconditionError("|J| must be positive and finite");
  }
}

bool any_degenerate_energy(const std::vector<const StationaryPoint*>& pts, double tol) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t k = i + 1; k < pts.size(); ++k) {
      if (std::abs(pts[i]->energy - pts[k]->energy) <= tol) return true;
    }
  }
  return false;
}

}  // namespace

StationaryAnalysis stationary_points(const TwistingConfig& cfg, double big_j) {
  require_big_j(big_j);
  RawAnalysis raw = find_raw(cfg.chi(), cfg.omega(), big_j);
  StationaryAnalysis out;
  out.degenerate_ring = raw.ring;
  out.ring_axis = raw.ring_axis;
  out.ring_coord = raw.ring_coord;
  out.degenerate_sphere = raw.sphere;
  out.points.reserve(raw.points.size());
  for (const RawPoint& rp : raw.points) {
    StationaryPoint sp;
    sp.j = BodyState::from(rp.pos);
    sp.branch = rp.branch;
    sp.energy = quantum_energy(sp.j, cfg);
    const StabilityInfo info = stability_core(sp.j, cfg, big_j);
    sp.stability = info.stability;
    sp.r1 = info.r1;
    sp.r2 = info.r2;
    out.points.push_back(sp);
  }
  return out;
}

StationaryAnalysis stationary_points(const InertiaConfig& cfg, double big_j) {
  require_big_j(big_j);
  const TwistingConfig q = quantum_from_classical(cfg);
  RawAnalysis raw = find_raw(q.chi(), q.omega(), big_j);
  StationaryAnalysis out;
  out.degenerate_ring = raw.ring;
  out.ring_axis = raw.ring_axis;
  out.ring_coord = raw.ring_coord;
  out.degenerate_sphere = raw.sphere;
  out.points.reserve(raw.points.size());
  for (const RawPoint& rp : raw.points) {
    StationaryPoint sp;
    sp.j = BodyState::from(rp.pos);
    sp.branch = rp.branch;
    sp.energy = body_energy(sp.j, cfg);
    const StabilityInfo info = stability_core(sp.j, cfg, big_j);
    sp.stability = info.stability;
    sp.r1 = info.r1;
    sp.r2 = info.r2;
    out.points.push_back(sp);
  }
  return out;
}

std::array<LmgStationaryEnergy, 6> lmg_stationary_energies(const TwistingConfig& cfg,
                                                           double big_j) {
  require_big_j(big_j);
  const double scale =
      std::max({std::abs(cfg.omega1), std::abs(cfg.omega2), std::abs(cfg.omega3), 1e-300});
  if (std::abs(cfg.omega1) > 1e-12 * scale || std::abs(cfg.omega2) > 1e-12 * scale) {
    throw NotLmgError("lmg_stationary_energies: linear term must lie along axis 3");
  }
  const double J = big_j, J2 = big_j * big_j;
  const double o3 = cfg.omega3;
  std::array<LmgStationaryEnergy, 6> e{};
  e[0] = {"i", cfg.chi3 * J2 + o3 * J, true};
  e[1] = {"ii", cfg.chi3 * J2 - o3 * J, true};
  const double d1 = cfg.chi1 - cfg.chi3;
  const double d2 = cfg.chi2 - cfg.chi3;
  const bool ex1 = d1 != 0.0 && std::abs(o3) < 2.0 * std::abs(d1) * J;
  const bool ex2 = d2 != 0.0 && std::abs(o3) < 2.0 * std::abs(d2) * J;
  const double e1 = d1 != 0.0 ? cfg.chi1 * J2 + o3 * o3 / (4.0 * d1) : 0.0;
  const double e2 = d2 != 0.0 ? cfg.chi2 * J2 + o3 * o3 / (4.0 * d2) : 0.0;
  e[2] = {"iii", e1, ex1};
  e[3] = {"iv", e1, ex1};
  e[4] = {"v", e2, ex2};
  e[5] = {"vi", e2, ex2};
  return e;
}

StabilityInfo stability_info(const BodyState& p, const TwistingConfig& cfg, double big_j) {
  require_big_j(big_j);
  const FieldCoeffs f = quantum_field_coeffs(cfg);
  require_stationary(f.eval(p.vec()), f, big_j);
  return stability_core(p, cfg, big_j);
}

StabilityInfo stability_info(const BodyState& p, const InertiaConfig& cfg, double big_j) {
  require_big_j(big_j);
  const FieldCoeffs f = FieldCoeffs::from(cfg);
  require_stationary(f.eval(p.vec()), f, big_j);
  return stability_core(p, cfg, big_j);
}

Stability classify_stability(const BodyState& p, const TwistingConfig& cfg, double big_j) {
  return stability_info(p, cfg, big_j).stability;
}

Stability classify_stability(const BodyState& p, const InertiaConfig& cfg, double big_j) {
  return stability_info(p, cfg, big_j).stability;
}

PhaseDiagram phase_sweep(const TwistingConfig& base, const Vec3& direction,
                         const std::vector<double>& omega_over_j_grid, double big_j,
                         Execution exec) {
  require_big_j(big_j);
  if (omega_over_j_grid.empty()) {
    throw PreconditionError("phase_sweep: empty sweep grid");
  }
  if (!std::is_sorted(omega_over_j_grid.begin(), omega_over_j_grid.end())) {
    throw PreconditionError("phase_sweep: grid must be sorted ascending");
  }
  const Vec3 unit = normalized(direction);

  auto cfg_at = [&](double w) {
    TwistingConfig c = base;
    c.omega1 = unit.x * w * big_j;
    c.omega2 = unit.y * w * big_j;
    c.omega3 = unit.z * w * big_j;
    return c;
  };

  PhaseDiagram diagram;
  diagram.direction = unit;
  diagram.big_j = big_j;
  diagram.per_point.resize(omega_over_j_grid.size());

  for_index(omega_over_j_grid.size(), exec, [&](std::size_t i) {
    diagram.per_point[i] = {omega_over_j_grid[i],
                            stationary_points(cfg_at(omega_over_j_grid[i]), big_j)};
  });

  auto count_at = [&](double w) {
    return stationary_points(cfg_at(w), big_j).points.size();
  };

  for (std::size_t i = 0; i + 1 < omega_over_j_grid.size(); ++i) {
    std::size_t c_lo = diagram.per_point[i].analysis.points.size();
    std::size_t c_hi = diagram.per_point[i + 1].analysis.points.size();
    if (c_lo == c_hi) continue;
    double lo = omega_over_j_grid[i], hi = omega_over_j_grid[i + 1];
    while (hi - lo > 1e-9 * std::max(1.0, std::abs(hi))) {
      const double mid = 0.5 * (lo + hi);
      if (count_at(mid) == c_lo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    diagram.criticals.push_back(0.5 * (lo + hi));
  }
  std::sort(diagram.criticals.begin(), diagram.criticals.end());

  // Label the intervals between consecutive criticals from a midpoint sample.
  std::vector<double> bounds;
  bounds.push_back(omega_over_j_grid.front());
  for (double c : diagram.criticals) bounds.push_back(c);
  bounds.push_back(omega_over_j_grid.back());
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    if (!(bounds[i + 1] > bounds[i])) continue;
    const double mid = 0.5 * (bounds[i] + bounds[i + 1]);
    const StationaryAnalysis mid_an = stationary_points(cfg_at(mid), big_j);

    PhaseInterval interval;
    interval.from = bounds[i];
    interval.to = bounds[i + 1];
    interval.point_count = static_cast<int>(mid_an.points.size());

    double e_lo = 0.0, e_hi = 0.0, e_abs = 0.0;
    std::vector<const StationaryPoint*> saddles, maxima, minima;
    for (const StationaryPoint& sp : mid_an.points) {
      e_lo = std::min(e_lo, sp.energy);
      e_hi = std::max(e_hi, sp.energy);
      e_abs = std::max(e_abs, std::abs(sp.energy));
      if (sp.stability == Stability::Saddle) saddles.push_back(&sp);
      if (sp.stability == Stability::StableMax) maxima.push_back(&sp);
      if (sp.stability == Stability::StableMin) minima.push_back(&sp);
    }
    const double tol_e = 1e-9 * ((e_hi - e_lo) + e_abs + 1e-300);
    interval.saddle_count = static_cast<int>(saddles.size());
    interval.degenerate_saddles = any_degenerate_energy(saddles, tol_e);
    interval.degenerate_extrema =
        any_degenerate_energy(maxima, tol_e) || any_degenerate_energy(minima, tol_e);
    switch (interval.saddle_count) {
      case 0: interval.zone = "I"; break;
      case 1: interval.zone = "II"; break;
      case 2: interval.zone = interval.degenerate_saddles ? "IV" : "III"; break;
      default: interval.zone = "-"; break;
    }
    diagram.intervals.push_back(interval);
  }
  return diagram;
}

namespace {

// The scan grid is tilted by a fixed generic rotation so that stationary
// momenta sitting on coordinate axes (the common case) never coincide with
// the grid poles, where the neighbourhood test is weakest.
Vec3 scan_rotate(const Vec3& v) {
  static const double ca = std::cos(0.41), sa = std::sin(0.41);
  static const double cb = std::cos(0.73), sb = std::sin(0.73);
  const Vec3 r1{v.x, ca * v.y - sa * v.z, sa * v.y + ca * v.z};
  return {cb * r1.x - sb * r1.z, r1.y, sb * r1.x + cb * r1.z};
}

std::vector<BruteForcePoint> brute_force_impl(const std::function<double(const Vec3&)>& energy,
                                              double big_j, int nt, int np, Execution exec) {
  require_big_j(big_j);
  if (nt < 64 || np < 128) {
    throw PreconditionError("brute_force_stationary: grid must be at least 64 x 128");
  }
  if (np % 2 != 0) {
    throw PreconditionError("brute_force_stationary: n_phi must be even");
  }
  const std::size_t cells = static_cast<std::size_t>(nt) * static_cast<std::size_t>(np);
  std::vector<Vec3> dir(cells);
  std::vector<double> val(cells);

  for_index(static_cast<std::size_t>(nt), exec, [&](std::size_t i) {
    const double theta = std::numbers::pi * (static_cast<double>(i) + 0.5) / nt;
    const double st = std::sin(theta), ct = std::cos(theta);
    for (int j = 0; j < np; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / np;
      const Vec3 d = scan_rotate({st * std::cos(phi), st * std::sin(phi), ct});
      dir[i * np + j] = d;
      val[i * np + j] = energy(big_j * d);
    }
  });

  double v_lo = val[0], v_hi = val[0];
  for (double v : val) {
    v_lo = std::min(v_lo, v);
    v_hi = std::max(v_hi, v);
  }
  if (!(v_hi > v_lo)) return {};  // flat energy: nothing to classify
  const double tie_tol = 1e-12 * (v_hi - v_lo);

  auto neighbor = [&](int i, int j, int di, int dj) {
    int jj = (j + dj + np) % np;
    int ii = i + di;
    if (ii < 0) {
      ii = 0;
      jj = (jj + np / 2) % np;
    } else if (ii >= nt) {
      ii = nt - 1;
      jj = (jj + np / 2) % np;
    }
    return ii * np + jj;
  };

  // cyclic 8-neighbourhood offsets
  static const int off[8][2] = {{0, 1},  {-1, 1},  {-1, 0}, {-1, -1},
                                {0, -1}, {1, -1}, {1, 0},  {1, 1}};

  std::vector<signed char> type(cells, 0);  // 0 none, 1 max, 2 min, 3 saddle
  for_index(static_cast<std::size_t>(nt), exec, [&](std::size_t iu) {
    const int i = static_cast<int>(iu);
    for (int j = 0; j < np; ++j) {
      const double center = val[i * np + j];
      int signs[8];
      int n_pos = 0, n_neg = 0;
      for (int k = 0; k < 8; ++k) {
        const double d = val[neighbor(i, j, off[k][0], off[k][1])] - center;
        signs[k] = std::abs(d) <= tie_tol ? 0 : (d > 0.0 ? 1 : -1);
        if (signs[k] > 0) ++n_pos;
        if (signs[k] < 0) ++n_neg;
      }
      if (n_pos == 0 && n_neg > 0) {
        type[i * np + j] = 1;
      } else if (n_neg == 0 && n_pos > 0) {
        type[i * np + j] = 2;
      } else {
        // count sign alternations around the ring, zeros skipped
        int changes = 0, prev = 0, first = 0;
        for (int k = 0; k < 8; ++k) {
          if (signs[k] == 0) continue;
          if (prev == 0) {
            first = signs[k];
          } else if (signs[k] != prev) {
            ++changes;
          }
          prev = signs[k];
        }
        if (prev != 0 && prev != first) ++changes;
        if (changes >= 4) type[i * np + j] = 3;
      }
    }
  });

  // Cluster same-type cells (8-connected with the same wrap rules).
  std::vector<int> cluster(cells, -1);
  std::vector<BruteForcePoint> out;
  const double cell_diag = std::hypot(std::numbers::pi / nt, 2.0 * std::numbers::pi / np);
  for (std::size_t seed = 0; seed < cells; ++seed) {
    if (type[seed] == 0 || cluster[seed] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<std::size_t> members;
    std::queue<std::size_t> work;
    cluster[seed] = id;
    work.push(seed);
    while (!work.empty()) {
      const std::size_t cur = work.front();
      work.pop();
      members.push_back(cur);
      const int i = static_cast<int>(cur) / np, j = static_cast<int>(cur) % np;
      for (const auto& o : off) {
        const std::size_t nb = static_cast<std::size_t>(neighbor(i, j, o[0], o[1]));
        if (type[nb] == type[seed] && cluster[nb] < 0) {
          cluster[nb] = id;
          work.push(nb);
        }
      }
    }

    Vec3 sum{};
    for (std::size_t m : members) sum = sum + dir[m];
    const double sum_norm = norm(sum);
    Vec3 centroid = sum_norm > 1e-9 ? sum / sum_norm : dir[members.front()];

    // A cluster whose cells sit at a large, nearly constant angle from its
    // centroid is a degenerate circle, not an isolated point.
    double mean_ang = 0.0, min_ang = std::numbers::pi, max_ang = 0.0;
    for (std::size_t m : members) {
      const double ang = std::acos(std::clamp(dot(dir[m], centroid), -1.0, 1.0));
      mean_ang += ang;
      min_ang = std::min(min_ang, ang);
      max_ang = std::max(max_ang, ang);
    }
    mean_ang /= static_cast<double>(members.size());
    const bool is_ring = members.size() >= static_cast<std::size_t>(np) / 2 &&
                         mean_ang > 5.0 * cell_diag && (max_ang - min_ang) < 0.5 * mean_ang;

    BruteForcePoint bp;
    bp.direction = centroid;
    bp.energy = energy(big_j * centroid);
    bp.type = type[seed] == 1 ? LocalType::Max : (type[seed] == 2 ? LocalType::Min : LocalType::Saddle);
    bp.ring = is_ring;
    bp.cells = static_cast<int>(members.size());
    out.push_back(bp);
  }

  std::sort(out.begin(), out.end(), [](const BruteForcePoint& a, const BruteForcePoint& b) {
    if (a.direction.z != b.direction.z) return a.direction.z < b.direction.z;
    if (a.direction.x != b.direction.x) return a.direction.x < b.direction.x;
    return a.direction.y < b.direction.y;
  });
  return out;
}

}  // namespace

std::vector<BruteForcePoint> brute_force_stationary(const TwistingConfig& cfg, double big_j,
                                                    int n_theta, int n_phi, Execution exec) {
  return brute_force_impl([&](const Vec3& j) { return quantum_energy(BodyState::from(j), cfg); },
                          big_j, n_theta, n_phi, exec);
}

std::vector<BruteForcePoint> brute_force_stationary(const InertiaConfig& cfg, double big_j,
                                                    int n_theta, int n_phi, Execution exec) {
  return brute_force_impl([&](const Vec3& j) { return body_energy(BodyState::from(j), cfg); },
                          big_j, n_theta, n_phi, exec);
}

}  // namespace eulertop
