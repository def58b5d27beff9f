#include "eulertop/correspondence.hpp"

#include <algorithm>
#include <cmath>

namespace eulertop {

TwistingConfig quantum_from_classical(const InertiaConfig& cfg, int n) {
  TwistingConfig q;
  q.chi1 = -0.5 / cfg.i1;
  q.chi2 = -0.5 / cfg.i2;
  q.chi3 = -0.5 / cfg.i3;
  q.omega1 = cfg.k1 / cfg.i1;
  q.omega2 = cfg.k2 / cfg.i2;
  q.omega3 = cfg.k3 / cfg.i3;
  q.n = n;
  return q;
}

double triangle_repair_bound(double i_big, double ia, double ib) {
  const double excess = i_big - ia - ib;
  if (!(excess > 0.0)) {
    throw PreconditionError("triangle_repair_bound: no violation to repair");
  }
  return (ia * ib + std::sqrt(ia * ia * ib * ib + i_big * ia * ib * excess)) / excess;
}

ClassicalMap classical_from_quantum(const TwistingConfig& cfg, std::optional<double> chi0_override) {
  const double max_chi = std::max({cfg.chi1, cfg.chi2, cfg.chi3});
  const double max_abs = std::max({std::abs(cfg.chi1), std::abs(cfg.chi2), std::abs(cfg.chi3)});
  const double scale = max_abs > 0.0 ? max_abs : 1.0;
  const double chi0 = chi0_override.value_or(-max_chi - scale);

  const double c1 = cfg.chi1 + chi0, c2 = cfg.chi2 + chi0, c3 = cfg.chi3 + chi0;
  if (!(c1 < 0.0) || !(c2 < 0.0) || !(c3 < 0.0)) {
    throw InvalidGaugeError(
        "classical_from_quantum: chi0 must leave every shifted eigenvalue negative");
  }

  double mi[3] = {-0.5 / c1, -0.5 / c2, -0.5 / c3};
  double rk[3] = {cfg.omega1 * mi[0], cfg.omega2 * mi[1], cfg.omega3 * mi[2]};

  ClassicalMap out;
  out.chi0 = chi0;

  // At most one triangle violation is possible; repair it with the midpoint
  // of the admissible I0 interval.
  int big = -1;
  for (int k = 0; k < 3; ++k) {
    if (mi[k] > mi[(k + 1) % 3] + mi[(k + 2) % 3]) big = k;
  }
  if (big >= 0) {
    const double ia = mi[(big + 1) % 3], ib = mi[(big + 2) % 3];
    const double i0 = 0.5 * triangle_repair_bound(mi[big], ia, ib);
    for (int k = 0; k < 3; ++k) {
      rk[k] = rk[k] / (1.0 + mi[k] / i0);
      mi[k] = mi[k] * i0 / (mi[k] + i0);
    }
    out.i0 = i0;
  }

  out.cfg = InertiaConfig::physical(mi[0], mi[1], mi[2], rk[0], rk[1], rk[2]);
  return out;
}

TwistingConfig gauge_shift_quantum(const TwistingConfig& cfg, double chi0) {
  TwistingConfig shifted = cfg;
  shifted.chi1 += chi0;
  shifted.chi2 += chi0;
  shifted.chi3 += chi0;
  return shifted;
}

ClassicalGauge gauge_shift_classical(const InertiaConfig& cfg, double i0, double big_j) {
  if (i0 == 0.0 || !std::isfinite(i0)) {
    throw InvalidGaugeError("gauge_shift_classical: i0 must be finite and nonzero");
  }
  const double im[3] = {cfg.i1, cfg.i2, cfg.i3};
  const double km[3] = {cfg.k1, cfg.k2, cfg.k3};
  double mi[3], rk[3];
  for (int k = 0; k < 3; ++k) {
    const double inv = 1.0 / im[k] + 1.0 / i0;
    if (!(inv > 0.0)) {
      throw InvalidGaugeError("gauge_shift_classical: shift would produce a non-positive moment");
    }
    mi[k] = 1.0 / inv;
    rk[k] = km[k] / (1.0 + im[k] / i0);
  }
  double delta = big_j * big_j / (2.0 * i0);
  for (int k = 0; k < 3; ++k) delta -= km[k] * km[k] / (2.0 * (i0 + im[k]));
  return {InertiaConfig::formal(mi[0], mi[1], mi[2], rk[0], rk[1], rk[2]), delta};
}

LmgParams lmg_from_twisting(const TwistingConfig& cfg) {
  const double scale =
      std::max({std::abs(cfg.omega1), std::abs(cfg.omega2), std::abs(cfg.omega3), 1e-300});
  if (std::abs(cfg.omega1) > 1e-12 * scale || std::abs(cfg.omega2) > 1e-12 * scale) {
    throw NotLmgError("lmg_from_twisting: linear term must lie along axis 3");
  }
  return {cfg.omega3, 0.5 * (cfg.chi1 - cfg.chi2), 0.5 * (cfg.chi1 + cfg.chi2) - cfg.chi3};
}

TwistingConfig twisting_from_lmg(const LmgParams& p, int n) {
  TwistingConfig cfg;
  cfg.chi1 = p.w + p.v;
  cfg.chi2 = p.w - p.v;
  cfg.chi3 = 0.0;
  cfg.omega3 = p.epsilon;
  cfg.n = n;
  return cfg;
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Rabi: return "rabi";
    case Regime::Josephson: return "josephson";
    case Regime::Fock: return "fock";
    default: return "boundary";
  }
}

Regime classify_regime(double chi, double omega, int n, double band) {
  if (n < 1) {
    throw PreconditionError("classify_regime: particle count must be >= 1");
  }
  if (chi == 0.0) return Regime::Rabi;  // no twisting at all: rotation dominates by convention
  const double r = std::abs(omega / chi);
  const double hi = static_cast<double>(n);
  const double lo = 1.0 / hi;
  if (std::abs(r - hi) <= band * hi || std::abs(r - lo) <= band * lo) return Regime::Boundary;
  if (r > hi) return Regime::Rabi;
  if (r < lo) return Regime::Fock;
  return Regime::Josephson;
}

Regime classify_regime(const TwistingConfig& cfg, double band) {
  const double om[3] = {cfg.omega1, cfg.omega2, cfg.omega3};
  const double ch[3] = {cfg.chi1, cfg.chi2, cfg.chi3};
  const double om_scale = std::max({std::abs(om[0]), std::abs(om[1]), std::abs(om[2]), 1e-300});
  int axis = -1;
  for (int k = 0; k < 3; ++k) {
    if (std::abs(om[k]) > 1e-12 * om_scale) {
      if (axis >= 0) throw NotApplicableError("classify_regime: linear term must lie along one axis");
      axis = k;
    }
  }
  if (axis < 0) throw NotApplicableError("classify_regime: no linear term present");
  const int u = (axis + 1) % 3, v = (axis + 2) % 3;
  const double span = std::max({std::abs(ch[0] - ch[1]), std::abs(ch[1] - ch[2]),
                                std::abs(ch[0] - ch[2]), 1e-300});
  // Twist-and-turn shape: the rotation axis eigenvalue matches one transverse
  // eigenvalue, the remaining one carries the twist.
  double chi_eff;
  if (std::abs(ch[axis] - ch[u]) <= 1e-9 * span) {
    chi_eff = ch[v] - ch[axis];
  } else if (std::abs(ch[axis] - ch[v]) <= 1e-9 * span) {
    chi_eff = ch[u] - ch[axis];
  } else {
    throw NotApplicableError("classify_regime: config is not of twist-and-turn shape");
  }
  return classify_regime(chi_eff, om[axis], cfg.n, band);
}

FieldCoeffs quantum_field_coeffs(const TwistingConfig& cfg) {
  FieldCoeffs f;
  f.a1 = 2.0 * (cfg.chi2 - cfg.chi3);
  f.a2 = 2.0 * (cfg.chi3 - cfg.chi1);
  f.a3 = 2.0 * (cfg.chi1 - cfg.chi2);
  f.b1 = cfg.omega1;
  f.b2 = cfg.omega2;
  f.b3 = cfg.omega3;
  return f;
}

Vec3 quantum_field(const BodyState& state, const TwistingConfig& cfg) {
  if (!state.finite()) {
    throw InvalidStateError("quantum_field: non-finite angular momentum components");
  }
  return quantum_field_coeffs(cfg).eval(state.vec());
}

double quantum_energy(const BodyState& state, const TwistingConfig& cfg) {
  const Vec3 j = state.vec();
  return cfg.chi1 * j.x * j.x + cfg.chi2 * j.y * j.y + cfg.chi3 * j.z * j.z + cfg.omega1 * j.x +
         cfg.omega2 * j.y + cfg.omega3 * j.z;
}

}  // namespace eulertop
