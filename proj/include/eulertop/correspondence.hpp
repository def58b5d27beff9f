#pragma once

// Exact two-way map between the rigid-body parameterization (InertiaConfig)
// and the collective-spin quadratic Hamiltonian parameterization
// (TwistingConfig), the gauge freedom shared by both, the (epsilon, V, W)
// form of the LMG Hamiltonian, and the Rabi/Josephson/Fock regime labels.
//
// Map: chi_k = -1/(2 I_k), Omega_k = K_k / I_k. Only differences of chi enter
// the dynamics, so a uniform shift of chi (equivalently 1/I_k -> 1/I_k + 1/I0
// with K rescaled) leaves the angular-momentum flow unchanged.

#include <optional>

#include "eulertop/dynamics.hpp"
#include "eulertop/vec3.hpp"

namespace eulertop {

struct TwistingConfig {
  double chi1 = 0.0, chi2 = 0.0, chi3 = 0.0;        // twisting-tensor eigenvalues
  double omega1 = 0.0, omega2 = 0.0, omega3 = 0.0;  // linear-term frequencies
  int n = 0;  // particle count; 0 means "not specified" (classical-side use only)

  double j() const { return 0.5 * static_cast<double>(n); }
  Vec3 chi() const { return {chi1, chi2, chi3}; }
  Vec3 omega() const { return {omega1, omega2, omega3}; }
};

struct LmgParams {
  double epsilon = 0.0;  // linear term along axis 3
  double v = 0.0;        // (J1^2 - J2^2) coefficient
  double w = 0.0;        // (J1^2 + J2^2) coefficient
};

// chi_k = -1/(2 I_k), Omega_k = K_k/I_k. Exact, no gauge shift.
TwistingConfig quantum_from_classical(const InertiaConfig& cfg, int n = 0);

struct ClassicalMap {
  InertiaConfig cfg;          // physical (triangle inequality holds)
  double chi0;                // uniform chi shift applied before inverting
  std::optional<double> i0;   // repair gauge, set only when a repair was needed
};

// Inverts the map, choosing chi0 so every shifted eigenvalue is negative
// (rule: chi0 = -max chi - max|chi|, or -1 if chi vanishes) and, when the raw
// moments violate the triangle inequality, applying the 1/I -> 1/I + 1/I0
// repair with I0 at the midpoint of the admissible interval. The returned
// config generates exactly the same dJ/dt field as the input.
// chi0_override replaces the default shift rule (used to exercise the repair).
ClassicalMap classical_from_quantum(const TwistingConfig& cfg,
                                    std::optional<double> chi0_override = std::nullopt);

// Upper end of the admissible I0 interval when moment i_big exceeds ia + ib.
double triangle_repair_bound(double i_big, double ia, double ib);

// chi_k += chi0; the linear term is untouched. Dynamics unchanged.
TwistingConfig gauge_shift_quantum(const TwistingConfig& cfg, double chi0);

struct ClassicalGauge {
  InertiaConfig cfg;
  double delta_e_body;  // J^2/(2 I0) - sum K_k^2 / (2 (I0 + I_k)), original K and I
};

// 1/I_k += 1/I0 and K_k -> K_k / (1 + I_k/I0). Throws InvalidGaugeError if a
// resulting moment would be non-positive. delta_e_body is evaluated for the
// supplied |J|.
ClassicalGauge gauge_shift_classical(const InertiaConfig& cfg, double i0, double big_j);

// (epsilon, V, W) from a diagonal twisting tensor with the linear term along
// axis 3 (omega1 = omega2 = 0, else NotLmgError): W = (chi1+chi2)/2 - chi3,
// V = (chi1-chi2)/2, epsilon = omega3.
LmgParams lmg_from_twisting(const TwistingConfig& cfg);

// Inverse with chi3 = 0: chi = diag(W+V, W-V, 0), Omega = (0, 0, epsilon).
TwistingConfig twisting_from_lmg(const LmgParams& p, int n = 0);

enum class Regime { Rabi, Josephson, Fock, Boundary };
const char* to_string(Regime r);

// |Omega/chi| > N: Rabi; < 1/N: Fock; between: Josephson. Boundary within the
// given relative band of either threshold. chi = 0 counts as Rabi.
Regime classify_regime(double chi, double omega, int n, double band = 0.01);

// Convenience overload for twist-and-turn shaped configs (linear term along
// one axis, the two other eigenvalues equal); throws NotApplicableError
// otherwise.
Regime classify_regime(const TwistingConfig& cfg, double band = 0.01);

// Classical limit of the Heisenberg flow: symmetrized operator products
// replaced by ordinary products. Equals djdt of any corresponding
// InertiaConfig.
Vec3 quantum_field(const BodyState& state, const TwistingConfig& cfg);
FieldCoeffs quantum_field_coeffs(const TwistingConfig& cfg);

// Hamiltonian value with classical numbers substituted for the operators.
double quantum_energy(const BodyState& state, const TwistingConfig& cfg);

}  // namespace eulertop
