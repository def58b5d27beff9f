#pragma once

// Stationary angular momenta on the |J| = const sphere, their stability, and
// phase-diagram sweeps.
//
// A stationary momentum is a contact point of the energy surface with the
// momentum sphere. Generic points come from a degree-6 polynomial in the
// component along a chosen axis; configurations with the linear term along a
// single axis have a closed-form branch. Stability follows from comparing the
// two principal curvature radii of the energy surface at the contact point
// with the sphere radius, plus a half-space test on the surface center.
//
// Stability semantics: for TwistingConfig input, StableMin/StableMax refer to
// the Hamiltonian value; for InertiaConfig input, to E_body. The two are
// sign-flipped under the correspondence map.

#include <array>
#include <string>
#include <vector>

#include "eulertop/correspondence.hpp"
#include "eulertop/dynamics.hpp"
#include "eulertop/exec.hpp"
#include "eulertop/poly.hpp"

namespace eulertop {

enum class Stability { StableMin, StableMax, Saddle, Marginal };
enum class Branch { GenericRoot, AxisPole, AnalyticLmg };
const char* to_string(Stability s);
const char* to_string(Branch b);

struct StationaryPoint {
  BodyState j;
  double energy = 0.0;  // Hamiltonian value (quantum input) or E_body (classical input)
  double r1 = 0.0, r2 = 0.0;  // principal curvature radii of the energy surface, r1 >= r2
  Stability stability = Stability::Marginal;
  Branch branch = Branch::GenericRoot;
};

struct StationaryAnalysis {
  std::vector<StationaryPoint> points;
  // Symmetric tops can touch the energy surface along a full circle; that set
  // is reported as a ring, not enumerated.
  bool degenerate_ring = false;
  int ring_axis = -1;        // symmetry axis (0-based) of the ring
  double ring_coord = 0.0;   // J component along ring_axis
  bool degenerate_sphere = false;  // isotropic tensor with no linear term
};

StationaryAnalysis stationary_points(const TwistingConfig& cfg, double big_j);
StationaryAnalysis stationary_points(const InertiaConfig& cfg, double big_j);

// Closed-form stationary energies for the axis-aligned linear term
// (omega1 = omega2 = 0): the two poles (i, ii) and the two tilted pairs
// (iii, iv) and (v, vi) with their existence windows.
struct LmgStationaryEnergy {
  const char* label;  // "i".."vi"
  double energy;
  bool exists;
};
std::array<LmgStationaryEnergy, 6> lmg_stationary_energies(const TwistingConfig& cfg,
                                                           double big_j);

struct StabilityInfo {
  Stability stability;
  double r1, r2;
};

// Classifies a stationary state by building the energy surface through it and
// applying the curvature/half-space test. Throws PreconditionError when the
// input is not stationary (field residual above 1e-6 of the field scale).
StabilityInfo stability_info(const BodyState& p, const TwistingConfig& cfg, double big_j);
StabilityInfo stability_info(const BodyState& p, const InertiaConfig& cfg, double big_j);
Stability classify_stability(const BodyState& p, const TwistingConfig& cfg, double big_j);
Stability classify_stability(const BodyState& p, const InertiaConfig& cfg, double big_j);

struct PhasePoint {
  double omega_over_j;
  StationaryAnalysis analysis;
};

struct PhaseInterval {
  double from, to;  // normalized |Omega|/J
  int saddle_count;
  int point_count;
  bool degenerate_saddles;
  bool degenerate_extrema;
  std::string zone;  // "I" (no saddle), "II" (one), "III"/"IV" (two, by saddle degeneracy)
};

struct PhaseDiagram {
  Vec3 direction;  // unit linear-term direction
  double big_j;
  std::vector<PhasePoint> per_point;
  std::vector<double> criticals;  // normalized magnitudes where the point count changes
  std::vector<PhaseInterval> intervals;
};

// Sweeps the linear-term magnitude along `direction` over the given
// normalized grid (|Omega|/J, ascending). Criticals are refined to ~1e-9 by
// bisection on the stationary-point count between neighbouring grid values.
// Grid points are evaluated concurrently; assembly order is fixed.
PhaseDiagram phase_sweep(const TwistingConfig& base, const Vec3& direction,
                         const std::vector<double>& omega_over_j_grid, double big_j,
                         Execution exec = Execution::Parallel);

enum class LocalType { Max, Min, Saddle };
const char* to_string(LocalType t);

struct BruteForcePoint {
  Vec3 direction;  // unit; spherical centroid of the detected cluster
  double energy;
  LocalType type;
  bool ring;  // cluster wraps a full latitude circle (degenerate set)
  int cells;  // cluster size in grid cells
};

// Independent oracle: evaluates the energy on an n_theta x n_phi
// latitude-longitude grid, classifies every cell against its 8-neighbourhood
// and clusters same-type cells. Requires n_theta >= 64, n_phi >= 128, n_phi
// even. Energy semantics follow the config type, matching classify_stability.
std::vector<BruteForcePoint> brute_force_stationary(const TwistingConfig& cfg, double big_j,
                                                    int n_theta, int n_phi,
                                                    Execution exec = Execution::Parallel);
std::vector<BruteForcePoint> brute_force_stationary(const InertiaConfig& cfg, double big_j,
                                                    int n_theta, int n_phi,
                                                    Execution exec = Execution::Parallel);

}  // namespace eulertop
