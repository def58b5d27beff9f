#pragma once

// Collective-spin sector: angular momentum matrices in the Dicke basis
// (|j, m>, m ascending, j = n/2), the quadratic Hamiltonian, full
// diagonalization, spectrum sweeps, level-density singularities, and spin
// coherent state evolution for squeezing diagnostics.

#include <vector>

#include "eulertop/correspondence.hpp"
#include "eulertop/exec.hpp"
#include "eulertop/matrix.hpp"
#include "eulertop/stationary.hpp"

namespace eulertop {

struct SpinMatrices {
  int n = 0;       // particle count
  double j = 0.0;  // n/2
  ComplexMatrix j1, j2, j3;  // (n+1) x (n+1), J3 diagonal with m = -j..j
};

// Ladder-operator construction. n = 0 gives trivial 1x1 zero matrices.
SpinMatrices spin_matrices(int n);

// H = sum_k (chi_k Jk^2 + Omega_k Jk), assembled directly in banded form
// (half-bandwidth 2). Real symmetric when omega2 = 0. Requires cfg.n >= 1.
ComplexMatrix build_hamiltonian(const TwistingConfig& cfg);

struct Spectrum {
  TwistingConfig cfg;            // parameter point (n = 0 when built from a bare matrix)
  std::vector<double> energies;  // ascending, n+1 values
  std::vector<std::vector<int>> degeneracy_groups;  // index groups with |de| < tol, size >= 2
  double degeneracy_tol = 0.0;
};

// Full spectrum via cyclic Jacobi (on the real-symmetric embedding for
// complex Hermitian input). Throws PreconditionError on non-Hermitian input.
Spectrum eigensystem(const ComplexMatrix& h);

struct EigenSolution {
  std::vector<double> energies;
  ComplexMatrix vectors;  // orthonormal columns
};
EigenSolution eigensystem_full(const ComplexMatrix& h);

// Convenience: build_hamiltonian + eigensystem, keeping cfg attached.
Spectrum make_spectrum(const TwistingConfig& cfg);

// One spectrum per normalized magnitude |Omega|/J (J = n/2) along direction.
// Grid points are diagonalized concurrently; each diagonalization is
// single-threaded and deterministic.
std::vector<Spectrum> spectrum_sweep(const TwistingConfig& base, const Vec3& direction,
                                     const std::vector<double>& omega_over_j_grid,
                                     Execution exec = Execution::Parallel);

enum class SingularityKind { SupportMin, SupportMax, Peak, Discontinuity };
const char* to_string(SingularityKind k);

struct SpectralSingularity {
  double energy;
  SingularityKind kind;
};

struct SingularityMatch {
  double classical_energy;
  Stability stability;
  double singularity_energy;
  SingularityKind kind;
  double abs_offset;
  double offset_in_spacings;
};

struct SingularityReport {
  double mean_spacing = 0.0;
  std::vector<SpectralSingularity> singularities;
  std::vector<SingularityMatch> matches;
};

// Level-density estimate by inverse nearest-neighbour spacing smoothed over a
// 5-level window. Density peaks flag saddle candidates; support endpoints and
// interior density jumps flag extremum candidates. Each supplied classical
// stationary point is paired with the nearest detected singularity.
// Requires at least 21 levels.
SingularityReport spectral_singularities(const Spectrum& s,
                                         const std::vector<StationaryPoint>& classical_points);

struct QuantumState {
  int n = 0;
  std::vector<cplx> amps;  // Dicke basis, m ascending, length n+1

  double norm() const;
};

// Spin coherent state pointing along (theta, phi): the rotated maximal-J3
// Dicke state with the binomial amplitude profile.
QuantumState spin_coherent_state(double theta, double phi, int n);

struct MomentSample {
  double t;
  Vec3 mean;          // <J>
  double cov[3][3];   // symmetrized second moments minus mean products
  double var_major;   // tangent-plane variance ellipse about the <J> direction
  double var_minor;
  double tilt;
  double state_norm;  // unitarity diagnostic
};

// Spectral-decomposition evolution of a state under cfg, with first and
// second moments at each requested time. Times are evaluated concurrently.
std::vector<MomentSample> evolve_moments(const QuantumState& state, const TwistingConfig& cfg,
                                         const std::vector<double>& times,
                                         Execution exec = Execution::Parallel);

}  // namespace eulertop
