#pragma once

// Small dense matrices and a cyclic Jacobi eigensolver. Sizes here are a few
// hundred at most, so accuracy and determinism win over speed: no pivoting
// heuristics, no parallel rotation batching, plain sweeps until the
// off-diagonal mass is gone.

#include <complex>
#include <vector>

#include "eulertop/errors.hpp"

namespace eulertop {

using cplx = std::complex<double>;

class RealMatrix {
 public:
  RealMatrix() = default;
  explicit RealMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0.0) {}
  static RealMatrix identity(int n);

  int size() const { return n_; }
  double& at(int r, int c) { return d_[static_cast<std::size_t>(r) * n_ + c]; }
  double at(int r, int c) const { return d_[static_cast<std::size_t>(r) * n_ + c]; }

 private:
  int n_ = 0;
  std::vector<double> d_;
};

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n) {}

  int size() const { return n_; }
  cplx& at(int r, int c) { return d_[static_cast<std::size_t>(r) * n_ + c]; }
  cplx at(int r, int c) const { return d_[static_cast<std::size_t>(r) * n_ + c]; }

  double max_abs() const;
  double hermiticity_defect() const;  // max |H - H^dagger| entry
  bool is_real(double tol) const;     // max |imag| <= tol

  std::vector<cplx> apply(const std::vector<cplx>& v) const;
};

struct RealEigenSystem {
  std::vector<double> values;  // ascending
  RealMatrix vectors;          // columns are the corresponding eigenvectors
};

// Cyclic Jacobi on a real symmetric matrix. Sweeps until the off-diagonal
// Frobenius norm is below tol_factor * ||A||_F (or it stops shrinking).
RealEigenSystem jacobi_eigensystem(RealMatrix a, double tol_factor = 1e-15, int max_sweeps = 60);

struct ComplexEigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // orthonormal columns
};

// Hermitian eigensystem through the real-symmetric embedding
// [[A, -B], [B, A]] of H = A + iB (dimension doubled, every eigenvalue
// appears twice; values are deduplicated in pairs and the complex
// eigenvectors recovered by Gram-Schmidt within degenerate groups).
// Real-symmetric input short-circuits to plain Jacobi.
// Throws PreconditionError if H is not Hermitian.
ComplexEigenSystem hermitian_eigensystem(const ComplexMatrix& h);

}  // namespace eulertop
