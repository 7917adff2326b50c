#pragma once

#include <vector>

#include "bcx/hilbert.hpp"

namespace bcx {

struct JacobiOptions {
  /// Precondition: ||A − A^H||_F ≤ hermitian_tol·(1 + ||A||_F).
  double hermitian_tol = 1e-12;
  /// Stop once the off-diagonal Frobenius mass is ≤ off_diagonal_tol·||A||_F.
  double off_diagonal_tol = 1e-13;
  int max_sweeps = 60;
};

struct HermitianEigen {
  std::vector<double> values;  ///< ascending
  ComplexMatrix vectors;       ///< unitary, column i pairs with values[i]
  int sweeps = 0;
  double off_diagonal = 0.0;   ///< achieved off-diagonal mass
};

/// Cyclic complex Jacobi.  Each rotation first removes the phase of the
/// pivot a_pq and then applies a real Givens rotation, so every step is
/// exactly unitary.  Each eigenvector is phased so that its
/// largest-magnitude entry is real and positive.
///
/// Throws Error{NotHermitian} or NoConvergenceError.
HermitianEigen hermitian_eig(const ComplexMatrix& a, const JacobiOptions& options = {});

}  // namespace bcx
