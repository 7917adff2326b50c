#pragma once

#include <vector>

#include "bcx/hermitian_eig.hpp"
#include "bcx/operator.hpp"

namespace bcx {

/// U·T·U* = diag(M) for a self-adjoint T = e1 T1 + e2 T2.
///
/// U = e1 V1^H + e2 V2^H where the columns of V_c are the eigenvectors of
/// T_c, and M pairs the i-th ascending eigenvalue of T1 with the i-th
/// ascending eigenvalue of T2.  The pairing is a representation choice.
struct SpectralDecomposition {
  BCMatrix unitary;
  std::vector<Hyperbolic> eigenvalues;
  std::vector<double> spectrum1;
  std::vector<double> spectrum2;
  ComplexMatrix eigenvectors1;
  ComplexMatrix eigenvectors2;
  /// ||U T U* − diag(M)||_X, evaluated in bicomplex arithmetic.
  double residual = 0.0;

  /// ||T_c||_2, i.e. the largest |eigenvalue| of the component.
  double component_norm1() const;
  double component_norm2() const;

  BCMatrix diagonal() const;
};

struct SpectralOptions {
  double self_adjoint_tol = kSelfAdjointTolerance;
  JacobiOptions jacobi{};
};

/// Throws NotSelfAdjointError; propagates NoConvergenceError.
SpectralDecomposition spectral_decompose(const BCMatrix& t, const SpectralOptions& options = {});

/// ||U U* − I||_X
double unitarity_defect(const BCMatrix& u);

}  // namespace bcx
