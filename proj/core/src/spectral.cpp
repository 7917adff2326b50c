#include "bcx/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bcx/errors.hpp"

namespace bcx {

namespace {

double max_abs(const std::vector<double>& xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

double SpectralDecomposition::component_norm1() const { return max_abs(spectrum1); }
double SpectralDecomposition::component_norm2() const { return max_abs(spectrum2); }

BCMatrix SpectralDecomposition::diagonal() const {
  std::vector<Bicomplex> diag;
  diag.reserve(eigenvalues.size());
  for (const auto& h : eigenvalues) diag.push_back(embed(h));
  return BCMatrix::diagonal(diag);
}

SpectralDecomposition spectral_decompose(const BCMatrix& t, const SpectralOptions& options) {
  const double defect = self_adjoint_defect(t);
  if (defect > options.self_adjoint_tol * (1.0 + norm_x(t))) throw NotSelfAdjointError(defect);

  // The bicomplex check above is the gate; each component is symmetrized
  // inside the solver.
  JacobiOptions jacobi = options.jacobi;
  jacobi.hermitian_tol = std::numeric_limits<double>::infinity();

  const auto [t1, t2] = op_split(t);
  HermitianEigen eig1 = hermitian_eig(t1, jacobi);
  HermitianEigen eig2 = hermitian_eig(t2, jacobi);

  SpectralDecomposition out;
  out.unitary = op_join(eig1.vectors.adjoint(), eig2.vectors.adjoint());
  out.eigenvalues.reserve(eig1.values.size());
  for (std::size_t i = 0; i < eig1.values.size(); ++i) {
    out.eigenvalues.push_back(Hyperbolic::from_idempotent(eig1.values[i], eig2.values[i]));
  }
  out.spectrum1 = std::move(eig1.values);
  out.spectrum2 = std::move(eig2.values);
  out.eigenvectors1 = std::move(eig1.vectors);
  out.eigenvectors2 = std::move(eig2.vectors);
  out.residual = norm_x(out.unitary * t * adjoint(out.unitary) - out.diagonal());
  return out;
}

double unitarity_defect(const BCMatrix& u) {
  return norm_x(u * adjoint(u) - BCMatrix::identity(u.size()));
}

}  // namespace bcx
