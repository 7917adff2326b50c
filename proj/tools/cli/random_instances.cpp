#include "random_instances.hpp"

namespace bcx::cli {

BCVector RandomInstances::vector(std::size_t n) {
  BCVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = bicomplex();
  return v;
}

BCMatrix RandomInstances::matrix(std::size_t n) {
  BCMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = bicomplex();
  }
  return m;
}

BCMatrix RandomInstances::self_adjoint(std::size_t n) {
  const BCMatrix a = matrix(n);
  return a + adjoint(a);
}

ComplexVector RandomInstances::complex_vector(Eigen::Index n) {
  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = complex();
  return v;
}

ComplexMatrix RandomInstances::complex_matrix(Eigen::Index n) {
  ComplexMatrix m(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) m(r, c) = complex();
  }
  return m;
}

ComplexMatrix RandomInstances::hermitian(Eigen::Index n) {
  const ComplexMatrix a = complex_matrix(n);
  return a + a.adjoint();
}

ComplexMatrix RandomInstances::unitary(Eigen::Index n) {
  Eigen::HouseholderQR<ComplexMatrix> qr(complex_matrix(n));
  return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

ComplexMatrix RandomInstances::hermitian_with_spectrum(const std::vector<double>& spectrum) {
  const auto n = static_cast<Eigen::Index>(spectrum.size());
  const ComplexMatrix q = unitary(n);
  Eigen::VectorXcd d(n);
  for (Eigen::Index i = 0; i < n; ++i) d(i) = spectrum[static_cast<std::size_t>(i)];
  ComplexMatrix h = q * d.asDiagonal() * q.adjoint();
  return (h + h.adjoint()) / 2.0;
}

BCMatrix RandomInstances::self_adjoint_with_spectra(const std::vector<double>& spectrum1,
                                                    const std::vector<double>& spectrum2) {
  return op_join(hermitian_with_spectrum(spectrum1), hermitian_with_spectrum(spectrum2));
}

}  // namespace bcx::cli
