#pragma once

// Independent reference computations for the test suites.  Nothing here
// calls into the code path it is used to check.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "bcx/bicomplex.hpp"

namespace oracle {

using Complex = std::complex<double>;

/// (z1 + z2 j)(u1 + u2 j) = (z1 u1 − z2 u2) + (z1 u2 + z2 u1) j
inline bcx::Bicomplex multiply_by_complex_pairs(const bcx::Bicomplex& a, const bcx::Bicomplex& b) {
  const Complex z1(a.x0, a.x1), z2(a.x2, a.x3);
  const Complex u1(b.x0, b.x1), u2(b.x2, b.x3);
  const Complex p = z1 * u1 - z2 * u2;
  const Complex q = z1 * u2 + z2 * u1;
  return {p.real(), p.imag(), q.real(), q.imag()};
}

/// The two ring homomorphisms BC → C: j ↦ −i (e1 side) and j ↦ +i (e2 side).
inline Complex homomorphism(const bcx::Bicomplex& w, int component) {
  const Complex i(0.0, 1.0);
  const Complex jj = component == 1 ? -i : i;
  return Complex(w.x0) + i * w.x1 + jj * w.x2 + i * jj * w.x3;
}

inline double quadruple_norm(const bcx::Bicomplex& w) {
  return std::sqrt(w.x0 * w.x0 + w.x1 * w.x1 + w.x2 * w.x2 + w.x3 * w.x3);
}

/// λ = (tr ± sqrt((a − d)² + 4|b|²)) / 2, ascending.
inline std::pair<double, double> eig2x2(const Eigen::Matrix2cd& a) {
  const double p = a(0, 0).real(), q = a(1, 1).real();
  const double root = std::sqrt((p - q) * (p - q) + 4.0 * std::norm(a(0, 1)));
  return {(p + q - root) / 2.0, (p + q + root) / 2.0};
}

/// Classical (not modified) Gram-Schmidt with a relative drop tolerance.
inline std::vector<Eigen::VectorXcd> classical_gram_schmidt(const std::vector<Eigen::VectorXcd>& vs,
                                                            double tol) {
  double scale = 0.0;
  for (const auto& v : vs) scale = std::max(scale, v.norm());
  std::vector<Eigen::VectorXcd> out;
  for (const auto& v : vs) {
    Eigen::VectorXcd r = v;
    for (const auto& q : out) r -= q.dot(v) * q;
    if (r.norm() > tol * scale) out.push_back(r / r.norm());
  }
  return out;
}

/// Numerical rank: singular values > tol·largest.
inline std::size_t svd_rank(const Eigen::MatrixXcd& m, double tol) {
  if (m.cols() == 0 || m.norm() == 0.0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > tol * s(0)) ++rank;
  }
  return rank;
}

/// Brute-force Krylov matrix from explicit matrix powers.
inline Eigen::MatrixXcd krylov_by_powers(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& v,
                                         Eigen::Index depth) {
  Eigen::MatrixXcd k(a.rows(), depth);
  Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  for (Eigen::Index m = 0; m < depth; ++m) {
    k.col(m) = power * v;
    power = power * a;
  }
  return k;
}

inline double spectral_norm(const Eigen::MatrixXcd& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  return svd.singularValues()(0);
}

/// dim span{v, Av, ..., A^{n-1}v} from the SVD of the explicit power matrix
/// of A/||A||_2 applied to v/||v||.  Scaling by norms rather than per
/// column keeps a vanishing power (e.g. A v = 0) from being inflated.
inline std::size_t krylov_rank(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& v, double tol) {
  if (v.norm() == 0.0) return 0;
  const double an = spectral_norm(a);
  const Eigen::MatrixXcd scaled = an > 0.0 ? Eigen::MatrixXcd(a / an) : a;
  return svd_rank(krylov_by_powers(scaled, v / v.norm(), a.rows()), tol);
}

}  // namespace oracle
