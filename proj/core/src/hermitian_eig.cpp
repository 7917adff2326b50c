#include "bcx/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bcx/errors.hpp"

namespace bcx {

namespace {

double off_diagonal_mass(const ComplexMatrix& a) {
  double sum = 0.0;
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r != c) sum += std::norm(a(r, c));
    }
  }
  return std::sqrt(sum);
}

// Zeroes a(p, q) and a(q, p) with the unitary G acting on the (p, q) plane,
// a ← G^H a G, v ← v G.
void rotate(ComplexMatrix& a, ComplexMatrix& v, Eigen::Index p, Eigen::Index q) {
  const Complex apq = a(p, q);
  const double b = std::abs(apq);
  if (b == 0.0) return;
  const Complex phase_conj = std::conj(apq) / b;  // e^{-i phi}

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * b);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex gpp = c;
  const Complex gpq = s;
  const Complex gqp = -s * phase_conj;
  const Complex gqq = c * phase_conj;

  const ComplexVector col_p = a.col(p);
  const ComplexVector col_q = a.col(q);
  a.col(p) = col_p * gpp + col_q * gqp;
  a.col(q) = col_p * gpq + col_q * gqq;

  const Eigen::RowVectorXcd row_p = a.row(p);
  const Eigen::RowVectorXcd row_q = a.row(q);
  a.row(p) = std::conj(gpp) * row_p + std::conj(gqp) * row_q;
  a.row(q) = std::conj(gpq) * row_p + std::conj(gqq) * row_q;

  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  const ComplexVector vp = v.col(p);
  const ComplexVector vq = v.col(q);
  v.col(p) = vp * gpp + vq * gqp;
  v.col(q) = vp * gpq + vq * gqq;
}

}  // namespace

HermitianEigen hermitian_eig(const ComplexMatrix& input, const JacobiOptions& options) {
  if (input.rows() != input.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "hermitian_eig: matrix is " +
                                                  std::to_string(input.rows()) + "x" +
                                                  std::to_string(input.cols()));
  }
  const Eigen::Index n = input.rows();
  const double input_norm = input.norm();
  const double defect = (input - input.adjoint()).norm();
  if (defect > options.hermitian_tol * (1.0 + input_norm)) {
    throw Error(ErrorKind::NotHermitian,
                "hermitian_eig: ||A - A^H|| = " + std::to_string(defect) + " exceeds tolerance");
  }

  ComplexMatrix a = (input + input.adjoint()) / 2.0;
  ComplexMatrix v = ComplexMatrix::Identity(n, n);
  const double scale = a.norm();

  HermitianEigen out;
  const double threshold = options.off_diagonal_tol * scale;
  for (int sweep = 0;; ++sweep) {
    out.off_diagonal = off_diagonal_mass(a);
    out.sweeps = sweep;
    if (out.off_diagonal <= threshold) break;
    if (sweep == options.max_sweeps) {
      throw NoConvergenceError(sweep, out.off_diagonal);
    }
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x).real() < a(y, y).real(); });

  out.values.reserve(static_cast<std::size_t>(n));
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index src = order[static_cast<std::size_t>(i)];
    out.values.push_back(a(src, src).real());
    ComplexVector col = v.col(src);
    Eigen::Index lead = 0;
    for (Eigen::Index r = 1; r < n; ++r) {
      if (std::abs(col(r)) > std::abs(col(lead))) lead = r;
    }
    const double mag = std::abs(col(lead));
    if (mag > 0.0) col *= std::conj(col(lead)) / mag;
    col(lead) = std::abs(col(lead));
    out.vectors.col(i) = col;
  }
  return out;
}

}  // namespace bcx
