#include "bcx/operator.hpp"

#include <cmath>
#include <string>

#include "bcx/errors.hpp"

namespace bcx {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": dimensions " +
                                                  std::to_string(a) + " and " + std::to_string(b));
  }
}

}  // namespace

BCMatrix::BCMatrix(std::size_t n, std::vector<Bicomplex> entries)
    : n_(n), entries_(std::move(entries)) {
  require_same_dim(entries_.size(), n * n, "BCMatrix entry count vs n²");
}

BCMatrix BCMatrix::identity(std::size_t n) {
  BCMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Bicomplex::one();
  return m;
}

BCMatrix BCMatrix::diagonal(const std::vector<Bicomplex>& diag) {
  BCMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

BCMatrix& BCMatrix::operator+=(const BCMatrix& o) {
  require_same_dim(n_, o.n_, "matrix addition");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

BCMatrix& BCMatrix::operator-=(const BCMatrix& o) {
  require_same_dim(n_, o.n_, "matrix subtraction");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

BCMatrix operator+(BCMatrix a, const BCMatrix& b) { return a += b; }
BCMatrix operator-(BCMatrix a, const BCMatrix& b) { return a -= b; }

BCMatrix operator*(const BCMatrix& a, const BCMatrix& b) {
  require_same_dim(a.size(), b.size(), "matrix product");
  const std::size_t n = a.size();
  BCMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Bicomplex& ark = a(r, k);
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

BCMatrix operator*(const Bicomplex& alpha, const BCMatrix& a) {
  BCMatrix out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < a.size(); ++c) out(r, c) = alpha * a(r, c);
  }
  return out;
}

BCVector operator*(const BCMatrix& t, const BCVector& x) {
  require_same_dim(t.size(), x.size(), "matrix-vector product");
  BCVector out(t.size());
  for (std::size_t r = 0; r < t.size(); ++r) {
    Bicomplex acc;
    for (std::size_t c = 0; c < t.size(); ++c) acc += t(r, c) * x[c];
    out[r] = acc;
  }
  return out;
}

double norm_x(const BCMatrix& t) {
  double sum = 0.0;
  for (const auto& w : t.entries()) sum += w.x0 * w.x0 + w.x1 * w.x1 + w.x2 * w.x2 + w.x3 * w.x3;
  return std::sqrt(sum);
}

BCMatrix adjoint(const BCMatrix& t) {
  BCMatrix out(t.size());
  for (std::size_t r = 0; r < t.size(); ++r) {
    for (std::size_t c = 0; c < t.size(); ++c) out(c, r) = conj_star(t(r, c));
  }
  return out;
}

double self_adjoint_defect(const BCMatrix& t) { return norm_x(t - adjoint(t)); }

bool is_self_adjoint(const BCMatrix& t, double tol) {
  return self_adjoint_defect(t) <= tol * (1.0 + norm_x(t));
}

std::pair<ComplexMatrix, ComplexMatrix> op_split(const BCMatrix& t) {
  const auto n = static_cast<Eigen::Index>(t.size());
  ComplexMatrix t1(n, n), t2(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const IdempotentPair p =
          idempotent_split(t(static_cast<std::size_t>(r), static_cast<std::size_t>(c)));
      t1(r, c) = p.w1;
      t2(r, c) = p.w2;
    }
  }
  return {std::move(t1), std::move(t2)};
}

BCMatrix op_join(const ComplexMatrix& t1, const ComplexMatrix& t2) {
  if (t1.rows() != t1.cols() || t2.rows() != t2.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "op_join: component matrices must be square");
  }
  require_same_dim(static_cast<std::size_t>(t1.rows()), static_cast<std::size_t>(t2.rows()),
                   "op_join");
  const auto n = static_cast<std::size_t>(t1.rows());
  BCMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const auto ri = static_cast<Eigen::Index>(r);
      const auto ci = static_cast<Eigen::Index>(c);
      out(r, c) = idempotent_join(t1(ri, ci), t2(ri, ci));
    }
  }
  return out;
}

}  // namespace bcx
