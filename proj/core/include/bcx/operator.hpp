#pragma once

// BC-linear operators on BC^n as dense bicomplex matrices.

#include <cstddef>
#include <utility>
#include <vector>

#include "bcx/bicomplex.hpp"
#include "bcx/hilbert.hpp"

namespace bcx {

class BCMatrix {
 public:
  BCMatrix() = default;
  explicit BCMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  /// Row-major entries; throws DimensionMismatch unless entries.size() == n².
  BCMatrix(std::size_t n, std::vector<Bicomplex> entries);

  static BCMatrix identity(std::size_t n);
  static BCMatrix diagonal(const std::vector<Bicomplex>& diag);

  std::size_t size() const { return n_; }
  const Bicomplex& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  Bicomplex& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const std::vector<Bicomplex>& entries() const { return entries_; }

  BCMatrix& operator+=(const BCMatrix& o);
  BCMatrix& operator-=(const BCMatrix& o);

  friend bool operator==(const BCMatrix&, const BCMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Bicomplex> entries_;
};

BCMatrix operator+(BCMatrix a, const BCMatrix& b);
BCMatrix operator-(BCMatrix a, const BCMatrix& b);
BCMatrix operator*(const BCMatrix& a, const BCMatrix& b);
BCMatrix operator*(const Bicomplex& alpha, const BCMatrix& a);
/// Matrix-vector product over the bicomplex ring.
BCVector operator*(const BCMatrix& t, const BCVector& x);
inline BCVector apply(const BCMatrix& t, const BCVector& x) { return t * x; }

/// Frobenius-style real norm sqrt(sum |T_rc|²) = sqrt((||T1||_F² + ||T2||_F²)/2).
double norm_x(const BCMatrix& t);

/// Conjugate-star transpose: <x, T y> = <T* x, y>.
BCMatrix adjoint(const BCMatrix& t);

inline constexpr double kSelfAdjointTolerance = 1e-12;

/// ||T − T*||_X.
double self_adjoint_defect(const BCMatrix& t);

/// defect ≤ tol·(1 + ||T||_X).
bool is_self_adjoint(const BCMatrix& t, double tol = kSelfAdjointTolerance);

std::pair<ComplexMatrix, ComplexMatrix> op_split(const BCMatrix& t);
/// Throws DimensionMismatch unless both components are square of equal size.
BCMatrix op_join(const ComplexMatrix& t1, const ComplexMatrix& t2);

}  // namespace bcx
