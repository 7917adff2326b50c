#pragma once

// Finite-dimensional bicomplex Hilbert modules BC^n.
//
// A vector x splits entrywise as x = e1 x1 + e2 x2 with x1, x2 in C^n, and
// the inner product is
//   <x, y> = sum_i x_i conj_star(y_i) = e1 <x1, y1>_1 + e2 <x2, y2>_2,
// linear in the first slot, star-conjugate in the second.

#include <Eigen/Dense>

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "bcx/bicomplex.hpp"

namespace bcx {

using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

enum class Component { First = 1, Second = 2 };

/// One idempotent component of a BC vector, living in C^n with the
/// standard inner product sum_i a_i conj(b_i).
struct ComponentVector {
  Component component = Component::First;
  ComplexVector entries;

  std::size_t size() const { return static_cast<std::size_t>(entries.size()); }
};

class BCVector {
 public:
  BCVector() = default;
  explicit BCVector(std::size_t n) : entries_(n) {}
  explicit BCVector(std::vector<Bicomplex> entries) : entries_(std::move(entries)) {}
  BCVector(std::initializer_list<Bicomplex> entries) : entries_(entries) {}

  /// Standard basis vector e_index of BC^n.
  static BCVector basis(std::size_t n, std::size_t index);

  std::size_t size() const { return entries_.size(); }
  const Bicomplex& operator[](std::size_t i) const { return entries_[i]; }
  Bicomplex& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Bicomplex>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  BCVector& operator+=(const BCVector& o);
  BCVector& operator-=(const BCVector& o);

  friend bool operator==(const BCVector&, const BCVector&) = default;

 private:
  std::vector<Bicomplex> entries_;
};

BCVector operator+(BCVector a, const BCVector& b);
BCVector operator-(BCVector a, const BCVector& b);
BCVector operator*(const Bicomplex& alpha, const BCVector& x);

std::pair<ComponentVector, ComponentVector> vec_split(const BCVector& x);
/// Throws DimensionMismatch on unequal lengths.
BCVector vec_join(const ComplexVector& x1, const ComplexVector& x2);
BCVector vec_join(const ComponentVector& x1, const ComponentVector& x2);

/// Throws DimensionMismatch on unequal lengths.
Bicomplex inner(const BCVector& x, const BCVector& y);

/// e1 ||x1|| + e2 ||x2||
Hyperbolic norm_hyperbolic(const BCVector& x);

/// sqrt((||x1||² + ||x2||²) / 2); equals modulus(embed(norm_hyperbolic(x))).
double norm_real(const BCVector& x);

inline constexpr double kOrthonormalizeTolerance = 1e-10;

/// Orthogonalizes v against an orthonormal set (two passes of modified
/// Gram-Schmidt) and appends it if what remains exceeds `cutoff`.
/// Returns true when a vector was appended.
bool orthonormal_append(std::vector<ComplexVector>& basis, ComplexVector v, double cutoff);

struct ComponentwiseBasis {
  std::vector<ComplexVector> first;
  std::vector<ComplexVector> second;
  /// join(first[a], second[a]), with zero padding where one component basis
  /// is shorter.  size() == max(first.size(), second.size()).
  std::vector<BCVector> vectors;

  std::size_t rank1() const { return first.size(); }
  std::size_t rank2() const { return second.size(); }
};

/// Gram-Schmidt run independently in each idempotent component.  A
/// component is dropped once its residual falls below
/// tol·(largest input norm in that component).
ComponentwiseBasis orthonormalize_componentwise(const std::vector<BCVector>& vs,
                                                double tol = kOrthonormalizeTolerance);

}  // namespace bcx
