#pragma once

// Multiplication-operator normal form of a cyclic self-adjoint operator.
//
// For each idempotent component, the spectral measure of the cyclic
// vector w_c is atomic with atoms at the eigenvalues λ_i of T_c and
// weights |<w_c, u_i>|².  The map
//   (U_c h)(λ_i) = <h, u_i> / <w_c, u_i>
// is an isometry C^n → L²(μ_c) sending w_c to the constant 1 and T_c to
// multiplication by λ.

#include <vector>

#include "bcx/operator.hpp"

namespace bcx {

struct AtomicMeasure {
  std::vector<double> atoms;    ///< ascending
  std::vector<double> weights;  ///< > 0, summing to 1

  double total_mass() const;
  /// sum_i weights_i · atoms_i^m
  double moment(int m) const;
};

struct AtomicMeasurePair {
  AtomicMeasure first;
  AtomicMeasure second;
};

/// Atoms lighter than this make the vector non-cyclic.
inline constexpr double kMinAtomWeight = 1e-12;

/// Each component of w is normalized before use.  Throws
/// NotSelfAdjointError, NotCyclicError, or Error{ZeroComponent}.
AtomicMeasurePair cyclic_measure(const BCMatrix& t, const BCVector& w);

struct L2Representation {
  ComplexMatrix unitary1;  ///< U_1 : C^n → L²(μ_1), rows indexed by atoms
  ComplexMatrix unitary2;
  AtomicMeasurePair measure;
  ComplexVector normalized1;  ///< w_1 / ||w_1||
  ComplexVector normalized2;

  /// e1 U1 + e2 U2.
  BCMatrix joined() const;
  /// e1 U1^{-1} + e2 U2^{-1}; U_c^{-1} = V_c diag(<w_c, u_i>).
  BCMatrix joined_inverse() const;
  /// diag(e1 λ1_i + e2 λ2_i), the multiplication operator on atoms.
  BCMatrix multiplication() const;
};

L2Representation unitary_to_l2(const BCMatrix& t, const BCVector& w);

/// <v, A^m v> for the component operator.
Complex vector_moment(const ComplexMatrix& a, const ComplexVector& v, int m);

/// ||f||² in L²(μ) for a function given by its values on the atoms.
double l2_mu_norm_squared(const AtomicMeasure& mu, const ComplexVector& values);

}  // namespace bcx
