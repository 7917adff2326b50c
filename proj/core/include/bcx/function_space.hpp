#pragma once

// Bicomplex-valued functions on [a, b], sampled on a uniform midpoint grid.
//
//   f = x0 + i x1 + j x2 + k x3 = u e1 + v e2,
//   u = (x0 + x3) + i (x1 − x2),  v = (x0 − x3) + i (x1 + x2),
//   <f, g> = sum_q h · f(t_q) · conj_star(g(t_q)),  h = (b − a)/N.

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "bcx/bicomplex.hpp"

namespace bcx {

inline constexpr std::size_t kDefaultQuadraturePoints = 256;

struct BCFunctionSamples {
  double a = 0.0;
  double b = 1.0;
  std::vector<double> grid;
  std::vector<Bicomplex> values;

  std::size_t size() const { return values.size(); }
  /// Uniform midpoint weight (b − a)/N.
  double weight() const;

  /// t_q = a + (q + 1/2)(b − a)/N.
  static std::vector<double> midpoint_grid(double a, double b, std::size_t n);
  static BCFunctionSamples sample(double a, double b, std::size_t n,
                                  const std::function<Bicomplex(double)>& f);
  /// Attaches values to the midpoint grid on [a, b]; n = values.size().
  static BCFunctionSamples from_values(double a, double b, std::vector<Bicomplex> values);
};

struct FunctionComponents {
  std::vector<Complex> u;
  std::vector<Complex> v;
};

FunctionComponents decompose_function(const BCFunctionSamples& f);
/// Inverse of decompose_function on the grid of `like`.
BCFunctionSamples join_function(const BCFunctionSamples& like, const FunctionComponents& parts);

/// Throws Error{GridMismatch} unless both sample sets share [a, b] and N.
Bicomplex l2_inner(const BCFunctionSamples& f, const BCFunctionSamples& g);

/// sqrt((||u||² + ||v||²)/2)
double l2_norm_components(const BCFunctionSamples& f);
/// sqrt(sum_q h |f(t_q)|²) with |f|² = x0² + x1² + x2² + x3².
double l2_norm_quadruple(const BCFunctionSamples& f);
/// modulus of <f, f>, whose e-coordinates are ||u||² and ||v||², fed
/// through the hyperbolic-to-real norm relation.
double l2_norm_from_inner(const BCFunctionSamples& f);

/// (M_φ f)(t_q) = φ(t_q) f(t_q).
class MultiplicationOperator {
 public:
  explicit MultiplicationOperator(BCFunctionSamples symbol) : symbol_(std::move(symbol)) {}

  /// φ(t) = t on the midpoint grid of [a, b].
  static MultiplicationOperator canonical(double a, double b,
                                          std::size_t n = kDefaultQuadraturePoints);

  const BCFunctionSamples& symbol() const { return symbol_; }

  /// Throws GridMismatch.
  BCFunctionSamples apply(const BCFunctionSamples& f) const;
  /// Multiplication by conj_star(φ).
  MultiplicationOperator adjoint() const;
  /// φ is star-fixed (hyperbolic-valued) at every sample.
  bool is_self_adjoint(double tol = kHyperbolicTolerance) const;

 private:
  BCFunctionSamples symbol_;
};

/// modulus(<M f, g> − <f, M g>); zero for every f, g iff M is self-adjoint.
double self_adjoint_pairing_residual(const MultiplicationOperator& m, const BCFunctionSamples& f,
                                     const BCFunctionSamples& g);

}  // namespace bcx
