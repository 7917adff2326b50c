#include "bcx/function_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bcx/errors.hpp"

namespace bcx {

namespace {

void require_same_grid(const BCFunctionSamples& f, const BCFunctionSamples& g) {
  if (f.a != g.a || f.b != g.b || f.size() != g.size()) {
    throw Error(ErrorKind::GridMismatch,
                "sample grids differ: [" + std::to_string(f.a) + ", " + std::to_string(f.b) +
                    "] N=" + std::to_string(f.size()) + " vs [" + std::to_string(g.a) + ", " +
                    std::to_string(g.b) + "] N=" + std::to_string(g.size()));
  }
}

}  // namespace

double BCFunctionSamples::weight() const {
  return values.empty() ? 0.0 : (b - a) / static_cast<double>(values.size());
}

std::vector<double> BCFunctionSamples::midpoint_grid(double a, double b, std::size_t n) {
  std::vector<double> grid(n);
  const double h = (b - a) / static_cast<double>(n);
  for (std::size_t q = 0; q < n; ++q) grid[q] = a + (static_cast<double>(q) + 0.5) * h;
  return grid;
}

BCFunctionSamples BCFunctionSamples::sample(double a, double b, std::size_t n,
                                            const std::function<Bicomplex(double)>& f) {
  BCFunctionSamples s{a, b, midpoint_grid(a, b, n), {}};
  s.values.reserve(n);
  for (double t : s.grid) s.values.push_back(f(t));
  return s;
}

BCFunctionSamples BCFunctionSamples::from_values(double a, double b,
                                                 std::vector<Bicomplex> values) {
  BCFunctionSamples s{a, b, midpoint_grid(a, b, values.size()), std::move(values)};
  return s;
}

FunctionComponents decompose_function(const BCFunctionSamples& f) {
  FunctionComponents parts;
  parts.u.reserve(f.size());
  parts.v.reserve(f.size());
  for (const auto& x : f.values) {
    const IdempotentPair p = idempotent_split(x);
    parts.u.push_back(p.w1);
    parts.v.push_back(p.w2);
  }
  return parts;
}

BCFunctionSamples join_function(const BCFunctionSamples& like, const FunctionComponents& parts) {
  if (parts.u.size() != like.size() || parts.v.size() != like.size()) {
    throw Error(ErrorKind::GridMismatch, "join_function: component lengths do not match the grid");
  }
  BCFunctionSamples out{like.a, like.b, like.grid, {}};
  out.values.reserve(like.size());
  for (std::size_t q = 0; q < like.size(); ++q) {
    out.values.push_back(idempotent_join(parts.u[q], parts.v[q]));
  }
  return out;
}

Bicomplex l2_inner(const BCFunctionSamples& f, const BCFunctionSamples& g) {
  require_same_grid(f, g);
  Bicomplex acc;
  for (std::size_t q = 0; q < f.size(); ++q) acc += f.values[q] * conj_star(g.values[q]);
  return f.weight() * acc;
}

double l2_norm_components(const BCFunctionSamples& f) {
  const FunctionComponents parts = decompose_function(f);
  double uu = 0.0, vv = 0.0;
  for (std::size_t q = 0; q < f.size(); ++q) {
    uu += std::norm(parts.u[q]);
    vv += std::norm(parts.v[q]);
  }
  const double h = f.weight();
  return std::sqrt((h * uu + h * vv) / 2.0);
}

double l2_norm_quadruple(const BCFunctionSamples& f) {
  double s = 0.0;
  for (const auto& x : f.values) s += x.x0 * x.x0 + x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3;
  return std::sqrt(f.weight() * s);
}

double l2_norm_from_inner(const BCFunctionSamples& f) {
  // <f, f> = e1 ||u||² + e2 ||v||²; the hyperbolic norm is e1 ||u|| + e2 ||v||
  const Hyperbolic squared = hyperbolic_part(l2_inner(f, f));
  const Hyperbolic norm = Hyperbolic::from_idempotent(std::sqrt(std::max(0.0, squared.a1())),
                                                      std::sqrt(std::max(0.0, squared.a2())));
  return modulus(embed(norm));
}

MultiplicationOperator MultiplicationOperator::canonical(double a, double b, std::size_t n) {
  return MultiplicationOperator(
      BCFunctionSamples::sample(a, b, n, [](double t) { return Bicomplex(t); }));
}

BCFunctionSamples MultiplicationOperator::apply(const BCFunctionSamples& f) const {
  require_same_grid(symbol_, f);
  BCFunctionSamples out{f.a, f.b, f.grid, {}};
  out.values.reserve(f.size());
  for (std::size_t q = 0; q < f.size(); ++q) out.values.push_back(symbol_.values[q] * f.values[q]);
  return out;
}

MultiplicationOperator MultiplicationOperator::adjoint() const {
  BCFunctionSamples s = symbol_;
  for (auto& x : s.values) x = conj_star(x);
  return MultiplicationOperator(std::move(s));
}

bool MultiplicationOperator::is_self_adjoint(double tol) const {
  for (const auto& x : symbol_.values) {
    if (!is_hyperbolic(x, tol)) return false;
  }
  return true;
}

double self_adjoint_pairing_residual(const MultiplicationOperator& m, const BCFunctionSamples& f,
                                     const BCFunctionSamples& g) {
  return modulus(l2_inner(m.apply(f), g) - l2_inner(f, m.apply(g)));
}

}  // namespace bcx
