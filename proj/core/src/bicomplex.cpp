#include "bcx/bicomplex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bcx/errors.hpp"

namespace bcx {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotSelfAdjoint: return "NotSelfAdjoint";
    case ErrorKind::NotCyclic: return "NotCyclic";
    case ErrorKind::ZeroComponent: return "ZeroComponent";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

double modulus(const Bicomplex& w) {
  const IdempotentPair p = idempotent_split(w);
  return std::sqrt((std::norm(p.w1) + std::norm(p.w2)) / 2.0);
}

namespace {

struct VanishingComponents {
  bool first;
  bool second;
};

VanishingComponents vanishing(const Bicomplex& w) {
  const IdempotentPair p = idempotent_split(w);
  const double cutoff = kZeroDivisorTolerance * modulus(w);
  return {std::abs(p.w1) <= cutoff, std::abs(p.w2) <= cutoff};
}

}  // namespace

bool is_zero_divisor(const Bicomplex& w) {
  if (w.is_exact_zero()) return false;
  const auto v = vanishing(w);
  return v.first != v.second;
}

Bicomplex invert(const Bicomplex& w) {
  if (w.is_exact_zero()) {
    throw Error(ErrorKind::NotInvertible, "cannot invert zero (both idempotent components vanish)");
  }
  const auto v = vanishing(w);
  if (v.first || v.second) {
    const std::string which = v.first && v.second ? "both idempotent components"
                              : v.first            ? "idempotent component 1 (e1)"
                                                   : "idempotent component 2 (e2)";
    throw Error(ErrorKind::NotInvertible, "cannot invert zero divisor: " + which + " vanishes");
  }
  const IdempotentPair p = idempotent_split(w);
  return idempotent_join(1.0 / p.w1, 1.0 / p.w2);
}

bool is_hyperbolic(const Bicomplex& w, double tol) {
  const double scale = std::max(1.0, modulus(w));
  return std::abs(w.x1) <= tol * scale && std::abs(w.x2) <= tol * scale;
}

std::optional<Hyperbolic> to_hyperbolic(const Bicomplex& w, double tol) {
  if (!is_hyperbolic(w, tol)) return std::nullopt;
  return hyperbolic_part(w);
}

bool hyperbolic_is_nonneg(const Hyperbolic& h, double tol) {
  return h.a1() >= -tol && h.a2() >= -tol;
}

PartialOrder hyperbolic_compare(const Hyperbolic& h, const Hyperbolic& g, double tol) {
  const double d1 = g.a1() - h.a1();
  const double d2 = g.a2() - h.a2();
  if (std::abs(d1) <= tol && std::abs(d2) <= tol) return PartialOrder::Equal;
  if (d1 >= -tol && d2 >= -tol) return PartialOrder::LessEqual;
  if (d1 <= tol && d2 <= tol) return PartialOrder::GreaterEqual;
  return PartialOrder::Incomparable;
}

}  // namespace bcx
