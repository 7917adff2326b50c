#pragma once

/**
 * @file bicomplex.hpp
 * @brief Bicomplex and hyperbolic scalars.
 *
 * A bicomplex number is w = x0 + i x1 + j x2 + k x3 with i² = j² = −1,
 * ij = ji = k and k² = 1.  Grouping by j gives w = z1 + z2 j with
 * z1 = x0 + i x1, z2 = x2 + i x3.
 *
 * The idempotents e1 = (1+k)/2 and e2 = (1−k)/2 satisfy e1 e2 = 0 and
 * e1 + e2 = 1, so every scalar splits uniquely as w = w1 e1 + w2 e2 with
 *   w1 = z1 − i z2,   w2 = z1 + i z2.
 * In these coordinates the ring operations act componentwise, which is
 * what turns every bicomplex problem into a pair of complex ones.
 *
 * The quadruple (x0, x1, x2, x3) is the stored form; the idempotent pair
 * is computed on demand.
 */

#include <complex>
#include <optional>

namespace bcx {

using Complex = std::complex<double>;

/// Coordinates of a bicomplex scalar along e1 and e2.
struct IdempotentPair {
  Complex w1;
  Complex w2;

  friend bool operator==(const IdempotentPair&, const IdempotentPair&) = default;
};

/// h = h1 + k h2, equivalently a1 e1 + a2 e2 with a1 = h1 + h2, a2 = h1 − h2.
struct Hyperbolic {
  double h1 = 0.0;
  double h2 = 0.0;

  static constexpr Hyperbolic from_idempotent(double a1, double a2) {
    return {(a1 + a2) / 2.0, (a1 - a2) / 2.0};
  }

  constexpr double a1() const { return h1 + h2; }
  constexpr double a2() const { return h1 - h2; }

  friend bool operator==(const Hyperbolic&, const Hyperbolic&) = default;
};

struct Bicomplex {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr Bicomplex() = default;
  constexpr Bicomplex(double a0, double a1, double a2, double a3)
      : x0(a0), x1(a1), x2(a2), x3(a3) {}
  // Implicit from reals and from C(i): both embed canonically.
  constexpr Bicomplex(double re) : x0(re) {}  // NOLINT
  constexpr Bicomplex(Complex z) : x0(z.real()), x1(z.imag()) {}  // NOLINT

  /// w = z1 + z2 j.
  static constexpr Bicomplex from_complex_pair(Complex z1, Complex z2) {
    return {z1.real(), z1.imag(), z2.real(), z2.imag()};
  }

  static constexpr Bicomplex zero() { return {}; }
  static constexpr Bicomplex one() { return {1, 0, 0, 0}; }
  static constexpr Bicomplex i() { return {0, 1, 0, 0}; }
  static constexpr Bicomplex j() { return {0, 0, 1, 0}; }
  static constexpr Bicomplex k() { return {0, 0, 0, 1}; }
  static constexpr Bicomplex e1() { return {0.5, 0, 0, 0.5}; }
  static constexpr Bicomplex e2() { return {0.5, 0, 0, -0.5}; }

  constexpr Complex z1() const { return {x0, x1}; }
  constexpr Complex z2() const { return {x2, x3}; }

  constexpr bool is_exact_zero() const {
    return x0 == 0.0 && x1 == 0.0 && x2 == 0.0 && x3 == 0.0;
  }

  friend bool operator==(const Bicomplex&, const Bicomplex&) = default;

  Bicomplex& operator+=(const Bicomplex& o) {
    x0 += o.x0; x1 += o.x1; x2 += o.x2; x3 += o.x3;
    return *this;
  }
  Bicomplex& operator-=(const Bicomplex& o) {
    x0 -= o.x0; x1 -= o.x1; x2 -= o.x2; x3 -= o.x3;
    return *this;
  }
  Bicomplex& operator*=(const Bicomplex& o);
};

constexpr Bicomplex operator-(const Bicomplex& a) { return {-a.x0, -a.x1, -a.x2, -a.x3}; }
constexpr Bicomplex operator+(const Bicomplex& a, const Bicomplex& b) {
  return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
}
constexpr Bicomplex operator-(const Bicomplex& a, const Bicomplex& b) {
  return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
}

// Products of units: ij = k, ik = −j, jk = −i.
constexpr Bicomplex operator*(const Bicomplex& a, const Bicomplex& b) {
  return {a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 + a.x3 * b.x3,
          a.x0 * b.x1 + a.x1 * b.x0 - a.x2 * b.x3 - a.x3 * b.x2,
          a.x0 * b.x2 + a.x2 * b.x0 - a.x1 * b.x3 - a.x3 * b.x1,
          a.x0 * b.x3 + a.x3 * b.x0 + a.x1 * b.x2 + a.x2 * b.x1};
}

inline Bicomplex& Bicomplex::operator*=(const Bicomplex& o) { return *this = *this * o; }

constexpr Bicomplex operator*(double s, const Bicomplex& a) {
  return {s * a.x0, s * a.x1, s * a.x2, s * a.x3};
}
constexpr Bicomplex operator*(const Bicomplex& a, double s) { return s * a; }

// ---- conjugations ---------------------------------------------------------

/// z̄1 + z̄2 j
constexpr Bicomplex conj_bar(const Bicomplex& w) { return {w.x0, -w.x1, w.x2, -w.x3}; }
/// z1 − z2 j
constexpr Bicomplex conj_plus(const Bicomplex& w) { return {w.x0, w.x1, -w.x2, -w.x3}; }
/// z̄1 − z̄2 j; acts as complex conjugation on both idempotent coordinates.
constexpr Bicomplex conj_star(const Bicomplex& w) { return {w.x0, -w.x1, -w.x2, w.x3}; }

// ---- idempotent coordinates -----------------------------------------------

constexpr IdempotentPair idempotent_split(const Bicomplex& w) {
  return {{w.x0 + w.x3, w.x1 - w.x2}, {w.x0 - w.x3, w.x1 + w.x2}};
}

constexpr Bicomplex idempotent_join(const IdempotentPair& p) {
  // z1 = (w1 + w2)/2, z2 = i (w1 − w2)/2
  const Complex s = p.w1 + p.w2;
  const Complex d = p.w1 - p.w2;
  return {s.real() / 2.0, s.imag() / 2.0, -d.imag() / 2.0, d.real() / 2.0};
}

constexpr Bicomplex idempotent_join(Complex w1, Complex w2) { return idempotent_join({w1, w2}); }

/// |w| = sqrt((|w1|² + |w2|²) / 2)
double modulus(const Bicomplex& w);

/// Relative cutoff under which an idempotent component counts as vanished.
inline constexpr double kZeroDivisorTolerance = 1e-14;

/// Exactly one idempotent coordinate is numerically zero.
bool is_zero_divisor(const Bicomplex& w);

/// Componentwise reciprocal; throws Error{NotInvertible} naming the
/// vanishing component(s).
Bicomplex invert(const Bicomplex& w);

// ---- hyperbolic numbers -----------------------------------------------------

inline constexpr double kHyperbolicTolerance = 1e-12;

constexpr Bicomplex embed(const Hyperbolic& h) { return {h.h1, 0.0, 0.0, h.h2}; }

/// x1 = x2 = 0 within tol·max(1, modulus).
bool is_hyperbolic(const Bicomplex& w, double tol = kHyperbolicTolerance);

/// Drops the i and j coordinates.  Pair with is_hyperbolic when the input
/// is not known to be star-fixed.
constexpr Hyperbolic hyperbolic_part(const Bicomplex& w) { return {w.x0, w.x3}; }

std::optional<Hyperbolic> to_hyperbolic(const Bicomplex& w, double tol = kHyperbolicTolerance);

constexpr Hyperbolic operator+(const Hyperbolic& a, const Hyperbolic& b) {
  return {a.h1 + b.h1, a.h2 + b.h2};
}
constexpr Hyperbolic operator-(const Hyperbolic& a, const Hyperbolic& b) {
  return {a.h1 - b.h1, a.h2 - b.h2};
}
constexpr Hyperbolic operator*(const Hyperbolic& a, const Hyperbolic& b) {
  return {a.h1 * b.h1 + a.h2 * b.h2, a.h1 * b.h2 + a.h2 * b.h1};
}

/// Membership in D⁺: both e-coordinates ≥ −τ.
bool hyperbolic_is_nonneg(const Hyperbolic& h, double tol = kHyperbolicTolerance);

enum class PartialOrder { LessEqual, Equal, GreaterEqual, Incomparable };

/// Componentwise order on the e-coordinates (a1, a2).  LessEqual and
/// GreaterEqual are strict in at least one coordinate; Equal wins ties.
PartialOrder hyperbolic_compare(const Hyperbolic& h, const Hyperbolic& g,
                                double tol = kHyperbolicTolerance);

}  // namespace bcx
