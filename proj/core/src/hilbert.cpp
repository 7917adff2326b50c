#include "bcx/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bcx/errors.hpp"

namespace bcx {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": lengths " +
                                                  std::to_string(a) + " and " + std::to_string(b));
  }
}

}  // namespace

BCVector BCVector::basis(std::size_t n, std::size_t index) {
  BCVector v(n);
  v[index] = Bicomplex::one();
  return v;
}

BCVector& BCVector::operator+=(const BCVector& o) {
  require_same_size(size(), o.size(), "vector addition");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += o[i];
  return *this;
}

BCVector& BCVector::operator-=(const BCVector& o) {
  require_same_size(size(), o.size(), "vector subtraction");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= o[i];
  return *this;
}

BCVector operator+(BCVector a, const BCVector& b) { return a += b; }
BCVector operator-(BCVector a, const BCVector& b) { return a -= b; }

BCVector operator*(const Bicomplex& alpha, const BCVector& x) {
  BCVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = alpha * x[i];
  return out;
}

std::pair<ComponentVector, ComponentVector> vec_split(const BCVector& x) {
  const auto n = static_cast<Eigen::Index>(x.size());
  ComponentVector x1{Component::First, ComplexVector(n)};
  ComponentVector x2{Component::Second, ComplexVector(n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    const IdempotentPair p = idempotent_split(x[static_cast<std::size_t>(i)]);
    x1.entries(i) = p.w1;
    x2.entries(i) = p.w2;
  }
  return {std::move(x1), std::move(x2)};
}

BCVector vec_join(const ComplexVector& x1, const ComplexVector& x2) {
  require_same_size(static_cast<std::size_t>(x1.size()), static_cast<std::size_t>(x2.size()),
                    "vec_join");
  BCVector out(static_cast<std::size_t>(x1.size()));
  for (Eigen::Index i = 0; i < x1.size(); ++i) {
    out[static_cast<std::size_t>(i)] = idempotent_join(x1(i), x2(i));
  }
  return out;
}

BCVector vec_join(const ComponentVector& x1, const ComponentVector& x2) {
  return vec_join(x1.entries, x2.entries);
}

Bicomplex inner(const BCVector& x, const BCVector& y) {
  require_same_size(x.size(), y.size(), "inner");
  Bicomplex acc;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * conj_star(y[i]);
  return acc;
}

Hyperbolic norm_hyperbolic(const BCVector& x) {
  const auto [x1, x2] = vec_split(x);
  return Hyperbolic::from_idempotent(x1.entries.norm(), x2.entries.norm());
}

double norm_real(const BCVector& x) {
  const auto [x1, x2] = vec_split(x);
  return std::sqrt((x1.entries.squaredNorm() + x2.entries.squaredNorm()) / 2.0);
}

bool orthonormal_append(std::vector<ComplexVector>& basis, ComplexVector v, double cutoff) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& q : basis) v -= q.dot(v) * q;  // dot conjugates q
  }
  const double r = v.norm();
  if (!(r > cutoff)) return false;
  basis.push_back(v / r);
  return true;
}

ComponentwiseBasis orthonormalize_componentwise(const std::vector<BCVector>& vs, double tol) {
  ComponentwiseBasis out;
  if (vs.empty()) return out;

  std::vector<ComplexVector> c1, c2;
  double scale1 = 0.0, scale2 = 0.0;
  for (const auto& v : vs) {
    auto [a, b] = vec_split(v);
    scale1 = std::max(scale1, a.entries.norm());
    scale2 = std::max(scale2, b.entries.norm());
    c1.push_back(std::move(a.entries));
    c2.push_back(std::move(b.entries));
  }
  for (auto& v : c1) orthonormal_append(out.first, std::move(v), tol * scale1);
  for (auto& v : c2) orthonormal_append(out.second, std::move(v), tol * scale2);

  const auto n = static_cast<Eigen::Index>(vs.front().size());
  const std::size_t count = std::max(out.first.size(), out.second.size());
  for (std::size_t a = 0; a < count; ++a) {
    const ComplexVector z = ComplexVector::Zero(n);
    out.vectors.push_back(vec_join(a < out.first.size() ? out.first[a] : z,
                                   a < out.second.size() ? out.second[a] : z));
  }
  return out;
}

}  // namespace bcx
