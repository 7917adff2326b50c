#include "bcx/spectral_measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bcx/cyclic.hpp"
#include "bcx/errors.hpp"
#include "bcx/hermitian_eig.hpp"

namespace bcx {

double AtomicMeasure::total_mass() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

double AtomicMeasure::moment(int m) const {
  double s = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) s += weights[i] * std::pow(atoms[i], m);
  return s;
}

namespace {

struct ComponentData {
  HermitianEigen eig;
  ComplexVector normalized;
  ComplexVector overlaps;  // u_i^H w_c
};

ComponentData analyze(const ComplexMatrix& a, const ComplexVector& w, double cutoff, int index) {
  const double norm = w.norm();
  if (!(norm > cutoff)) {
    throw Error(ErrorKind::ZeroComponent, "component " + std::to_string(index) +
                                              " of the vector vanishes and cannot be normalized");
  }
  JacobiOptions jacobi;
  jacobi.hermitian_tol = std::numeric_limits<double>::infinity();
  ComponentData d{hermitian_eig(a, jacobi), w / norm, {}};
  d.overlaps = d.eig.vectors.adjoint() * d.normalized;
  return d;
}

AtomicMeasure measure_of(const ComponentData& d) {
  AtomicMeasure mu;
  mu.atoms = d.eig.values;
  mu.weights.reserve(mu.atoms.size());
  for (Eigen::Index i = 0; i < d.overlaps.size(); ++i) mu.weights.push_back(std::norm(d.overlaps(i)));
  return mu;
}

struct Prepared {
  ComponentData c1;
  ComponentData c2;
};

Prepared prepare(const BCMatrix& t, const BCVector& w) {
  const double defect = self_adjoint_defect(t);
  if (defect > kSelfAdjointTolerance * (1.0 + norm_x(t))) throw NotSelfAdjointError(defect);
  if (t.size() != w.size()) {
    throw Error(ErrorKind::DimensionMismatch, "cyclic_measure: operator of size " +
                                                  std::to_string(t.size()) + ", vector of size " +
                                                  std::to_string(w.size()));
  }
  const auto [t1, t2] = op_split(t);
  const auto [w1, w2] = vec_split(w);
  const double cutoff = kZeroDivisorTolerance * std::max(1.0, norm_real(w));
  Prepared p{analyze(t1, w1.entries, cutoff, 1), analyze(t2, w2.entries, cutoff, 2)};

  const CyclicityReport report = is_cyclic(t, w);
  if (!report.cyclic) throw NotCyclicError(static_cast<int>(report.rank1),
                                           static_cast<int>(report.rank2),
                                           static_cast<int>(report.n));
  for (const ComponentData* d : {&p.c1, &p.c2}) {
    for (Eigen::Index i = 0; i < d->overlaps.size(); ++i) {
      if (std::norm(d->overlaps(i)) < kMinAtomWeight) {
        throw NotCyclicError(static_cast<int>(report.rank1), static_cast<int>(report.rank2),
                             static_cast<int>(report.n),
                             "atom " + std::to_string(d->eig.values[static_cast<std::size_t>(i)]) +
                                 " carries weight below " + std::to_string(kMinAtomWeight));
      }
    }
  }
  return p;
}

ComplexMatrix unitary_of(const ComponentData& d) {
  // rows scaled by 1 / <w_c, u_i>
  ComplexMatrix u = d.eig.vectors.adjoint();
  for (Eigen::Index i = 0; i < u.rows(); ++i) u.row(i) /= d.overlaps(i);
  return u;
}

}  // namespace

AtomicMeasurePair cyclic_measure(const BCMatrix& t, const BCVector& w) {
  const Prepared p = prepare(t, w);
  return {measure_of(p.c1), measure_of(p.c2)};
}

L2Representation unitary_to_l2(const BCMatrix& t, const BCVector& w) {
  const Prepared p = prepare(t, w);
  L2Representation r;
  r.unitary1 = unitary_of(p.c1);
  r.unitary2 = unitary_of(p.c2);
  r.measure = {measure_of(p.c1), measure_of(p.c2)};
  r.normalized1 = p.c1.normalized;
  r.normalized2 = p.c2.normalized;
  return r;
}

BCMatrix L2Representation::joined() const { return op_join(unitary1, unitary2); }

BCMatrix L2Representation::joined_inverse() const {
  // U_c rows are V_c^H rows divided by o_i, so U_c U_c^H = diag(1/|o_i|²)
  // and U_c^{-1} = U_c^H diag(|o_i|²) = U_c^H diag(weights).
  auto inverse = [](const ComplexMatrix& u, const AtomicMeasure& mu) {
    ComplexMatrix inv = u.adjoint();
    for (Eigen::Index i = 0; i < inv.cols(); ++i) inv.col(i) *= mu.weights[static_cast<std::size_t>(i)];
    return inv;
  };
  return op_join(inverse(unitary1, measure.first), inverse(unitary2, measure.second));
}

BCMatrix L2Representation::multiplication() const {
  std::vector<Bicomplex> diag;
  for (std::size_t i = 0; i < measure.first.atoms.size(); ++i) {
    diag.push_back(embed(Hyperbolic::from_idempotent(measure.first.atoms[i], measure.second.atoms[i])));
  }
  return BCMatrix::diagonal(diag);
}

Complex vector_moment(const ComplexMatrix& a, const ComplexVector& v, int m) {
  ComplexVector x = v;
  for (int k = 0; k < m; ++k) x = a * x;
  return v.dot(x);
}

double l2_mu_norm_squared(const AtomicMeasure& mu, const ComplexVector& values) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    s += mu.weights[static_cast<std::size_t>(i)] * std::norm(values(i));
  }
  return s;
}

}  // namespace bcx
