#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "bcx/cyclic.hpp"
#include "bcx/hermitian_eig.hpp"
#include "bcx/spectral.hpp"
#include "bcx/spectral_measure.hpp"
#include "random_instances.hpp"

namespace bcx::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double quad_norm(const Bicomplex& w) {
  return std::sqrt(w.x0 * w.x0 + w.x1 * w.x1 + w.x2 * w.x2 + w.x3 * w.x3);
}

double pair_distance(const IdempotentPair& p, const IdempotentPair& q) {
  return std::max(std::abs(p.w1 - q.w1), std::abs(p.w2 - q.w2));
}

double safe_ratio(double num, double den) { return den > 0.0 ? num / den : num; }

// The operator under test for the adjoint-pairing family.  A test-only
// build defines BCX_FAULT_FLIP_ADJOINT to check that the family can fail.
BCMatrix adjoint_under_test(const BCMatrix& t) {
#ifdef BCX_FAULT_FLIP_ADJOINT
  return Bicomplex(-1.0) * adjoint(t);
#else
  return adjoint(t);
#endif
}

class Runner {
 public:
  explicit Runner(const VerifyOptions& options) : options_(options), rng_(options.seed) {}

  void family(const std::string& name, double tolerance,
              const std::function<double(RandomInstances&)>& trial) {
    FamilyResult r{name, options_.trials, 0.0, tolerance, true};
    for (int t = 0; t < options_.trials; ++t) {
      const double residual = trial(rng_);
      // NaN counts as failure
      if (!(residual <= r.max_residual)) r.max_residual = residual;
    }
    r.passed = r.max_residual <= tolerance;
    results_.push_back(r);
  }

  std::vector<FamilyResult> take() { return std::move(results_); }

 private:
  const VerifyOptions& options_;
  RandomInstances rng_;
  std::vector<FamilyResult> results_;
};

double idempotent_algebra_trial(RandomInstances& rng) {
  const Bicomplex e1 = Bicomplex::e1(), e2 = Bicomplex::e2();
  double worst = std::max({quad_norm(e1 * e1 - e1), quad_norm(e2 * e2 - e2),
                           quad_norm(e1 + e2 - Bicomplex::one()), quad_norm(e1 * e2)});
  const Bicomplex a = rng.bicomplex(), b = rng.bicomplex();
  const IdempotentPair pa = idempotent_split(a), pb = idempotent_split(b);
  worst = std::max(worst, safe_ratio(pair_distance(idempotent_split(a * b),
                                                   {pa.w1 * pb.w1, pa.w2 * pb.w2}),
                                     modulus(a) * modulus(b)));
  worst = std::max(worst, safe_ratio(pair_distance(idempotent_split(a + b),
                                                   {pa.w1 + pb.w1, pa.w2 + pb.w2}),
                                     modulus(a) + modulus(b)));
  worst = std::max(worst, safe_ratio(quad_norm(idempotent_join(pa) - a), modulus(a)));
  return worst;
}

double modulus_trial(RandomInstances& rng) {
  const Bicomplex w = rng.bicomplex();
  const double quadruple = quad_norm(w);
  return safe_ratio(std::abs(modulus(w) - quadruple), quadruple);
}

double conjugation_trial(RandomInstances& rng) {
  const Bicomplex a = rng.bicomplex(), b = rng.bicomplex();
  double worst = std::max({quad_norm(conj_bar(conj_bar(a)) - a), quad_norm(conj_plus(conj_plus(a)) - a),
                           quad_norm(conj_star(conj_star(a)) - a),
                           quad_norm(conj_star(a) - conj_bar(conj_plus(a)))});
  worst = std::max(worst, safe_ratio(quad_norm(conj_star(a * b) - conj_star(a) * conj_star(b)),
                                     modulus(a) * modulus(b)));
  const Bicomplex h = a * conj_star(a);
  if (!is_hyperbolic(h) || !hyperbolic_is_nonneg(hyperbolic_part(h))) return kInf;
  return worst;
}

double inner_product_trial(RandomInstances& rng) {
  const std::size_t n = rng.index(1, 32);
  const BCVector x = rng.vector(n), y = rng.vector(n), z = rng.vector(n);
  const Bicomplex alpha = rng.bicomplex();
  const double nx = norm_real(x), ny = norm_real(y), nz = norm_real(z), na = modulus(alpha);

  double worst = safe_ratio(quad_norm(inner(x, y + z) - inner(x, y) - inner(x, z)), nx * (ny + nz));
  worst = std::max(worst, safe_ratio(quad_norm(inner(alpha * x, y) - alpha * inner(x, y)), na * nx * ny));
  worst = std::max(worst, safe_ratio(quad_norm(inner(x, y) - conj_star(inner(y, x))), nx * ny));
  worst = std::max(worst, safe_ratio(quad_norm(inner(x, alpha * y) - conj_star(alpha) * inner(x, y)),
                                     na * nx * ny));
  const Bicomplex xx = inner(x, x);
  if (!is_hyperbolic(xx) || !hyperbolic_is_nonneg(hyperbolic_part(xx))) return kInf;
  return worst;
}

double norm_relation_trial(RandomInstances& rng) {
  const BCVector x = rng.vector(rng.index(1, 64));
  const double real = norm_real(x);
  return safe_ratio(std::abs(modulus(embed(norm_hyperbolic(x))) - real), real);
}

double adjoint_pairing_residual(const BCMatrix& t, RandomInstances& rng) {
  const BCVector x = rng.vector(t.size()), y = rng.vector(t.size());
  const double scale = std::max(norm_x(t), 1e-300) * norm_real(x) * norm_real(y);
  return quad_norm(inner(x, t * y) - inner(adjoint_under_test(t) * x, y)) / scale;
}

double spectral_residual(const BCMatrix& t) {
  const SpectralDecomposition d = spectral_decompose(t);
  const auto [t1, t2] = op_split(t);
  const double scale = 1.0 + norm_x(t);
  double worst = std::max(d.residual / scale, unitarity_defect(d.unitary));
  // interval [−||T_c||_2, ||T_c||_2] with ||T_c||_2 ≤ ||T_c||_F
  const double b1 = t1.norm(), b2 = t2.norm();
  for (std::size_t i = 0; i < d.eigenvalues.size(); ++i) {
    worst = std::max(worst, std::abs(d.spectrum1[i]) - b1);
    worst = std::max(worst, std::abs(d.spectrum2[i]) - b2);
    const Hyperbolic& m = d.eigenvalues[i];
    worst = std::max(worst, std::abs(m.a1() - d.spectrum1[i]) / scale);
    worst = std::max(worst, std::abs(m.a2() - d.spectrum2[i]) / scale);
  }
  return worst;
}

double eigensolver_2x2_trial(RandomInstances& rng) {
  const ComplexMatrix a = rng.hermitian(2);
  const double p = a(0, 0).real(), q = a(1, 1).real();
  const double root = std::sqrt((p - q) * (p - q) + 4.0 * std::norm(a(0, 1)));
  const HermitianEigen eig = hermitian_eig(a);
  const double scale = 1.0 + a.norm();
  return std::max(std::abs(eig.values[0] - (p + q - root) / 2.0),
                  std::abs(eig.values[1] - (p + q + root) / 2.0)) / scale;
}

std::vector<double> spectrum_with_repeats(RandomInstances& rng, std::size_t n) {
  std::vector<double> s(n);
  const std::size_t distinct = rng.index(1, n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = i < distinct ? static_cast<double>(i) - static_cast<double>(n) / 2.0
                        : s[rng.index(0, distinct - 1)];
  }
  return s;
}

double cyclic_sum_trial(RandomInstances& rng) {
  const std::size_t n = rng.index(2, 8);
  const BCMatrix t =
      rng.self_adjoint_with_spectra(spectrum_with_repeats(rng, n), spectrum_with_repeats(rng, n));
  const CyclicDecomposition d = cyclic_direct_sum(t);
  if (d.dim_sum1 != n || d.dim_sum2 != n) return kInf;
  const auto [t1, t2] = op_split(t);
  double worst = 0.0;
  for (std::size_t a = 0; a < d.blocks.size(); ++a) {
    const CyclicBlock& ba = d.blocks[a];
    worst = std::max({worst, invariance_residual(t1, ba.basis1), invariance_residual(t2, ba.basis2)});
    for (std::size_t b = a + 1; b < d.blocks.size(); ++b) {
      worst = std::max({worst, cross_orthogonality(ba.basis1, d.blocks[b].basis1),
                        cross_orthogonality(ba.basis2, d.blocks[b].basis2)});
    }
    const ComplexMatrix r1 = ba.basis1.adjoint() * t1 * ba.basis1;
    const ComplexMatrix r2 = ba.basis2.adjoint() * t2 * ba.basis2;
    const auto [s1, s2] = vec_split(ba.cyclic_vector);
    if (krylov_rank(r1, ba.basis1.adjoint() * s1.entries, kRankTolerance, 1.0) != ba.dim1() ||
        krylov_rank(r2, ba.basis2.adjoint() * s2.entries, kRankTolerance, 1.0) != ba.dim2()) {
      return kInf;
    }
  }
  return worst;
}

std::vector<double> simple_spectrum(RandomInstances& rng, std::size_t n) {
  std::vector<double> s(n);
  double x = rng.uniform(-3.0, -1.0);
  for (auto& v : s) {
    v = x;
    x += rng.uniform(0.25, 1.0);
  }
  return s;
}

struct MeasureResiduals {
  double mass;
  double operator_identities;
};

MeasureResiduals measure_trial(RandomInstances& rng) {
  const std::size_t n = rng.index(2, 8);
  const BCMatrix t = rng.self_adjoint_with_spectra(simple_spectrum(rng, n), simple_spectrum(rng, n));
  const BCVector w = rng.vector(n);
  const L2Representation rep = unitary_to_l2(t, w);
  const auto [t1, t2] = op_split(t);

  MeasureResiduals r{0.0, 0.0};
  auto check = [&](const ComplexMatrix& tc, const ComplexMatrix& uc, const ComplexVector& wc,
                   const AtomicMeasure& mu) {
    r.mass = std::max(r.mass, std::abs(mu.total_mass() - 1.0));
    for (int m = 0; m <= 3; ++m) {
      r.operator_identities =
          std::max(r.operator_identities, std::abs(mu.moment(m) - vector_moment(tc, wc, m)));
    }
    Eigen::VectorXcd atoms(static_cast<Eigen::Index>(mu.atoms.size()));
    for (Eigen::Index i = 0; i < atoms.size(); ++i) atoms(i) = mu.atoms[static_cast<std::size_t>(i)];
    const double scale = uc.norm() * (1.0 + tc.norm());
    r.operator_identities = std::max(
        r.operator_identities, (uc * tc - atoms.asDiagonal() * uc).norm() / scale);
    r.operator_identities = std::max(
        r.operator_identities, (uc * wc - ComplexVector::Ones(wc.size())).cwiseAbs().maxCoeff());
  };
  check(t1, rep.unitary1, rep.normalized1, rep.measure.first);
  check(t2, rep.unitary2, rep.normalized2, rep.measure.second);
  return r;
}

}  // namespace

std::vector<FamilyResult> run_verify(const VerifyOptions& options) {
  if (options.trials <= 0) return {};
  Runner runner(options);

  runner.family("idempotent_algebra", 1e-12, idempotent_algebra_trial);
  runner.family("modulus_consistency", 1e-12, modulus_trial);
  runner.family("conjugations", 1e-12, conjugation_trial);
  runner.family("inner_product_axioms", 1e-12, inner_product_trial);
  runner.family("norm_relation", 1e-12, norm_relation_trial);

  int user_trial = 0;
  runner.family("adjoint_pairing", 1e-11, [&](RandomInstances& rng) {
    // every fourth trial reuses the user's matrix when one was supplied
    if (options.matrix && (user_trial++ % 4 == 0)) return adjoint_pairing_residual(*options.matrix, rng);
    return adjoint_pairing_residual(rng.matrix(rng.index(1, 16)), rng);
  });

  const bool user_self_adjoint = options.matrix && is_self_adjoint(*options.matrix);
  int spectral_trial = 0;
  runner.family("spectral_reconstruction", 1e-10, [&](RandomInstances& rng) {
    if (user_self_adjoint && (spectral_trial++ % 4 == 0)) return spectral_residual(*options.matrix);
    return spectral_residual(rng.self_adjoint(rng.index(2, 16)));
  });

  runner.family("eigensolver_2x2_oracle", 1e-12, eigensolver_2x2_trial);
  runner.family("cyclic_direct_sum", 1e-10, cyclic_sum_trial);

  // Both measure families replay the same instances.
  RandomInstances measure_rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<MeasureResiduals> measures;
  for (int i = 0; i < options.trials; ++i) measures.push_back(measure_trial(measure_rng));
  std::size_t next = 0;
  runner.family("spectral_measure_mass", 1e-12,
                [&](RandomInstances&) { return measures[next++].mass; });
  next = 0;
  runner.family("spectral_measure_identities", 1e-10,
                [&](RandomInstances&) { return measures[next++].operator_identities; });

  return runner.take();
}

}  // namespace bcx::cli
