#include "bcx/cyclic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "bcx/errors.hpp"
#include "bcx/hermitian_eig.hpp"

namespace bcx {

namespace {

ComplexMatrix to_matrix(const std::vector<ComplexVector>& cols, std::size_t begin,
                        std::size_t end, Eigen::Index n) {
  ComplexMatrix m(n, static_cast<Eigen::Index>(end - begin));
  for (std::size_t i = begin; i < end; ++i) m.col(static_cast<Eigen::Index>(i - begin)) = cols[i];
  return m;
}

void require_self_adjoint(const BCMatrix& t) {
  const double defect = self_adjoint_defect(t);
  if (defect > kSelfAdjointTolerance * (1.0 + norm_x(t))) throw NotSelfAdjointError(defect);
}

struct ComponentBlock {
  ComplexMatrix basis;
  ComplexVector start;
};

/// One start vector per block: block b sums the b-th eigenvector of every
/// eigenvalue cluster with multiplicity > b, so each Krylov span is as
/// large as the remaining complement allows.
std::vector<ComplexVector> block_starts(const ComplexMatrix& a, double tol) {
  JacobiOptions jacobi;
  jacobi.hermitian_tol = std::numeric_limits<double>::infinity();
  const HermitianEigen eig = hermitian_eig(a, jacobi);
  const double gap = tol * (1.0 + a.norm());
  std::vector<std::vector<Eigen::Index>> clusters;
  for (std::size_t i = 0; i < eig.values.size(); ++i) {
    if (clusters.empty() || eig.values[i] - eig.values[i - 1] > gap) clusters.emplace_back();
    clusters.back().push_back(static_cast<Eigen::Index>(i));
  }
  std::vector<ComplexVector> starts;
  for (std::size_t b = 0;; ++b) {
    ComplexVector s = ComplexVector::Zero(a.rows());
    bool any = false;
    for (const auto& c : clusters) {
      if (b < c.size()) {
        s += eig.vectors.col(c[b]);
        any = true;
      }
    }
    if (!any) break;
    starts.push_back(std::move(s));
  }
  return starts;
}

std::vector<ComponentBlock> deflate(const ComplexMatrix& a, double tol) {
  const Eigen::Index n = a.rows();
  const double cutoff = tol * a.norm();
  std::vector<ComplexVector> candidates = block_starts(a, tol);
  // standard basis vectors only matter if rounding left something uncaptured
  for (Eigen::Index j = 0; j < n; ++j) candidates.push_back(ComplexVector::Unit(n, j));
  std::vector<ComplexVector> captured;
  std::vector<ComponentBlock> blocks;
  for (std::size_t j = 0; j < candidates.size() && static_cast<Eigen::Index>(captured.size()) < n; ++j) {
    const std::size_t begin = captured.size();
    if (!orthonormal_append(captured, candidates[j], tol * candidates[j].norm())) continue;
    while (static_cast<Eigen::Index>(captured.size()) < n) {
      ComplexVector next = a * captured.back();
      if (!orthonormal_append(captured, std::move(next), cutoff)) break;
    }
    blocks.push_back({to_matrix(captured, begin, captured.size(), n), captured[begin]});
  }
  return blocks;
}

}  // namespace

KrylovPair krylov_matrix(const BCMatrix& t, const BCVector& w, std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("krylov_matrix: depth must be at least 1");
  if (t.size() != w.size()) {
    throw Error(ErrorKind::DimensionMismatch, "krylov_matrix: operator of size " +
                                                  std::to_string(t.size()) + ", vector of size " +
                                                  std::to_string(w.size()));
  }
  const auto [t1, t2] = op_split(t);
  const auto [w1, w2] = vec_split(w);
  const auto n = static_cast<Eigen::Index>(t.size());
  const auto d = static_cast<Eigen::Index>(depth);
  KrylovPair out{ComplexMatrix(n, d), ComplexMatrix(n, d)};
  out.first.col(0) = w1.entries;
  out.second.col(0) = w2.entries;
  for (Eigen::Index m = 1; m < d; ++m) {
    out.first.col(m) = t1 * out.first.col(m - 1);
    out.second.col(m) = t2 * out.second.col(m - 1);
  }
  return out;
}

std::size_t krylov_rank(const ComplexMatrix& a, const ComplexVector& v, double tol,
                        double vector_scale) {
  std::vector<ComplexVector> basis;
  if (!orthonormal_append(basis, v, tol * vector_scale)) return 0;
  const double cutoff = tol * a.norm();
  while (static_cast<Eigen::Index>(basis.size()) < a.rows()) {
    ComplexVector next = a * basis.back();
    if (!orthonormal_append(basis, std::move(next), cutoff)) break;
  }
  return basis.size();
}

CyclicityReport is_cyclic(const BCMatrix& t, const BCVector& w, double tol) {
  if (t.size() != w.size()) {
    throw Error(ErrorKind::DimensionMismatch, "is_cyclic: operator of size " +
                                                  std::to_string(t.size()) + ", vector of size " +
                                                  std::to_string(w.size()));
  }
  const auto [t1, t2] = op_split(t);
  const auto [w1, w2] = vec_split(w);
  const double vector_scale = std::max(w1.entries.norm(), w2.entries.norm());
  CyclicityReport r;
  r.n = t.size();
  r.rank1 = krylov_rank(t1, w1.entries, tol, vector_scale);
  r.rank2 = krylov_rank(t2, w2.entries, tol, vector_scale);
  r.cyclic = r.rank1 == r.n && r.rank2 == r.n;
  return r;
}

std::optional<BCVector> find_cyclic_vector(const BCMatrix& t) {
  require_self_adjoint(t);
  const auto n = static_cast<Eigen::Index>(t.size());
  if (n == 0) return std::nullopt;

  JacobiOptions jacobi;
  jacobi.hermitian_tol = std::numeric_limits<double>::infinity();
  const auto [t1, t2] = op_split(t);
  const HermitianEigen eig1 = hermitian_eig(t1, jacobi);
  const HermitianEigen eig2 = hermitian_eig(t2, jacobi);

  const double min_gap = kRankTolerance * (1.0 + norm_x(t));
  auto simple = [&](const std::vector<double>& values) {
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (values[i] - values[i - 1] <= min_gap) return false;
    }
    return true;
  };
  if (!simple(eig1.values) || !simple(eig2.values)) return std::nullopt;

  const ComplexVector ones = ComplexVector::Ones(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  BCVector w = vec_join(eig1.vectors * ones * scale, eig2.vectors * ones * scale);
  if (!is_cyclic(t, w).cyclic) return std::nullopt;
  return w;
}

CyclicDecomposition cyclic_direct_sum(const BCMatrix& t, double tol) {
  require_self_adjoint(t);
  const auto [t1, t2] = op_split(t);
  const auto blocks1 = deflate(t1, tol);
  const auto blocks2 = deflate(t2, tol);

  const auto n = static_cast<Eigen::Index>(t.size());
  CyclicDecomposition out;
  out.n = t.size();
  out.block_count1 = blocks1.size();
  out.block_count2 = blocks2.size();
  const std::size_t count = std::max(blocks1.size(), blocks2.size());
  for (std::size_t b = 0; b < count; ++b) {
    CyclicBlock block;
    ComplexVector s1 = ComplexVector::Zero(n);
    ComplexVector s2 = ComplexVector::Zero(n);
    if (b < blocks1.size()) {
      block.basis1 = blocks1[b].basis;
      s1 = blocks1[b].start;
    } else {
      block.basis1.resize(n, 0);
    }
    if (b < blocks2.size()) {
      block.basis2 = blocks2[b].basis;
      s2 = blocks2[b].start;
    } else {
      block.basis2.resize(n, 0);
    }
    block.cyclic_vector = vec_join(s1, s2);
    out.dim_sum1 += block.dim1();
    out.dim_sum2 += block.dim2();
    out.blocks.push_back(std::move(block));
  }
  return out;
}

double invariance_residual(const ComplexMatrix& a, const ComplexMatrix& basis) {
  if (basis.cols() == 0) return 0.0;
  const ComplexMatrix image = a * basis;
  return (image - basis * (basis.adjoint() * image)).norm();
}

double cross_orthogonality(const ComplexMatrix& basis, const ComplexMatrix& other) {
  if (basis.cols() == 0 || other.cols() == 0) return 0.0;
  return (basis.adjoint() * other).cwiseAbs().maxCoeff();
}

}  // namespace bcx
