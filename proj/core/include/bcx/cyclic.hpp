#pragma once

// Cyclic vectors and the decomposition of BC^n into cyclic submodules.
//
// w is cyclic for T when span{w, Tw, T²w, ...} is everything.  Because
// T^m w = e1 T1^m w1 + e2 T2^m w2, that holds iff w1 is cyclic for T1 and
// w2 is cyclic for T2, so every decision here is made per component.

#include <cstddef>
#include <optional>
#include <vector>

#include "bcx/operator.hpp"

namespace bcx {

/// Single rank cutoff used for every cyclicity / deflation decision.
inline constexpr double kRankTolerance = 1e-10;

struct KrylovPair {
  ComplexMatrix first;   ///< n × depth, columns T1^m w1
  ComplexMatrix second;  ///< n × depth, columns T2^m w2
};

/// Raw Krylov columns w, Tw, ..., T^{depth−1} w per component, built by
/// repeated application.  Throws DimensionMismatch, or std::invalid_argument
/// when depth == 0.
KrylovPair krylov_matrix(const BCMatrix& t, const BCVector& w, std::size_t depth);

/// Dimension of span{v, Av, A²v, ...}.  The sequence is orthonormalized as
/// it is generated; the start vector counts as zero when
/// ||v|| ≤ tol·vector_scale and a new direction is rejected when its
/// residual is ≤ tol·||A||_F.
std::size_t krylov_rank(const ComplexMatrix& a, const ComplexVector& v, double tol,
                        double vector_scale);

struct CyclicityReport {
  bool cyclic = false;
  std::size_t rank1 = 0;
  std::size_t rank2 = 0;
  std::size_t n = 0;
};

/// Throws DimensionMismatch.
CyclicityReport is_cyclic(const BCMatrix& t, const BCVector& w, double tol = kRankTolerance);

/// For self-adjoint T a cyclic vector exists iff both component spectra
/// are simple.  Returns join(V1·1, V2·1) scaled to norm_real = 1, or
/// nullopt.  Throws NotSelfAdjointError.
std::optional<BCVector> find_cyclic_vector(const BCMatrix& t);

struct CyclicBlock {
  ComplexMatrix basis1;  ///< n × dim1, orthonormal columns; dim1 may be 0
  ComplexMatrix basis2;  ///< n × dim2
  /// join of the two per-component start vectors (zero where a component
  /// has no block at this position).
  BCVector cyclic_vector;

  std::size_t dim1() const { return static_cast<std::size_t>(basis1.cols()); }
  std::size_t dim2() const { return static_cast<std::size_t>(basis2.cols()); }
};

struct CyclicDecomposition {
  std::size_t n = 0;
  std::vector<CyclicBlock> blocks;
  std::size_t dim_sum1 = 0;
  std::size_t dim_sum2 = 0;
  std::size_t block_count1 = 0;
  std::size_t block_count2 = 0;
};

/// Deflation per component: pick a start vector outside the captured span,
/// orthonormalize its Krylov sequence against everything captured, record
/// the block, repeat until the component is exhausted.  Block b starts from
/// the sum of the b-th eigenvector of each eigenvalue cluster, so the block
/// count equals the largest eigenvalue multiplicity.  Throws
/// NotSelfAdjointError.
CyclicDecomposition cyclic_direct_sum(const BCMatrix& t, double tol = kRankTolerance);

/// ||A B − B (B^H A B)||_F: zero iff span(B) is A-invariant.
double invariance_residual(const ComplexMatrix& a, const ComplexMatrix& basis);

/// Largest |<b_i, c_j>| over columns of two bases.
double cross_orthogonality(const ComplexMatrix& basis, const ComplexMatrix& other);

}  // namespace bcx
