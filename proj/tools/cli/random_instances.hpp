#pragma once

// Seeded generators for randomized checks.  Shared by `bcx verify` and the
// test suites.

#include <cstdint>
#include <random>
#include <vector>

#include "bcx/operator.hpp"

namespace bcx::cli {

class RandomInstances {
 public:
  explicit RandomInstances(std::uint64_t seed) : rng_(seed) {}

  double normal() { return normal_(rng_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  Complex complex() { return {normal(), normal()}; }
  Bicomplex bicomplex() { return {normal(), normal(), normal(), normal()}; }
  BCVector vector(std::size_t n);
  BCMatrix matrix(std::size_t n);
  /// A + A*
  BCMatrix self_adjoint(std::size_t n);

  ComplexVector complex_vector(Eigen::Index n);
  ComplexMatrix complex_matrix(Eigen::Index n);
  ComplexMatrix hermitian(Eigen::Index n);
  /// Q from a Householder QR of a complex Gaussian matrix.
  ComplexMatrix unitary(Eigen::Index n);
  /// Q diag(spectrum) Q^H with a random unitary Q.
  ComplexMatrix hermitian_with_spectrum(const std::vector<double>& spectrum);
  BCMatrix self_adjoint_with_spectra(const std::vector<double>& spectrum1,
                                     const std::vector<double>& spectrum2);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace bcx::cli
