#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bcx {

enum class ErrorKind {
  NotInvertible,
  DimensionMismatch,
  NotHermitian,
  NoConvergence,
  NotSelfAdjoint,
  NotCyclic,
  ZeroComponent,
  GridMismatch,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class NoConvergenceError : public Error {
 public:
  NoConvergenceError(int sweeps, double off_diagonal)
      : Error(ErrorKind::NoConvergence,
              "Jacobi iteration did not converge after " + std::to_string(sweeps) +
                  " sweeps (off-diagonal mass " + std::to_string(off_diagonal) + ")"),
        sweeps_(sweeps),
        off_diagonal_(off_diagonal) {}

  int sweeps() const noexcept { return sweeps_; }
  double off_diagonal() const noexcept { return off_diagonal_; }

 private:
  int sweeps_;
  double off_diagonal_;
};

class NotSelfAdjointError : public Error {
 public:
  explicit NotSelfAdjointError(double defect)
      : Error(ErrorKind::NotSelfAdjoint,
              "operator is not self-adjoint (defect " + std::to_string(defect) + ")"),
        defect_(defect) {}

  /// ‖T − T*‖_X of the rejected operator.
  double defect() const noexcept { return defect_; }

 private:
  double defect_;
};

class NotCyclicError : public Error {
 public:
  NotCyclicError(int rank1, int rank2, int n, const std::string& detail = {})
      : Error(ErrorKind::NotCyclic,
              "vector is not cyclic (Krylov ranks " + std::to_string(rank1) + ", " +
                  std::to_string(rank2) + " of " + std::to_string(n) + ")" +
                  (detail.empty() ? "" : ": " + detail)),
        rank1_(rank1),
        rank2_(rank2) {}

  int rank1() const noexcept { return rank1_; }
  int rank2() const noexcept { return rank2_; }

 private:
  int rank1_;
  int rank2_;
};

}  // namespace bcx
