#pragma once

// Matrix files:
//   {"n": 2,
//    "entries": [[[x0,x1,x2,x3], [x0,x1,x2,x3]],
//                [[x0,x1,x2,x3], [x0,x1,x2,x3]]],
//    "vector": [[x0,x1,x2,x3], [x0,x1,x2,x3]]}      // optional

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bcx/operator.hpp"

namespace bcx::cli {

struct MatrixFile {
  std::size_t n = 0;
  BCMatrix matrix;
  std::optional<BCVector> vector;
  /// "fnv1a64:<16 hex digits>" over the raw file bytes.
  std::string digest;
};

std::string fnv1a64_digest(std::string_view bytes);

/// Throws Error{ParseError} / Error{DimensionMismatch}.
MatrixFile parse_matrix_file(std::string_view text);
MatrixFile load_matrix_file(const std::string& path);

/// Inline JSON when the argument starts with '[' or '{', otherwise a path
/// to a file holding either a bare vector array or an object with
/// "vector".
BCVector parse_vector_argument(const std::string& arg);

std::string read_file(const std::string& path);

}  // namespace bcx::cli
