#include "matrix_file.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bcx/errors.hpp"
#include "bcx/serialize.hpp"

namespace bcx::cli {

std::string fnv1a64_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

json parse_json(std::string_view text, const std::string& what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, what + ": malformed JSON: " + e.what());
  }
}

}  // namespace

MatrixFile parse_matrix_file(std::string_view text) {
  const json doc = parse_json(text, "matrix file");
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "matrix file: expected a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() == 0) {
    throw Error(ErrorKind::ParseError, "n: expected a positive integer dimension");
  }
  if (!doc.contains("entries")) throw Error(ErrorKind::ParseError, "entries: missing");

  MatrixFile file;
  file.n = doc["n"].get<std::size_t>();
  file.matrix = matrix_from_json(doc["entries"], file.n, "entries");
  if (doc.contains("vector")) {
    BCVector v = vector_from_json(doc["vector"], "vector");
    if (v.size() != file.n) {
      throw Error(ErrorKind::DimensionMismatch, "vector: length " + std::to_string(v.size()) +
                                                    " does not match n = " + std::to_string(file.n));
    }
    file.vector = std::move(v);
  }
  file.digest = fnv1a64_digest(text);
  return file;
}

MatrixFile load_matrix_file(const std::string& path) { return parse_matrix_file(read_file(path)); }

BCVector parse_vector_argument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  const bool inline_json = first != std::string::npos && (arg[first] == '[' || arg[first] == '{');
  const std::string text = inline_json ? arg : read_file(arg);
  const json doc = parse_json(text, "--vector");
  if (doc.is_object()) {
    if (!doc.contains("vector")) throw Error(ErrorKind::ParseError, "--vector: object has no \"vector\"");
    return vector_from_json(doc["vector"], "vector");
  }
  return vector_from_json(doc, "vector");
}

}  // namespace bcx::cli
