#include "bcx/serialize.hpp"

#include <cmath>

#include "bcx/errors.hpp"

namespace bcx {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

double real_from_json(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a decimal number, got " + std::string(j.type_name()));
  const double x = j.get<double>();
  if (!std::isfinite(x)) fail(where, "number is not finite");
  return x;
}

const json& require_array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array, got " + std::string(j.type_name()));
  return j;
}

std::string at(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

std::vector<double> reals_from_json(const json& j, const std::string& where) {
  require_array(j, where);
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(real_from_json(j[i], at(where, i)));
  return out;
}

// −0.0 prints as "-0.0"; fold it into +0.0 so reports stay tidy.
double tidy(double x) { return x + 0.0; }

}  // namespace

json to_json(const Bicomplex& w) {
  return json::array({tidy(w.x0), tidy(w.x1), tidy(w.x2), tidy(w.x3)});
}
json to_json(const Hyperbolic& h) { return json::array({tidy(h.h1), tidy(h.h2)}); }
json to_json(const Complex& z) { return json::array({tidy(z.real()), tidy(z.imag())}); }

json to_json(const BCVector& x) {
  json out = json::array();
  for (const auto& w : x) out.push_back(to_json(w));
  return out;
}

json to_json(const BCMatrix& t) {
  json rows = json::array();
  for (std::size_t r = 0; r < t.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < t.size(); ++c) row.push_back(to_json(t(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(Complex(m(r, c))));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const AtomicMeasure& mu) { return {{"atoms", mu.atoms}, {"weights", mu.weights}}; }

json to_json(const AtomicMeasurePair& mu) {
  return {{"component1", to_json(mu.first)}, {"component2", to_json(mu.second)}};
}

json to_json(const BCFunctionSamples& f) {
  json values = json::array();
  for (const auto& w : f.values) values.push_back(to_json(w));
  return {{"a", f.a}, {"b", f.b}, {"n", f.size()}, {"values", std::move(values)}};
}

Bicomplex bicomplex_from_json(const json& j, const std::string& where) {
  require_array(j, where);
  if (j.size() != 4) {
    fail(where, "expected 4 components [x0, x1, x2, x3], got " + std::to_string(j.size()));
  }
  return {real_from_json(j[0], at(where, 0)), real_from_json(j[1], at(where, 1)),
          real_from_json(j[2], at(where, 2)), real_from_json(j[3], at(where, 3))};
}

Hyperbolic hyperbolic_from_json(const json& j, const std::string& where) {
  require_array(j, where);
  if (j.size() != 2) fail(where, "expected 2 components [h1, h2], got " + std::to_string(j.size()));
  return {real_from_json(j[0], at(where, 0)), real_from_json(j[1], at(where, 1))};
}

BCVector vector_from_json(const json& j, const std::string& where) {
  require_array(j, where);
  if (j.empty()) fail(where, "vector must have at least one entry");
  std::vector<Bicomplex> entries;
  entries.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) entries.push_back(bicomplex_from_json(j[i], at(where, i)));
  return BCVector(std::move(entries));
}

BCMatrix matrix_from_json(const json& j, std::size_t n, const std::string& where) {
  require_array(j, where);
  if (j.size() != n) {
    fail(where, "expected " + std::to_string(n) + " rows, got " + std::to_string(j.size()));
  }
  BCMatrix t(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string row_where = at(where, r);
    require_array(j[r], row_where);
    if (j[r].size() != n) {
      fail(row_where, "expected " + std::to_string(n) + " entries, got " + std::to_string(j[r].size()));
    }
    for (std::size_t c = 0; c < n; ++c) t(r, c) = bicomplex_from_json(j[r][c], at(row_where, c));
  }
  return t;
}

AtomicMeasure measure_from_json(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("atoms") || !j.contains("weights")) {
    fail(where, "expected an object with \"atoms\" and \"weights\"");
  }
  AtomicMeasure mu{reals_from_json(j["atoms"], where + ".atoms"),
                   reals_from_json(j["weights"], where + ".weights")};
  if (mu.atoms.size() != mu.weights.size()) fail(where, "atoms and weights differ in length");
  return mu;
}

BCFunctionSamples samples_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const char* key : {"a", "b", "n", "values"}) {
    if (!j.contains(key)) fail(where, std::string("missing \"") + key + "\"");
  }
  const double a = real_from_json(j["a"], where + ".a");
  const double b = real_from_json(j["b"], where + ".b");
  if (!j["n"].is_number_unsigned()) fail(where + ".n", "expected a non-negative integer");
  const auto n = j["n"].get<std::size_t>();
  const json& values = require_array(j["values"], where + ".values");
  if (values.size() != n) {
    fail(where + ".values", "expected " + std::to_string(n) + " samples, got " +
                                std::to_string(values.size()));
  }
  std::vector<Bicomplex> samples;
  samples.reserve(n);
  for (std::size_t q = 0; q < n; ++q) {
    samples.push_back(bicomplex_from_json(values[q], at(where + ".values", q)));
  }
  return BCFunctionSamples::from_values(a, b, std::move(samples));
}

}  // namespace bcx
