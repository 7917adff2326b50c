#pragma once

// JSON forms used by matrix files and reports.
//
//   Bicomplex        [x0, x1, x2, x3]
//   Hyperbolic       [h1, h2]
//   BCVector         [[x0, x1, x2, x3], ...]
//   BCMatrix         n × n nested array of 4-tuples (row-major)
//   AtomicMeasure    {"atoms": [...], "weights": [...]}
//   function samples {"a": a, "b": b, "n": N, "values": [[x0, x1, x2, x3], ...]}
//
// Readers throw Error{ParseError} with a JSON-path-like location.

#include <nlohmann/json.hpp>

#include <string>

#include "bcx/function_space.hpp"
#include "bcx/operator.hpp"
#include "bcx/spectral_measure.hpp"

namespace bcx {

using json = nlohmann::json;

json to_json(const Bicomplex& w);
json to_json(const Hyperbolic& h);
json to_json(const Complex& z);  ///< [re, im]
json to_json(const BCVector& x);
json to_json(const BCMatrix& t);
json to_json(const ComplexMatrix& m);  ///< rows of [re, im] pairs
json to_json(const AtomicMeasure& mu);
json to_json(const AtomicMeasurePair& mu);
json to_json(const BCFunctionSamples& f);

Bicomplex bicomplex_from_json(const json& j, const std::string& where = "value");
Hyperbolic hyperbolic_from_json(const json& j, const std::string& where = "value");
BCVector vector_from_json(const json& j, const std::string& where = "vector");
/// Rows must number `n` and each have n entries.
BCMatrix matrix_from_json(const json& j, std::size_t n, const std::string& where = "entries");
AtomicMeasure measure_from_json(const json& j, const std::string& where = "measure");
BCFunctionSamples samples_from_json(const json& j, const std::string& where = "samples");

}  // namespace bcx
