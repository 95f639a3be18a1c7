#pragma once

#include <string>

#include <json.hpp>

#include "clusterfunm/experiments.hpp"
#include "clusterfunm/impulse.hpp"

namespace cfunm::io {

using nlohmann::json;

/// {"rows": n, "cols": m, "data": [[re, im], ...]} row-major.
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j, const std::string& field = "matrix");

/// {"len": n, "data": [[re, im], ...]}.
json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const json& j, const std::string& field = "vector");

/// Plain list of [re, im] pairs.
json spectrum_to_json(const std::vector<Complex>& spectrum);
std::vector<Complex> spectrum_from_json(const json& j, const std::string& field = "spectrum");

/// A single entry: [re, im] pair or a bare real number.
Complex complex_from_json(const json& j, const std::string& field);

/// {"T": <matrix>, "Lambda": <matrix>} with Lambda diagonal.
struct FactoredInput {
  ComplexMatrix t;
  ComplexMatrix lambda;
};
FactoredInput factored_from_json(const json& j);

/// {"A": <matrix>, "b": <vector>, "d": <vector>, "spectrum": [[re,im],...]}.
ImpulseSystem system_from_json(const json& j);

json response_to_json(const SymbolicResponse& response);

json file_to_json(const std::string& path);
void json_to_file(const std::string& path, const json& j);

std::string stats_csv_header();
std::string stats_csv_row(const StatsRow& row);

}  // namespace cfunm::io
