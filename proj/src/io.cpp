#include "clusterfunm/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace cfunm::io {

namespace {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

double finite_number(const json& j, const std::string& field) {
  if (!j.is_number()) throw std::invalid_argument(field + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw std::invalid_argument(field + ": value must be finite");
  return v;
}

}  // namespace

Complex complex_from_json(const json& j, const std::string& field) {
  if (j.is_number()) return Complex(finite_number(j, field), 0.0);
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument(field + ": expected [re, im] or a real number");
  return Complex(finite_number(j[0], field + "[0]"), finite_number(j[1], field + "[1]"));
}

json matrix_to_json(const ComplexMatrix& m) {
  json data = json::array();
  for (const Complex& z : m.data()) data.push_back(complex_to_json(z));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_object()) throw std::invalid_argument(field + ": expected an object");
  if (!j.contains("rows") || !j["rows"].is_number_unsigned())
    throw std::invalid_argument(field + ".rows: expected a non-negative integer");
  if (!j.contains("cols") || !j["cols"].is_number_unsigned())
    throw std::invalid_argument(field + ".cols: expected a non-negative integer");
  if (!j.contains("data") || !j["data"].is_array())
    throw std::invalid_argument(field + ".data: expected an array");

  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  const auto& data = j["data"];
  if (data.size() != rows * cols)
    throw std::invalid_argument(field + ".data: length must equal rows*cols");

  ComplexMatrix m(rows, cols);
  for (std::size_t k = 0; k < data.size(); ++k)
    m.data()[k] = complex_from_json(data[k], field + ".data[" + std::to_string(k) + "]");
  return m;
}

json vector_to_json(const ComplexVector& v) {
  json data = json::array();
  for (const Complex& z : v) data.push_back(complex_to_json(z));
  return json{{"len", v.size()}, {"data", std::move(data)}};
}

ComplexVector vector_from_json(const json& j, const std::string& field) {
  if (!j.is_object()) throw std::invalid_argument(field + ": expected an object");
  if (!j.contains("len") || !j["len"].is_number_unsigned())
    throw std::invalid_argument(field + ".len: expected a non-negative integer");
  if (!j.contains("data") || !j["data"].is_array())
    throw std::invalid_argument(field + ".data: expected an array");
  const auto& data = j["data"];
  if (data.size() != j["len"].get<std::size_t>())
    throw std::invalid_argument(field + ".data: length must equal len");

  ComplexVector v(data.size());
  for (std::size_t k = 0; k < data.size(); ++k)
    v[k] = complex_from_json(data[k], field + ".data[" + std::to_string(k) + "]");
  return v;
}

json spectrum_to_json(const std::vector<Complex>& spectrum) {
  json out = json::array();
  for (const Complex& z : spectrum) out.push_back(complex_to_json(z));
  return out;
}

std::vector<Complex> spectrum_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) throw std::invalid_argument(field + ": expected a list of [re, im] pairs");
  std::vector<Complex> out(j.size());
  for (std::size_t k = 0; k < j.size(); ++k)
    out[k] = complex_from_json(j[k], field + "[" + std::to_string(k) + "]");
  return out;
}

FactoredInput factored_from_json(const json& j) {
  if (!j.is_object() || !j.contains("T") || !j.contains("Lambda"))
    throw std::invalid_argument("factored: expected an object with fields T and Lambda");
  FactoredInput f{matrix_from_json(j["T"], "factored.T"),
                  matrix_from_json(j["Lambda"], "factored.Lambda")};
  if (!f.t.square() || !f.lambda.square() || f.t.rows() != f.lambda.rows())
    throw std::invalid_argument("factored: T and Lambda must be square and of equal order");
  return f;
}

ImpulseSystem system_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("system: expected an object");
  for (const char* key : {"A", "b", "d", "spectrum"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("system.") + key + ": missing");
  ImpulseSystem s;
  s.a = matrix_from_json(j["A"], "system.A");
  s.b = vector_from_json(j["b"], "system.b");
  s.d = vector_from_json(j["d"], "system.d");
  s.eigenvalues = spectrum_from_json(j["spectrum"], "system.spectrum");
  return s;
}

json response_to_json(const SymbolicResponse& response) {
  json terms = json::array();
  for (const auto& [basis, weight] : response.combination.terms()) {
    terms.push_back(json{{"cluster", basis.cluster},
                         {"power", basis.power},
                         {"center", complex_to_json(basis.center)},
                         {"weight", complex_to_json(weight)}});
  }
  return terms;
}

json file_to_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return json::parse(in);
}

void json_to_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

std::string stats_csv_header() { return "n,K,gamma,max_kappa,mean_kappa,max_relerr,mean_relerr,M"; }

std::string stats_csv_row(const StatsRow& row) {
  std::ostringstream os;
  os.precision(10);
  os << row.n << "," << row.max_cluster << "," << row.gamma << "," << row.max_kappa << ","
     << row.mean_kappa << "," << row.max_rel_error << "," << row.mean_rel_error << ","
     << row.exceed_count;
  return os.str();
}

}  // namespace cfunm::io
