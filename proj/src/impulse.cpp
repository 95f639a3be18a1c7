#include "clusterfunm/impulse.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace cfunm {

namespace {

constexpr double kWeightDropRatio = 1e-14;

}  // namespace

Complex BasisFunction::eval(double t) const {
  // t^power / power! as a running product keeps mid-sized powers in range.
  double monomial = 1.0;
  for (int q = 1; q <= power; ++q) monomial *= t / static_cast<double>(q);
  return monomial * std::exp(center * t);
}

SymbolicCoefficient SymbolicCoefficient::unit(std::size_t cluster, int power, Complex center) {
  SymbolicCoefficient s;
  s.terms_[{cluster, power}] = Value{center, Complex(1.0, 0.0)};
  return s;
}

// Ring operations stay lossless: only exact zeros leave the map. The
// relative 1e-14 cleanup is applied once to a finished response, where it
// only trims formula noise.
void SymbolicCoefficient::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.weight == Complex(0.0, 0.0))
      it = terms_.erase(it);
    else
      ++it;
  }
}

SymbolicCoefficient SymbolicCoefficient::canonicalized() const {
  double max_weight = 0.0;
  for (const auto& [key, value] : terms_) max_weight = std::max(max_weight, std::abs(value.weight));
  SymbolicCoefficient out = *this;
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    if (std::abs(it->second.weight) <= kWeightDropRatio * max_weight)
      it = out.terms_.erase(it);
    else
      ++it;
  }
  return out;
}

SymbolicCoefficient SymbolicCoefficient::operator+(const SymbolicCoefficient& other) const {
  SymbolicCoefficient out = *this;
  for (const auto& [key, value] : other.terms_) {
    auto [it, inserted] = out.terms_.emplace(key, value);
    if (!inserted) it->second.weight += value.weight;
  }
  out.prune();
  return out;
}

SymbolicCoefficient SymbolicCoefficient::operator-(const SymbolicCoefficient& other) const {
  SymbolicCoefficient out = *this;
  for (const auto& [key, value] : other.terms_) {
    auto [it, inserted] = out.terms_.emplace(key, Value{value.center, -value.weight});
    if (!inserted) it->second.weight -= value.weight;
  }
  out.prune();
  return out;
}

SymbolicCoefficient SymbolicCoefficient::operator*(Complex scale) const {
  SymbolicCoefficient out = *this;
  for (auto& [key, value] : out.terms_) value.weight *= scale;
  out.prune();
  return out;
}

SymbolicCoefficient SymbolicCoefficient::operator/(Complex divisor) const {
  SymbolicCoefficient out = *this;
  for (auto& [key, value] : out.terms_) value.weight /= divisor;
  out.prune();
  return out;
}

Complex SymbolicCoefficient::eval(double t) const {
  Complex acc(0.0, 0.0);
  for (const auto& [key, value] : terms_) {
    const BasisFunction basis{key.cluster, key.power, value.center};
    acc += value.weight * basis.eval(t);
  }
  return acc;
}

std::vector<std::pair<BasisFunction, Complex>> SymbolicCoefficient::terms() const {
  std::vector<std::pair<BasisFunction, Complex>> out;
  out.reserve(terms_.size());
  for (const auto& [key, value] : terms_)
    out.emplace_back(BasisFunction{key.cluster, key.power, value.center}, value.weight);
  return out;
}

std::vector<SymbolicCoefficient> symbolic_taylor_coefficients(std::size_t cluster_index,
                                                              Complex center, int order) {
  if (order < 0) throw std::invalid_argument("symbolic_taylor_coefficients: negative order");
  std::vector<SymbolicCoefficient> coeffs;
  coeffs.reserve(static_cast<std::size_t>(order) + 1);
  for (int alpha = 0; alpha <= order; ++alpha)
    coeffs.push_back(SymbolicCoefficient::unit(cluster_index, alpha, center));
  return coeffs;
}

SymbolicResponse impulse_response(const ImpulseSystem& system, const FunmParams& params) {
  if (!system.a.square()) throw std::invalid_argument("impulse_response: A must be square");
  if (system.b.size() != system.a.rows() || system.d.size() != system.a.rows())
    throw std::invalid_argument("impulse_response: b and d must match the order of A");
  if (system.eigenvalues.size() != system.a.rows())
    throw std::invalid_argument("impulse_response: eigenvalue count must equal the order of A");

  const auto poly = build_newton_generic<SymbolicCoefficient>(
      system.eigenvalues, params, [](std::size_t j, Complex center, int alpha) {
        return SymbolicCoefficient::unit(j, alpha, center);
      });
  const auto state = eval_matrix_vector(poly, system.a, system.b);

  SymbolicResponse response;
  for (std::size_t i = 0; i < state.size(); ++i)
    response.combination = response.combination + state[i] * std::conj(system.d[i]);
  response.combination = response.combination.canonicalized();
  response.clusters =
      contiguous_partition(split_clusters(system.eigenvalues, params.delta), params.gamma);
  return response;
}

Complex eval_symbolic(const SymbolicResponse& response, double t) {
  return response.combination.eval(t);
}

namespace {

std::string format_real(double v, int precision) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

std::string format_complex(Complex z, int precision) {
  if (z.imag() == 0.0) return format_real(z.real(), precision);
  if (z.real() == 0.0) return format_real(z.imag(), precision) + "i";
  std::ostringstream os;
  os << "(" << format_real(z.real(), precision) << (z.imag() < 0.0 ? "-" : "+")
     << format_real(std::abs(z.imag()), precision) << "i)";
  return os.str();
}

}  // namespace

std::string format_response(const SymbolicResponse& response, int precision) {
  const auto terms = response.combination.terms();
  if (terms.empty()) return "0";

  std::ostringstream os;
  bool first = true;
  for (const auto& [basis, weight] : terms) {
    if (!first) os << " + ";
    first = false;
    os << format_complex(weight, precision);
    if (basis.power == 1)
      os << "·t";
    else if (basis.power > 1)
      os << "·t^" << basis.power << "/" << basis.power << "!";
    if (basis.center != Complex(0.0, 0.0)) {
      std::string c = format_complex(basis.center, precision);
      if (basis.center.imag() != 0.0 && basis.center.real() != 0.0)
        os << "·e^{" << c << "t}";  // already parenthesised
      else if (basis.center.imag() != 0.0)
        os << "·e^{(" << c << ")t}";
      else
        os << "·e^{" << c << "t}";
    }
  }
  return os.str();
}

}  // namespace cfunm
