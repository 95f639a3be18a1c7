#include "clusterfunm/taylor_dd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cfunm {

Complex ExpFunction::value(Complex lambda) const { return std::exp(rate_ * lambda); }

Complex ExpFunction::taylor_coefficient(Complex center, int alpha) const {
  if (alpha < 0) throw std::invalid_argument("taylor_coefficient: negative order");
  // e^{rate*center} * rate^alpha / alpha!, built up factor by factor.
  Complex c = std::exp(rate_ * center);
  for (int q = 1; q <= alpha; ++q) c *= rate_ / static_cast<double>(q);
  return c;
}

PolynomialFunction::PolynomialFunction(std::vector<Complex> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty())
    throw std::invalid_argument("PolynomialFunction: at least one coefficient required");
}

Complex PolynomialFunction::value(Complex lambda) const {
  Complex acc = coefficients_.back();
  for (std::size_t i = coefficients_.size() - 1; i-- > 0;) acc = acc * lambda + coefficients_[i];
  return acc;
}

std::vector<Complex> PolynomialFunction::shifted_coefficients(Complex center) const {
  // Taylor shift by repeated synthetic division: after pass j, coef[j] is
  // the coefficient of (lambda - center)^j.
  std::vector<Complex> coef = coefficients_;
  const std::size_t d = coef.size() - 1;
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = d; i-- > j;) coef[i] += center * coef[i + 1];
  return coef;
}

Complex PolynomialFunction::taylor_coefficient(Complex center, int alpha) const {
  if (alpha < 0) throw std::invalid_argument("taylor_coefficient: negative order");
  if (alpha > degree()) return Complex(0.0, 0.0);
  return shifted_coefficients(center)[static_cast<std::size_t>(alpha)];
}

ShiftedPoints shift_to_center(std::span<const Complex> points) {
  ShiftedPoints s;
  s.center = cluster_center(points);
  s.offsets.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) s.offsets[i] = points[i] - s.center;
  return s;
}

std::vector<Complex> complete_homogeneous_all(int max_alpha, std::span<const Complex> offsets) {
  if (max_alpha < 0) throw std::invalid_argument("complete_homogeneous: negative degree");
  if (offsets.empty()) throw std::invalid_argument("complete_homogeneous: no offsets");
  std::vector<Complex> sigma(static_cast<std::size_t>(max_alpha) + 1, Complex(0.0, 0.0));
  sigma[0] = Complex(1.0, 0.0);
  for (const Complex& xi : offsets)
    for (int a = 1; a <= max_alpha; ++a)
      sigma[static_cast<std::size_t>(a)] += xi * sigma[static_cast<std::size_t>(a) - 1];
  return sigma;
}

Complex complete_homogeneous(int alpha, std::span<const Complex> offsets) {
  return complete_homogeneous_all(alpha, offsets).back();
}

std::vector<Complex> taylor_coefficients(const AnalyticFunction& f, Complex center, int order) {
  if (order < 0) throw std::invalid_argument("taylor_coefficients: negative order");
  std::vector<Complex> c;
  c.reserve(static_cast<std::size_t>(order) + 1);
  for (int alpha = 0; alpha <= order; ++alpha) c.push_back(f.taylor_coefficient(center, alpha));
  return c;
}

PrincipalTriangle<Complex> principal_dd(const AnalyticFunction& f,
                                        std::span<const Complex> cluster_points, int gamma) {
  if (gamma < -1) throw std::invalid_argument("principal_dd: gamma must be >= -1");
  const ShiftedPoints shifted = shift_to_center(cluster_points);
  const int degree = static_cast<int>(cluster_points.size()) + gamma;
  return principal_dd_generic<Complex>(cluster_points, shifted.center, degree,
                                       [&](int alpha) { return f.taylor_coefficient(shifted.center, alpha); });
}

EntryKind classify_entry(std::size_t i, std::size_t m, const ClusterPartition& partition) {
  std::size_t n = 0;
  for (const auto& c : partition.clusters)
    if (!c.indices.empty()) n = std::max(n, c.indices.back() + 1);
  if (i >= n || i + m >= n) throw std::out_of_range("classify_entry: index outside the table");
  const std::size_t j = cluster_of_position(partition, i);
  if (j == partition.clusters.size()) return EntryKind::cross;
  const std::size_t end = partition.clusters[j].indices.back() + 1;
  return (i + m < end) ? EntryKind::principal : EntryKind::non_principal;
}

}  // namespace cfunm
