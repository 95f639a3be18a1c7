#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "clusterfunm/divided_diff.hpp"

namespace cfunm {

/// A function known through its values and local Taylor coefficients: the
/// coefficient c_alpha of (lambda - center)^alpha in the expansion about
/// `center`. Implementations must keep taylor_coefficient(c, 0) == value(c).
class AnalyticFunction {
 public:
  virtual ~AnalyticFunction() = default;
  virtual Complex value(Complex lambda) const = 0;
  virtual Complex taylor_coefficient(Complex center, int alpha) const = 0;
};

/// f(lambda) = exp(rate * lambda). The rate is the parameter t of e^{lambda t};
/// the default is the plain exponential.
class ExpFunction final : public AnalyticFunction {
 public:
  ExpFunction() = default;
  explicit ExpFunction(double rate) : rate_(rate) {}

  Complex value(Complex lambda) const override;
  Complex taylor_coefficient(Complex center, int alpha) const override;
  double rate() const { return rate_; }

 private:
  double rate_ = 1.0;
};

/// Polynomial with given coefficients about the origin, ascending powers.
/// Taylor coefficients about another center come from repeated synthetic
/// division.
class PolynomialFunction final : public AnalyticFunction {
 public:
  explicit PolynomialFunction(std::vector<Complex> coefficients);

  Complex value(Complex lambda) const override;
  Complex taylor_coefficient(Complex center, int alpha) const override;

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  std::span<const Complex> coefficients() const { return coefficients_; }
  /// All coefficients of the expansion about `center`.
  std::vector<Complex> shifted_coefficients(Complex center) const;

 private:
  std::vector<Complex> coefficients_;
};

/// Cluster points expressed as offsets xi_i = mu_i - center from a shared
/// center.
struct ShiftedPoints {
  Complex center{0.0, 0.0};
  std::vector<Complex> offsets;
};

/// Offsets about the member mean.
ShiftedPoints shift_to_center(std::span<const Complex> points);

/// Complete homogeneous symmetric polynomial: the sum of every degree-alpha
/// monomial in the offsets. Computed by the one-variable-at-a-time
/// recurrence
///   h_a(x_1..x_p) = h_a(x_1..x_{p-1}) + x_p * h_{a-1}(x_1..x_p),
/// additions and multiplications only, so tiny offsets never cancel.
Complex complete_homogeneous(int alpha, std::span<const Complex> offsets);

/// All of sigma_0..sigma_max_alpha over the same offsets in one pass.
std::vector<Complex> complete_homogeneous_all(int max_alpha, std::span<const Complex> offsets);

/// (c_0..c_order) of f about `center`.
std::vector<Complex> taylor_coefficients(const AnalyticFunction& f, Complex center, int order);

/// Per-cluster triangle of principal divided differences; same layout as the
/// full table, legs of length k.
template <ScalarRing S>
using PrincipalTriangle = DividedDifferenceTable<S>;

/// Principal divided differences of the local Taylor model
///   h(lambda) = sum_{alpha=0}^{degree} c_alpha (lambda - center)^alpha
/// in closed form:
///   entry(m, i) = c_m + sum_{alpha=m+1}^{degree} c_alpha *
///                 sigma_{alpha-m}(xi_i..xi_{i+m}),
/// summed ascending from the exact c_m term. No subtraction of close points
/// occurs anywhere, which is the whole point: within-cluster gaps never form
/// denominators. `coeff(alpha)` supplies c_alpha in the target ring.
template <ScalarRing S, typename CoeffFn>
  requires std::invocable<CoeffFn&, int>
PrincipalTriangle<S> principal_dd_generic(std::span<const Complex> cluster_points, Complex center,
                                          int degree, CoeffFn&& coeff) {
  const std::size_t k = cluster_points.size();
  if (k == 0) throw std::invalid_argument("principal_dd: empty cluster");
  if (degree < static_cast<int>(k) - 1)
    throw std::invalid_argument("principal_dd: model degree below cluster size - 1 (gamma < -1)");

  std::vector<Complex> offsets(k);
  for (std::size_t i = 0; i < k; ++i) offsets[i] = cluster_points[i] - center;

  std::vector<S> c;
  c.reserve(static_cast<std::size_t>(degree) + 1);
  for (int alpha = 0; alpha <= degree; ++alpha) c.push_back(coeff(alpha));

  PrincipalTriangle<S> triangle(k);
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t i = 0; i + m < k; ++i) {
      const auto window = std::span<const Complex>(offsets).subspan(i, m + 1);
      const auto sigma = complete_homogeneous_all(degree - static_cast<int>(m), window);
      S e = c[m];
      for (int alpha = static_cast<int>(m) + 1; alpha <= degree; ++alpha)
        e = e + c[alpha] * sigma[static_cast<std::size_t>(alpha) - m];
      triangle.entry(m, i) = e;
    }
  }
  return triangle;
}

/// Numeric principal triangle for a cluster: Taylor model about the member
/// mean, degree k + gamma.
PrincipalTriangle<Complex> principal_dd(const AnalyticFunction& f,
                                        std::span<const Complex> cluster_points, int gamma);

enum class EntryKind { principal, non_principal, cross };

/// Classifies table entry (i, m), i.e. the difference over positions
/// i..i+m of a cluster-contiguous spectrum: principal when the span stays
/// inside the cluster containing i, non_principal when it starts there but
/// runs past the cluster's end, cross when position i is not covered by any
/// cluster (possible only for partial partitions).
EntryKind classify_entry(std::size_t i, std::size_t m, const ClusterPartition& partition);

}  // namespace cfunm
