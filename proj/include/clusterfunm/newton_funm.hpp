#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "clusterfunm/taylor_dd.hpp"

namespace cfunm {

/// Newton-form interpolating polynomial: coefficient j multiplies
/// (lambda - mu_0)...(lambda - mu_{j-1}). Points are in cluster-contiguous
/// order; coefficients are the first column of the divided-difference table.
template <ScalarRing S>
struct NewtonPolynomial {
  std::vector<Complex> points;
  std::vector<S> coefficients;

  std::size_t size() const { return points.size(); }
};

/// Pipeline knobs: delta separates clusters, gamma is the extra Taylor
/// degree of each local model.
struct FunmParams {
  double delta = 0.01;
  int gamma = 5;
};

/// The whole pipeline, generic over the coefficient ring: split the spectrum
/// into delta-chain clusters, reorder it cluster-contiguously, build each
/// cluster's principal triangle from the Taylor model supplied by
/// `provider(cluster_index, center, alpha)`, fill the remaining entries by
/// the direct recurrence, and keep the first column.
template <ScalarRing S, typename CoeffProvider>
  requires std::invocable<CoeffProvider&, std::size_t, Complex, int>
NewtonPolynomial<S> build_newton_generic(std::span<const Complex> eigenvalues,
                                         const FunmParams& params, CoeffProvider&& provider) {
  if (eigenvalues.empty()) throw std::invalid_argument("build_newton: empty spectrum");
  if (!(params.delta > 0.0)) throw std::invalid_argument("build_newton: delta must be positive");
  if (params.gamma < -1) throw std::invalid_argument("build_newton: gamma must be >= -1");

  const ClusterPartition partition = split_clusters(eigenvalues, params.delta);
  const Spectrum spectrum = reorder_spectrum(eigenvalues, partition);
  const ClusterPartition contiguous = contiguous_partition(partition, params.gamma);

  std::vector<PrincipalTriangle<S>> principal;
  principal.reserve(contiguous.clusters.size());
  for (std::size_t j = 0; j < contiguous.clusters.size(); ++j) {
    const Cluster& cluster = contiguous.clusters[j];
    const auto points = std::span<const Complex>(spectrum.values)
                            .subspan(cluster.indices.front(), cluster.size());
    const int degree = static_cast<int>(cluster.size()) + cluster.degree_slack;
    principal.push_back(principal_dd_generic<S>(
        points, cluster.center, degree,
        [&](int alpha) { return provider(j, cluster.center, alpha); }));
  }

  NewtonPolynomial<S> p;
  p.coefficients = dd_fill_nonprincipal<S>(spectrum, contiguous, principal);
  p.points = spectrum.values;
  return p;
}

NewtonPolynomial<Complex> build_newton(const AnalyticFunction& f,
                                       std::span<const Complex> eigenvalues,
                                       const FunmParams& params = {});

/// Nested evaluation in the Newton basis.
Complex eval_scalar(const NewtonPolynomial<Complex>& p, Complex lambda);

/// p(A) by the Newton-basis Horner chain:
///   P = c_{n-1} I;  P = P (A - mu_j I) + c_j I  for j = n-2..0.
ComplexMatrix eval_matrix(const NewtonPolynomial<Complex>& p, const ComplexMatrix& a);

/// Same chain applied to a single vector, so only matrix-vector products are
/// formed: v = c_{n-1} b;  v = (A - mu_j I) v + c_j b. Works over any
/// coefficient ring, which is what makes the symbolic impulse response a
/// one-liner on top of this.
template <ScalarRing S>
std::vector<S> eval_matrix_vector(const NewtonPolynomial<S>& p, const ComplexMatrix& a,
                                  const ComplexVector& b) {
  if (!a.square()) throw std::invalid_argument("eval_matrix_vector: matrix must be square");
  if (a.rows() != b.size()) throw std::invalid_argument("eval_matrix_vector: vector length mismatch");
  if (p.size() == 0) throw std::invalid_argument("eval_matrix_vector: empty polynomial");

  const std::size_t n = a.rows();
  std::vector<S> v(n);
  for (std::size_t r = 0; r < n; ++r) v[r] = p.coefficients.back() * b[r];
  for (std::size_t j = p.size() - 1; j-- > 0;) {
    const Complex mu = p.points[j];
    std::vector<S> next(n);
    for (std::size_t r = 0; r < n; ++r) {
      S acc = p.coefficients[j] * b[r];
      for (std::size_t c = 0; c < n; ++c) acc = acc + v[c] * a(r, c);
      next[r] = acc - v[r] * mu;
    }
    v = std::move(next);
  }
  return v;
}

/// f(A) given the spectrum of A (counted with multiplicity): builds the
/// approximate Newton interpolating polynomial and substitutes A.
ComplexMatrix funm(const ComplexMatrix& a, std::span<const Complex> eigenvalues,
                   const AnalyticFunction& f, const FunmParams& params = {});

}  // namespace cfunm
