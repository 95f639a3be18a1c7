#pragma once

#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "clusterfunm/clustering.hpp"
#include "clusterfunm/complex_linalg.hpp"

namespace cfunm {

/// Thrown when the direct recurrence would divide by mu[i+m] - mu[i] == 0.
/// Coincident interpolation points must be clustered and routed through the
/// Taylor form instead; the recurrence here never differentiates.
struct ZeroDenominatorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Scalar ring the interpolation machinery is generic over: addition,
/// subtraction, and scaling/division by a Complex. Complex itself satisfies
/// it, and so does the symbolic coefficient type used for parametric
/// functions of a matrix.
template <typename S>
concept ScalarRing =
    std::default_initializable<S> && std::copyable<S> &&
    requires(const S& a, const S& b, const Complex& z) {
      { a + b } -> std::convertible_to<S>;
      { a - b } -> std::convertible_to<S>;
      { a* z } -> std::convertible_to<S>;
      { a / z } -> std::convertible_to<S>;
    };

/// Triangular table of divided differences over n points. Row m holds the
/// order-m differences: entry(m, i) is the difference over points
/// mu_i..mu_{i+m} (0-based i, so row m has n-m entries). Row 0 is the
/// plain function values.
template <ScalarRing S>
class DividedDifferenceTable {
 public:
  explicit DividedDifferenceTable(std::size_t n) : n_(n), rows_(n) {
    if (n == 0) throw std::invalid_argument("divided-difference table needs at least one point");
    for (std::size_t m = 0; m < n; ++m) rows_[m].resize(n - m);
  }

  std::size_t size() const { return n_; }

  S& entry(std::size_t m, std::size_t i) { return rows_.at(m).at(i); }
  const S& entry(std::size_t m, std::size_t i) const { return rows_.at(m).at(i); }

  std::span<const S> row(std::size_t m) const { return rows_.at(m); }

  /// The coefficients of the Newton form: orders 0..n-1 at the left edge.
  std::vector<S> first_column() const {
    std::vector<S> col;
    col.reserve(n_);
    for (std::size_t m = 0; m < n_; ++m) col.push_back(rows_[m][0]);
    return col;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<S>> rows_;
};

/// Builds the full table by the plain recurrence, row by row, left to right:
///   entry(m, i) = (entry(m-1, i+1) - entry(m-1, i)) / (mu[i+m] - mu[i]).
/// Exactly equal points make a denominator vanish and raise
/// ZeroDenominatorError.
template <ScalarRing S>
DividedDifferenceTable<S> dd_table_direct(std::span<const Complex> points,
                                          std::span<const S> values) {
  if (points.empty()) throw std::invalid_argument("dd_table_direct: no interpolation points");
  if (points.size() != values.size())
    throw std::invalid_argument("dd_table_direct: points/values length mismatch");

  const std::size_t n = points.size();
  DividedDifferenceTable<S> table(n);
  for (std::size_t i = 0; i < n; ++i) table.entry(0, i) = values[i];
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      const Complex den = points[i + m] - points[i];
      if (den == Complex(0.0, 0.0))
        throw ZeroDenominatorError(
            "dd_table_direct: coincident interpolation points; cluster them and use the Taylor "
            "path");
      table.entry(m, i) = (table.entry(m - 1, i + 1) - table.entry(m - 1, i)) / den;
    }
  }
  return table;
}

/// Merges per-cluster principal triangles into the full table over the
/// cluster-contiguous spectrum. Entries whose index span stays inside one
/// cluster are copied from that cluster's triangle; every other entry is
/// filled by the recurrence, whose new denominators span two clusters and so
/// are at least delta in modulus.
template <ScalarRing S>
DividedDifferenceTable<S> dd_merge_table(const Spectrum& spectrum,
                                         const ClusterPartition& partition,
                                         std::span<const DividedDifferenceTable<S>> principal) {
  const std::size_t n = spectrum.size();
  if (n == 0) throw std::invalid_argument("dd_merge_table: empty spectrum");
  if (!partition.contiguous() || partition.total_size() != n)
    throw std::invalid_argument("dd_merge_table: partition is not cluster-contiguous over the spectrum");
  if (principal.size() != partition.clusters.size())
    throw std::invalid_argument("dd_merge_table: one principal triangle per cluster required");

  std::vector<std::size_t> cluster_of(n, partition.clusters.size());
  std::vector<std::size_t> begin_of(partition.clusters.size(), 0);
  std::vector<std::size_t> end_of(partition.clusters.size(), 0);
  for (std::size_t j = 0; j < partition.clusters.size(); ++j) {
    const auto& idx = partition.clusters[j].indices;
    if (principal[j].size() != idx.size())
      throw std::invalid_argument("dd_merge_table: principal triangle size differs from cluster size");
    begin_of[j] = idx.front();
    end_of[j] = idx.back() + 1;
    for (std::size_t i : idx) cluster_of.at(i) = j;
  }

  const auto& pts = spectrum.values;
  DividedDifferenceTable<S> table(n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      const std::size_t j = cluster_of[i];
      if (i + m < end_of[j]) {
        table.entry(m, i) = principal[j].entry(m, i - begin_of[j]);
        continue;
      }
      const Complex den = pts[i + m] - pts[i];
      if (den == Complex(0.0, 0.0))
        throw ZeroDenominatorError("dd_merge_table: equal points across clusters violate the partition");
      table.entry(m, i) = (table.entry(m - 1, i + 1) - table.entry(m - 1, i)) / den;
    }
  }
  return table;
}

/// First column of the merged table; these are the only entries the Newton
/// form consumes.
template <ScalarRing S>
std::vector<S> dd_fill_nonprincipal(const Spectrum& spectrum, const ClusterPartition& partition,
                                    std::span<const DividedDifferenceTable<S>> principal) {
  return dd_merge_table<S>(spectrum, partition, principal).first_column();
}

}  // namespace cfunm
