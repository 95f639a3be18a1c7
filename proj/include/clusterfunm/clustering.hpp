#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "clusterfunm/complex_linalg.hpp"

namespace cfunm {

/// One cluster of near-coincident eigenvalues. `indices` are positions in
/// whatever spectrum ordering the partition refers to (input order right
/// after split_clusters, contiguous ranges after reordering).
struct Cluster {
  std::vector<std::size_t> indices;
  Complex center{0.0, 0.0};
  int degree_slack = 5;  // extra Taylor degree beyond size-1

  std::size_t size() const { return indices.size(); }
};

struct ClusterPartition {
  double delta = 0.0;
  std::vector<Cluster> clusters;

  std::size_t total_size() const;
  /// True when every cluster's indices form one ascending contiguous run.
  bool contiguous() const;
};

/// Spectrum in cluster-contiguous order plus the permutation that produced
/// it: values[k] == original[permutation[k]].
struct Spectrum {
  std::vector<Complex> values;
  std::vector<std::size_t> permutation;

  std::size_t size() const { return values.size(); }
};

/// Arithmetic mean of the members.
Complex cluster_center(std::span<const Complex> members);

/// Connected components of the graph with an edge wherever |mu_i - mu_j| <
/// delta. Components are maximal, so any two eigenvalues in different
/// clusters are at least delta apart, and chains of close eigenvalues end up
/// together even when their endpoints are farther than delta. Clusters are
/// ordered by first occurrence in the input; centers are member means.
ClusterPartition split_clusters(std::span<const Complex> eigenvalues, double delta);

/// Lists each cluster's members contiguously, clusters in partition order,
/// members in input order; records the permutation.
Spectrum reorder_spectrum(std::span<const Complex> eigenvalues, const ClusterPartition& partition);

/// The same partition expressed against the reordered spectrum: cluster j
/// becomes the contiguous range starting at sum of earlier sizes. Applies
/// `gamma` as every cluster's degree slack.
ClusterPartition contiguous_partition(const ClusterPartition& partition, int gamma);

/// Index of the cluster whose contiguous range contains position `i`, or
/// clusters.size() when none does.
std::size_t cluster_of_position(const ClusterPartition& partition, std::size_t i);

}  // namespace cfunm
