#include "clusterfunm/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cfunm {

std::size_t ClusterPartition::total_size() const {
  std::size_t n = 0;
  for (const auto& c : clusters) n += c.size();
  return n;
}

bool ClusterPartition::contiguous() const {
  for (const auto& c : clusters) {
    for (std::size_t k = 1; k < c.indices.size(); ++k)
      if (c.indices[k] != c.indices[k - 1] + 1) return false;
  }
  return true;
}

Complex cluster_center(std::span<const Complex> members) {
  if (members.empty()) throw std::invalid_argument("cluster_center: empty member list");
  Complex sum(0.0, 0.0);
  for (const auto& m : members) sum += m;
  return sum / static_cast<double>(members.size());
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }

  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

ClusterPartition split_clusters(std::span<const Complex> eigenvalues, double delta) {
  if (eigenvalues.empty()) throw std::invalid_argument("split_clusters: empty spectrum");
  if (!(delta > 0.0)) throw std::invalid_argument("split_clusters: delta must be positive");

  const std::size_t n = eigenvalues.size();
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(eigenvalues[i] - eigenvalues[j]) < delta) uf.unite(i, j);

  ClusterPartition partition;
  partition.delta = delta;
  std::vector<std::size_t> cluster_of_root(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = uf.find(i);
    if (cluster_of_root[root] == n) {
      cluster_of_root[root] = partition.clusters.size();
      partition.clusters.emplace_back();
    }
    partition.clusters[cluster_of_root[root]].indices.push_back(i);
  }
  for (auto& c : partition.clusters) {
    std::vector<Complex> members;
    members.reserve(c.size());
    for (std::size_t idx : c.indices) members.push_back(eigenvalues[idx]);
    c.center = cluster_center(members);
  }
  return partition;
}

Spectrum reorder_spectrum(std::span<const Complex> eigenvalues, const ClusterPartition& partition) {
  const std::size_t n = eigenvalues.size();
  if (partition.total_size() != n)
    throw std::invalid_argument("reorder_spectrum: partition does not cover the spectrum");
  std::vector<bool> seen(n, false);

  Spectrum out;
  out.values.reserve(n);
  out.permutation.reserve(n);
  for (const auto& c : partition.clusters) {
    for (std::size_t idx : c.indices) {
      if (idx >= n || seen[idx])
        throw std::invalid_argument("reorder_spectrum: partition indices invalid for this spectrum");
      seen[idx] = true;
      out.values.push_back(eigenvalues[idx]);
      out.permutation.push_back(idx);
    }
  }
  return out;
}

ClusterPartition contiguous_partition(const ClusterPartition& partition, int gamma) {
  if (gamma < -1) throw std::invalid_argument("degree slack gamma must be >= -1");
  ClusterPartition out;
  out.delta = partition.delta;
  out.clusters.reserve(partition.clusters.size());
  std::size_t offset = 0;
  for (const auto& c : partition.clusters) {
    Cluster r;
    r.indices.resize(c.size());
    std::iota(r.indices.begin(), r.indices.end(), offset);
    r.center = c.center;
    r.degree_slack = gamma;
    offset += c.size();
    out.clusters.push_back(std::move(r));
  }
  return out;
}

std::size_t cluster_of_position(const ClusterPartition& partition, std::size_t i) {
  for (std::size_t j = 0; j < partition.clusters.size(); ++j) {
    const auto& idx = partition.clusters[j].indices;
    if (!idx.empty() && idx.front() <= i && i <= idx.back()) return j;
  }
  return partition.clusters.size();
}

}  // namespace cfunm
