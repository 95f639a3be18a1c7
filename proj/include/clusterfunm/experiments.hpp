#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "clusterfunm/newton_funm.hpp"

namespace cfunm {

/// Raised when the center sampler cannot place cluster centers at pairwise
/// distance >= delta within the resample cap.
struct GenerationExhaustedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Rng = std::mt19937_64;

/// Deterministic per-trial stream split from the master seed. Serial and
/// parallel runs draw identical instances.
Rng make_trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Uniform on [lo, hi): top 53 bits of the generator output scaled.
/// Deliberately not std::uniform_real_distribution, whose output is not
/// pinned by the standard; fixed seeds must reproduce bit-identical
/// instances everywhere.
double uniform_real(Rng& rng, double lo, double hi);

Complex uniform_complex(Rng& rng, double re_lo, double re_hi, double im_lo, double im_hi);

/// Uniform integer in [0, count) by scaling.
std::size_t uniform_index(Rng& rng, std::size_t count);

struct ExperimentConfig {
  std::size_t n = 20;
  std::size_t max_cluster = 4;  // K: largest admissible cluster size
  int gamma = 5;
  double delta = 0.01;
  double eta = 0.001;  // half-width of the within-cluster perturbation box
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
};

/// One random test matrix in factored form: A = T^-1 Lambda T with the
/// cluster structure the generator chose. Eigenvalues are known exactly by
/// construction, which is what makes the oracle exponential available.
struct ExperimentInstance {
  ComplexMatrix lambda;  // diagonal
  ComplexMatrix t;
  ComplexMatrix a;
  ClusterPartition true_clusters;

  std::vector<Complex> eigenvalues() const { return lambda.diagonal_entries(); }
};

struct TrialResult {
  double kappa = 0.0;      // condition number of T
  double rel_error = 0.0;  // ||p(A) - e^A|| / ||e^A||
  bool exceeded = false;   // rel_error > 0.001
};

/// One Table-1-shaped row of aggregate statistics. Values below 1e-10 are
/// reported as zero. The medians are an extension beyond the table's
/// max/mean columns (heavy-tailed kappa makes means noisy run to run) and
/// stay out of the CSV schema.
struct StatsRow {
  std::size_t n = 0;
  std::size_t max_cluster = 0;
  int gamma = 0;
  double max_kappa = 0.0;
  double mean_kappa = 0.0;
  double max_rel_error = 0.0;
  double mean_rel_error = 0.0;
  std::size_t exceed_count = 0;  // M
  double median_kappa = 0.0;
  double median_rel_error = 0.0;

  friend bool operator==(const StatsRow&, const StatsRow&) = default;
};

/// Draws one instance:
///   - cluster sizes uniform in [1, K], the last truncated so they sum to n;
///   - centers uniform on [-2,0] x [-pi,pi]i, the whole sequence resampled
///     while any pair is closer than delta (capped, then
///     GenerationExhaustedError);
///   - each eigenvalue = its center + uniform draw from the eta-box;
///   - T entrywise uniform on [-1,1] x [-1,1]i; A = T^-1 Lambda T.
ExperimentInstance generate_instance(const ExperimentConfig& config, Rng& rng);

/// T^-1 diag(e^mu_i) T, the exact exponential of the factored instance.
ComplexMatrix exact_exponential(const ExperimentInstance& instance);

/// Operator-norm relative error ||approx - exact|| / ||exact||.
double relative_error(const ComplexMatrix& approx, const ComplexMatrix& exact);

/// One trial: generate, run the Newton pipeline on exp with the generator's
/// true eigenvalues, compare against the oracle exponential.
TrialResult run_trial(const ExperimentConfig& config, std::size_t trial);

/// All trials, OpenMP-parallel across trials. Aggregation runs in trial
/// order so the result is bit-identical to run_trials_serial.
StatsRow run_trials(const ExperimentConfig& config);

/// Serial reference implementation, kept for testing and benchmarking.
StatsRow run_trials_serial(const ExperimentConfig& config);

}  // namespace cfunm
