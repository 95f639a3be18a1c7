#include "clusterfunm/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <numeric>

namespace cfunm {

namespace {

constexpr std::size_t kCenterResampleCap = 1'000'000;
constexpr double kReportZeroThreshold = 1e-10;

void validate(const ExperimentConfig& config) {
  if (config.n == 0) throw std::invalid_argument("experiment: n must be positive");
  if (config.max_cluster < 1 || config.max_cluster > config.n)
    throw std::invalid_argument("experiment: K must satisfy 1 <= K <= n");
  if (!(config.delta > 0.0)) throw std::invalid_argument("experiment: delta must be positive");
  if (!(config.eta > 0.0) || config.eta >= config.delta)
    throw std::invalid_argument("experiment: eta must satisfy 0 < eta < delta");
  if (config.gamma < -1) throw std::invalid_argument("experiment: gamma must be >= -1");
}

double report_value(double v) { return v < kReportZeroThreshold ? 0.0 : v; }

double median(std::vector<double> values) {
  const std::size_t n = values.size();
  std::sort(values.begin(), values.end());
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

Rng make_trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

double uniform_real(Rng& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Complex uniform_complex(Rng& rng, double re_lo, double re_hi, double im_lo, double im_hi) {
  const double re = uniform_real(rng, re_lo, re_hi);
  const double im = uniform_real(rng, im_lo, im_hi);
  return Complex(re, im);
}

std::size_t uniform_index(Rng& rng, std::size_t count) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  const auto idx = static_cast<std::size_t>(u * static_cast<double>(count));
  return std::min(idx, count - 1);
}

ExperimentInstance generate_instance(const ExperimentConfig& config, Rng& rng) {
  validate(config);
  const double pi = std::numbers::pi;

  // Cluster sizes: uniform in [1, K] until the running sum reaches n, the
  // last one truncated to land exactly on n.
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  while (total < config.n) {
    std::size_t k = uniform_index(rng, config.max_cluster) + 1;
    if (total + k > config.n) k = config.n - total;
    sizes.push_back(k);
    total += k;
  }
  const std::size_t beta = sizes.size();

  // Centers on the rectangle, whole sequence rejected while any two are
  // closer than delta.
  std::vector<Complex> centers(beta);
  for (std::size_t attempt = 0;; ++attempt) {
    if (attempt >= kCenterResampleCap)
      throw GenerationExhaustedError("generate_instance: center rejection cap reached");
    for (auto& c : centers) c = uniform_complex(rng, -2.0, 0.0, -pi, pi);
    bool ok = true;
    for (std::size_t i = 0; i < beta && ok; ++i)
      for (std::size_t j = i + 1; j < beta; ++j)
        if (std::abs(centers[i] - centers[j]) < config.delta) {
          ok = false;
          break;
        }
    if (ok) break;
  }

  std::vector<Complex> eigenvalues;
  eigenvalues.reserve(config.n);
  ClusterPartition true_clusters;
  true_clusters.delta = config.delta;
  for (std::size_t j = 0; j < beta; ++j) {
    Cluster cluster;
    cluster.degree_slack = config.gamma;
    for (std::size_t q = 0; q < sizes[j]; ++q) {
      cluster.indices.push_back(eigenvalues.size());
      eigenvalues.push_back(centers[j] +
                            uniform_complex(rng, -config.eta, config.eta, -config.eta, config.eta));
    }
    std::vector<Complex> members(eigenvalues.end() - static_cast<std::ptrdiff_t>(sizes[j]),
                                 eigenvalues.end());
    cluster.center = cluster_center(members);
    true_clusters.clusters.push_back(std::move(cluster));
  }

  ExperimentInstance instance;
  instance.lambda = ComplexMatrix::diagonal(eigenvalues);
  instance.t = ComplexMatrix(config.n, config.n);
  for (std::size_t i = 0; i < config.n; ++i)
    for (std::size_t j = 0; j < config.n; ++j)
      instance.t(i, j) = uniform_complex(rng, -1.0, 1.0, -1.0, 1.0);
  instance.a = mat_mul(mat_mul(mat_inverse(instance.t), instance.lambda), instance.t);
  instance.true_clusters = std::move(true_clusters);
  return instance;
}

ComplexMatrix exact_exponential(const ExperimentInstance& instance) {
  std::vector<Complex> exp_diag = instance.lambda.diagonal_entries();
  for (auto& v : exp_diag) v = std::exp(v);
  return mat_mul(mat_mul(mat_inverse(instance.t), ComplexMatrix::diagonal(exp_diag)), instance.t);
}

double relative_error(const ComplexMatrix& approx, const ComplexMatrix& exact) {
  if (approx.rows() != exact.rows() || approx.cols() != exact.cols())
    throw std::invalid_argument("relative_error: shape mismatch");
  const double denom = operator_norm(exact);
  if (denom == 0.0) throw std::invalid_argument("relative_error: exact matrix has zero norm");
  return operator_norm(approx - exact) / denom;
}

TrialResult run_trial(const ExperimentConfig& config, std::size_t trial) {
  Rng rng = make_trial_rng(config.seed, trial);
  ExperimentInstance instance;
  try {
    instance = generate_instance(config, rng);
  } catch (const GenerationExhaustedError& e) {
    throw GenerationExhaustedError(std::string(e.what()) + " (trial " + std::to_string(trial) + ")");
  }

  const FunmParams params{config.delta, config.gamma};
  const ComplexMatrix approx = funm(instance.a, instance.eigenvalues(), ExpFunction{}, params);
  const ComplexMatrix exact = exact_exponential(instance);

  TrialResult result;
  result.kappa = condition_number(instance.t);
  result.rel_error = relative_error(approx, exact);
  result.exceeded = result.rel_error > 0.001;
  return result;
}

namespace {

StatsRow aggregate(const ExperimentConfig& config, const std::vector<TrialResult>& results) {
  StatsRow row;
  row.n = config.n;
  row.max_cluster = config.max_cluster;
  row.gamma = config.gamma;

  std::vector<double> kappas, errors;
  kappas.reserve(results.size());
  errors.reserve(results.size());
  double kappa_sum = 0.0, error_sum = 0.0;
  for (const auto& r : results) {
    kappas.push_back(r.kappa);
    errors.push_back(r.rel_error);
    kappa_sum += r.kappa;
    error_sum += r.rel_error;
    row.max_kappa = std::max(row.max_kappa, r.kappa);
    row.max_rel_error = std::max(row.max_rel_error, r.rel_error);
    if (r.exceeded) ++row.exceed_count;
  }
  const double count = static_cast<double>(results.size());
  row.mean_kappa = kappa_sum / count;
  row.mean_rel_error = report_value(error_sum / count);
  row.max_rel_error = report_value(row.max_rel_error);
  row.median_kappa = median(std::move(kappas));
  row.median_rel_error = report_value(median(std::move(errors)));
  return row;
}

std::vector<TrialResult> collect_trials_parallel(const ExperimentConfig& config) {
  std::vector<TrialResult> results(config.trials);
  std::exception_ptr failure;
  const auto trials = static_cast<std::int64_t>(config.trials);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < trials; ++i) {
    try {
      results[static_cast<std::size_t>(i)] = run_trial(config, static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

std::vector<TrialResult> collect_trials_serial(const ExperimentConfig& config) {
  std::vector<TrialResult> results(config.trials);
  for (std::size_t i = 0; i < config.trials; ++i) results[i] = run_trial(config, i);
  return results;
}

}  // namespace

StatsRow run_trials(const ExperimentConfig& config) {
  validate(config);
  if (config.trials == 0) throw std::invalid_argument("experiment: at least one trial required");
  return aggregate(config, collect_trials_parallel(config));
}

StatsRow run_trials_serial(const ExperimentConfig& config) {
  validate(config);
  if (config.trials == 0) throw std::invalid_argument("experiment: at least one trial required");
  return aggregate(config, collect_trials_serial(config));
}

}  // namespace cfunm
