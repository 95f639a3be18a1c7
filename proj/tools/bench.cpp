// Benchmark comparing the OpenMP kernels against their serial references:
// the dense complex matmul and the experiment trial loop.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "clusterfunm/experiments.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename F>
double best_of(int repeats, F&& body) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto start = Clock::now();
    body();
    best = std::min(best, seconds_since(start));
  }
  return best;
}

cfunm::ComplexMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  cfunm::Rng rng = cfunm::make_trial_rng(seed, 0);
  cfunm::ComplexMatrix m(n, n);
  for (auto& v : m.data()) v = cfunm::uniform_complex(rng, -1.0, 1.0, -1.0, 1.0);
  return m;
}

void bench_matmul() {
  std::printf("mat_mul: serial vs OpenMP\n");
  std::printf("%8s %12s %12s %9s\n", "n", "serial [s]", "parallel [s]", "speedup");
  for (std::size_t n : {48, 96, 192, 384}) {
    const auto a = random_matrix(n, 1);
    const auto b = random_matrix(n, 2);
    cfunm::ComplexMatrix out;
    const double ts = best_of(3, [&] { out = cfunm::mat_mul_serial(a, b); });
    const double tp = best_of(3, [&] { out = cfunm::mat_mul(a, b); });
    std::printf("%8zu %12.6f %12.6f %8.2fx\n", n, ts, tp, ts / tp);
  }
}

void bench_trials() {
  cfunm::ExperimentConfig config;
  config.n = 20;
  config.max_cluster = 4;
  config.gamma = 5;
  config.trials = 60;
  config.seed = 7;

  std::printf("\nrun_trials: %zu trials, n=%zu, K=%zu\n", config.trials, config.n,
              config.max_cluster);
  cfunm::StatsRow serial_row, parallel_row;
  const double ts = best_of(2, [&] { serial_row = cfunm::run_trials_serial(config); });
  const double tp = best_of(2, [&] { parallel_row = cfunm::run_trials(config); });
  std::printf("%8s %12.6f s\n%8s %12.6f s\n%8s %11.2fx\n", "serial", ts, "parallel", tp, "speedup",
              ts / tp);
  std::printf("results identical: %s\n", serial_row == parallel_row ? "yes" : "NO");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serial code\n\n");
#endif
  bench_matmul();
  bench_trials();
  return 0;
}
