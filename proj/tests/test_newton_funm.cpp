#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clusterfunm/experiments.hpp"
#include "oracles.hpp"

using namespace cfunm;

namespace {

ComplexVector random_vector(std::size_t n, Rng& rng) {
  ComplexVector v(n);
  for (auto& z : v) z = uniform_complex(rng, -1.0, 1.0, -1.0, 1.0);
  return v;
}

}  // namespace

TEST_CASE("one eigenvalue gives the constant polynomial") {
  const Complex mu(0.4, -1.1);
  const auto p = build_newton(ExpFunction{}, std::vector<Complex>{mu}, {});
  REQUIRE(p.size() == 1);
  CHECK(std::abs(p.coefficients[0] - std::exp(mu)) <= 1e-15 * std::abs(std::exp(mu)));
  CHECK(std::abs(eval_scalar(p, Complex(7.0, 3.0)) - std::exp(mu)) <=
        1e-15 * std::abs(std::exp(mu)));
}

TEST_CASE("fully coincident spectrum yields Taylor coefficients") {
  const Complex mu(-0.5, 0.9);
  const std::vector<Complex> eigenvalues(5, mu);
  const auto p = build_newton(ExpFunction{}, eigenvalues, FunmParams{0.01, 0});
  for (std::size_t m = 0; m < 5; ++m) {
    const Complex expected = ExpFunction{}.taylor_coefficient(mu, static_cast<int>(m));
    CHECK(p.coefficients[m] == expected);
  }
}

TEST_CASE("singleton clusters match the direct recurrence") {
  const std::vector<Complex> eigenvalues{{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}};
  const auto p = build_newton(ExpFunction{}, eigenvalues, {});
  std::vector<Complex> values;
  for (const auto& mu : eigenvalues) values.push_back(std::exp(mu));
  const auto direct = dd_table_direct<Complex>(eigenvalues, values).first_column();
  for (std::size_t m = 0; m < 3; ++m) {
    const double scale = std::max(1.0, std::abs(direct[m]));
    CHECK(std::abs(p.coefficients[m] - direct[m]) <= 1e-14 * scale);
  }
}

TEST_CASE("eval_scalar interpolates at the nodes") {
  const std::vector<Complex> nodes{{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}};
  const auto p = build_newton(ExpFunction{}, nodes, {});
  for (const auto& mu : nodes)
    CHECK(std::abs(eval_scalar(p, mu) - std::exp(mu)) <= 1e-13 * std::abs(std::exp(mu)));
}

TEST_CASE("cubic interpolation is exact at degree three") {
  const PolynomialFunction cube(
      {Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)});
  const std::vector<Complex> nodes{{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {3.5, 0.0}};
  const auto p = build_newton(cube, nodes, {});
  CHECK(std::abs(eval_scalar(p, Complex(5.0, 0.0)) - Complex(125.0, 0.0)) <= 1e-12 * 125.0);
}

TEST_CASE("eval_matrix on a diagonal of the nodes") {
  const std::vector<Complex> nodes{{0.0, 0.0}, {0.8, 0.3}, {-1.2, 0.0}, {0.1, -2.0}};
  const auto p = build_newton(ExpFunction{}, nodes, {});
  const auto result = eval_matrix(p, ComplexMatrix::diagonal(nodes));
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(std::abs(result(i, i) - std::exp(nodes[i])) <= 1e-12 * std::abs(std::exp(nodes[i])));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) CHECK(std::abs(result(i, j)) <= 1e-12);
}

TEST_CASE("constant polynomial scales the identity") {
  NewtonPolynomial<Complex> p;
  p.points = {Complex(0.0, 0.0)};
  p.coefficients = {Complex(2.5, -1.0)};
  const auto result = eval_matrix(p, ComplexMatrix::identity(3) * Complex(9.0, 1.0));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(result(i, j) == (i == j ? Complex(2.5, -1.0) : Complex(0.0, 0.0)));
}

TEST_CASE("factored 6x6 instance matches the oracle exponential") {
  ExperimentConfig config;
  config.n = 6;
  config.max_cluster = 2;
  config.seed = 51;
  Rng rng = make_trial_rng(config.seed, 0);
  const auto instance = generate_instance(config, rng);
  const auto p = build_newton(ExpFunction{}, instance.eigenvalues(), {});
  const auto approx = eval_matrix(p, instance.a);
  const auto exact = exact_exponential(instance);
  CHECK(operator_norm(approx - exact) <= 1e-8 * operator_norm(exact));
}

TEST_CASE("matrix-vector chain agrees with the full-matrix path") {
  Rng rng = make_trial_rng(52, 0);
  ExperimentConfig config;
  config.n = 8;
  config.max_cluster = 3;
  config.seed = 52;
  const auto instance = generate_instance(config, rng);
  const auto p = build_newton(ExpFunction{}, instance.eigenvalues(), {});

  const ComplexVector b = random_vector(8, rng);
  const auto direct = eval_matrix_vector(p, instance.a, b);
  const auto full = mat_vec(eval_matrix(p, instance.a), b);
  for (std::size_t i = 0; i < 8; ++i) {
    const double scale = std::max(1.0, std::abs(full[i]));
    CHECK(std::abs(direct[i] - full[i]) <= 1e-12 * scale);
  }
}

TEST_CASE("matrix-vector chain edge cases") {
  const auto p = build_newton(ExpFunction{}, std::vector<Complex>{{0.3, 0.0}}, {});
  const ComplexVector zero(1, Complex(0.0, 0.0));
  CHECK(eval_matrix_vector(p, ComplexMatrix::identity(1) * Complex(0.3, 0.0), zero)[0] ==
        Complex(0.0, 0.0));

  const ComplexVector b{Complex(2.0, -1.0)};
  const auto v = eval_matrix_vector(p, ComplexMatrix::identity(1) * Complex(0.3, 0.0), b);
  CHECK(std::abs(v[0] - p.coefficients[0] * b[0]) <= 1e-15 * std::abs(v[0]));
}

TEST_CASE("funm of the zero matrix is the identity") {
  const ComplexMatrix zero(4, 4);
  const std::vector<Complex> spectrum(4, Complex(0.0, 0.0));
  const auto result = funm(zero, spectrum, ExpFunction{}, {});
  CHECK(oracle::max_abs_diff(result, ComplexMatrix::identity(4)) <= 1e-15);
}

TEST_CASE("funm of a nilpotent block exercises the coincident Taylor path") {
  ComplexMatrix a(2, 2);
  a(0, 1) = Complex(1.0, 0.0);
  const auto result = funm(a, std::vector<Complex>{{0.0, 0.0}, {0.0, 0.0}}, ExpFunction{}, {});
  CHECK(std::abs(result(0, 0) - Complex(1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(result(0, 1) - Complex(1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(result(1, 0)) <= 1e-15);
  CHECK(std::abs(result(1, 1) - Complex(1.0, 0.0)) <= 1e-15);
}

TEST_CASE("a clustered 20x20 instance stays under 1e-5 relative error") {
  ExperimentConfig config;
  config.n = 20;
  config.max_cluster = 8;
  config.gamma = 5;
  config.seed = 53;
  Rng rng = make_trial_rng(config.seed, 0);
  const auto instance = generate_instance(config, rng);
  const auto approx =
      funm(instance.a, instance.eigenvalues(), ExpFunction{}, FunmParams{config.delta, config.gamma});
  CHECK(relative_error(approx, exact_exponential(instance)) < 1e-5);
}

TEST_CASE("funm validates dimensions") {
  const ComplexMatrix a(3, 3);
  CHECK_THROWS_AS(funm(a, std::vector<Complex>{{0.0, 0.0}}, ExpFunction{}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(funm(ComplexMatrix(2, 3), std::vector<Complex>(2), ExpFunction{}, {}),
                  std::invalid_argument);
}

TEST_CASE("interpolation property over random distinct nodes") {
  Rng rng = make_trial_rng(54, 0);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<Complex> nodes;
    while (nodes.size() < 7) {
      const Complex candidate = uniform_complex(rng, -2.0, 0.0, -3.0, 3.0);
      bool ok = true;
      for (const auto& p : nodes)
        if (std::abs(p - candidate) < 0.05) ok = false;
      if (ok) nodes.push_back(candidate);
    }
    const auto p = build_newton(ExpFunction{}, nodes, {});
    for (const auto& mu : nodes) {
      const Complex f_mu = std::exp(mu);
      CHECK(std::abs(eval_scalar(p, mu) - f_mu) <= 1e-10 * (1.0 + std::abs(f_mu)));
    }
  }
}

TEST_CASE("polynomial exactness against brute-force monomial evaluation") {
  Rng rng = make_trial_rng(55, 0);
  ExperimentConfig config;
  config.n = 6;
  config.max_cluster = 2;
  config.seed = 55;
  for (int rep = 0; rep < 5; ++rep) {
    Rng irng = make_trial_rng(config.seed, static_cast<std::uint64_t>(rep));
    const auto instance = generate_instance(config, irng);
    std::vector<Complex> coeffs;
    for (std::size_t i = 0; i < config.n; ++i)
      coeffs.push_back(uniform_complex(rng, -1.0, 1.0, -1.0, 1.0));
    const PolynomialFunction f(coeffs);  // degree n-1

    const auto approx = funm(instance.a, instance.eigenvalues(), f,
                             FunmParams{0.01, static_cast<int>(config.n)});
    const auto exact = oracle::poly_eval_monomial(instance.a, coeffs);
    CHECK(operator_norm(approx - exact) <= 1e-10 * operator_norm(exact));
  }
}

TEST_CASE("p(A) commutes with A") {
  ExperimentConfig config;
  config.n = 8;
  config.max_cluster = 3;
  config.seed = 56;
  Rng rng = make_trial_rng(config.seed, 0);
  const auto instance = generate_instance(config, rng);
  const auto p = build_newton(ExpFunction{}, instance.eigenvalues(), {});
  const auto pa = eval_matrix(p, instance.a);
  const auto left = mat_mul(pa, instance.a);
  const auto right = mat_mul(instance.a, pa);
  CHECK(operator_norm(left - right) <= 1e-10 * operator_norm(left));
}

TEST_CASE("similarity covariance within conditioning limits") {
  ExperimentConfig config;
  config.n = 10;
  config.max_cluster = 2;
  config.seed = 57;
  for (std::size_t trial = 0; trial < 8; ++trial) {
    Rng rng = make_trial_rng(config.seed, trial);
    const auto instance = generate_instance(config, rng);
    if (condition_number(instance.t) > 1e4) continue;
    const auto p = build_newton(ExpFunction{}, instance.eigenvalues(), {});
    const auto via_a = eval_matrix(p, instance.a);
    const auto via_lambda = mat_mul(
        mat_mul(mat_inverse(instance.t), eval_matrix(p, instance.lambda)), instance.t);
    CHECK(operator_norm(via_a - via_lambda) <= 1e-6 * operator_norm(via_a));
  }
}
