// Command-line front end: funm / experiment / impulse over the JSON and CSV
// formats of the library. Exit codes: 0 success, 1 numerical failure,
// 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clusterfunm/io.hpp"

namespace {

using namespace cfunm;

std::unique_ptr<AnalyticFunction> parse_function(const std::string& spec) {
  if (spec == "exp") return std::make_unique<ExpFunction>();
  if (spec.rfind("exp:", 0) == 0) return std::make_unique<ExpFunction>(std::stod(spec.substr(4)));
  if (spec.rfind("poly:", 0) == 0) {
    const auto coeffs = io::spectrum_from_json(io::json::parse(spec.substr(5)), "poly coefficients");
    return std::make_unique<PolynomialFunction>(coeffs);
  }
  throw std::invalid_argument("--function: expected exp, exp:<rate>, or poly:<coeff json>");
}

struct FunmOptions {
  std::string matrix_path, spectrum_path, factored_path;
  std::string function_spec = "exp";
  std::string out_path;
  FunmParams params;
};

int run_funm(const FunmOptions& opt) {
  ComplexMatrix a;
  std::vector<Complex> spectrum;
  if (!opt.factored_path.empty()) {
    if (!opt.matrix_path.empty() || !opt.spectrum_path.empty()) {
      std::cerr << "funm: --factored excludes --matrix/--spectrum\n";
      return 2;
    }
    const auto f = io::factored_from_json(io::file_to_json(opt.factored_path));
    a = mat_mul(mat_mul(mat_inverse(f.t), f.lambda), f.t);
    spectrum = f.lambda.diagonal_entries();
  } else if (!opt.matrix_path.empty() && !opt.spectrum_path.empty()) {
    a = io::matrix_from_json(io::file_to_json(opt.matrix_path));
    spectrum = io::spectrum_from_json(io::file_to_json(opt.spectrum_path));
  } else {
    std::cerr << "funm: provide either --matrix with --spectrum, or --factored\n";
    return 2;
  }

  const auto f = parse_function(opt.function_spec);
  const ComplexMatrix result = funm(a, spectrum, *f, opt.params);
  const auto j = io::matrix_to_json(result);
  if (opt.out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    io::json_to_file(opt.out_path, j);
  return 0;
}

struct ExperimentOptions {
  ExperimentConfig config;
  std::string out_path;
};

int run_experiment(const ExperimentOptions& opt) {
  const StatsRow row = run_trials(opt.config);
  std::cout << io::stats_csv_header() << "\n" << io::stats_csv_row(row) << "\n";
  std::cout << "# extension: median_kappa=" << row.median_kappa
            << " median_relerr=" << row.median_rel_error << "\n";
  if (!opt.out_path.empty()) {
    const bool fresh =
        !std::filesystem::exists(opt.out_path) || std::filesystem::file_size(opt.out_path) == 0;
    std::ofstream out(opt.out_path, std::ios::app);
    if (!out) throw std::invalid_argument("cannot write file: " + opt.out_path);
    if (fresh) out << io::stats_csv_header() << "\n";
    out << io::stats_csv_row(row) << "\n";
  }
  return 0;
}

struct ImpulseOptions {
  std::string system_path;
  std::string out_format = "text";
  std::vector<double> eval_at;
  FunmParams params;
};

int run_impulse(const ImpulseOptions& opt) {
  const ImpulseSystem system = io::system_from_json(io::file_to_json(opt.system_path));
  const SymbolicResponse response = impulse_response(system, opt.params);

  if (opt.out_format == "json")
    std::cout << io::response_to_json(response).dump(2) << "\n";
  else
    std::cout << format_response(response) << "\n";

  if (!opt.eval_at.empty()) {
    std::cout << "t\tsymbolic\tnumeric\trel_diff\n";
    for (double t : opt.eval_at) {
      const Complex symbolic = eval_symbolic(response, t);
      const auto p = build_newton(ExpFunction(t), system.eigenvalues, opt.params);
      const Complex numeric = inner_product(system.d, eval_matrix_vector(p, system.a, system.b));
      const double rel = std::abs(symbolic - numeric) / std::abs(numeric);
      std::cout << t << "\t" << symbolic << "\t" << numeric << "\t" << rel << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analytic functions of small dense complex matrices with clustered eigenvalues"};
  app.require_subcommand(1);

  FunmOptions funm_opt;
  auto* funm_cmd = app.add_subcommand("funm", "Evaluate f(A) from a matrix and its spectrum");
  funm_cmd->add_option("--matrix", funm_opt.matrix_path, "Matrix JSON file");
  funm_cmd->add_option("--spectrum", funm_opt.spectrum_path, "Spectrum JSON file");
  funm_cmd->add_option("--factored", funm_opt.factored_path,
                       "JSON file with T and Lambda; builds A = T^-1 Lambda T");
  funm_cmd->add_option("--function", funm_opt.function_spec,
                       "exp (default), exp:<rate>, or poly:<coeff json>");
  funm_cmd->add_option("--delta", funm_opt.params.delta, "Cluster separation (default 0.01)");
  funm_cmd->add_option("--gamma", funm_opt.params.gamma,
                       "Extra Taylor degree per cluster (default 5)");
  funm_cmd->add_option("--out", funm_opt.out_path, "Output JSON file (stdout when omitted)");

  ExperimentOptions exp_opt;
  auto* exp_cmd = app.add_subcommand("experiment", "Randomized accuracy study of the pipeline");
  exp_cmd->add_option("--n", exp_opt.config.n, "Matrix order (default 20)");
  exp_cmd->add_option("--K", exp_opt.config.max_cluster, "Max cluster size (default 4)");
  exp_cmd->add_option("--gamma", exp_opt.config.gamma, "Extra Taylor degree (default 5)");
  exp_cmd->add_option("--delta", exp_opt.config.delta, "Cluster separation (default 0.01)");
  exp_cmd->add_option("--eta", exp_opt.config.eta, "Cluster radius (default 0.001)");
  exp_cmd->add_option("--trials", exp_opt.config.trials, "Trial count (default 1000)")
      ->check(CLI::PositiveNumber);
  exp_cmd->add_option("--seed", exp_opt.config.seed, "Master RNG seed (default 0)");
  exp_cmd->add_option("--out", exp_opt.out_path, "CSV file, appended or created");

  ImpulseOptions imp_opt;
  auto* imp_cmd = app.add_subcommand("impulse", "Symbolic impulse response of an LTI system");
  imp_cmd->add_option("--system", imp_opt.system_path, "JSON file with A, b, d, spectrum")
      ->required();
  imp_cmd->add_option("--delta", imp_opt.params.delta, "Cluster separation (default 0.01)");
  imp_cmd->add_option("--gamma", imp_opt.params.gamma, "Extra Taylor degree (default 5)");
  imp_cmd->add_option("--eval-at", imp_opt.eval_at,
                      "Times at which to cross-check against the numeric path");
  imp_cmd->add_option("--out", imp_opt.out_format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*funm_cmd) return run_funm(funm_opt);
    if (*exp_cmd) return run_experiment(exp_opt);
    if (*imp_cmd) return run_impulse(imp_opt);
  } catch (const SingularMatrixError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 1;
  } catch (const GenerationExhaustedError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 1;
  } catch (const ZeroDenominatorError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 1;
  } catch (const cfunm::io::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
