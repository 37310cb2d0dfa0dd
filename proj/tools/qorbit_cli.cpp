// qorbit — unitary-invariant analysis of density matrices.
//
// Subcommands:
//   analyze  <file>          validity, invariants, orbit-space verdicts
//   verify                   Monte Carlo grad-matrix semipositivity check
//   figure   <which>         CSV data for the qutrit triangle / qudit regions
//   sample                   CSV of invariant coordinates of random states
//
// Exit codes: 0 success/physical state, 2 unphysical input, 3 malformed
// input or usage error, 1 internal error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "qorbit/commands.hpp"
#include "qorbit/matrix_io.hpp"
#include "qorbit/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUnphysical = 2;
constexpr int kExitMalformed = 3;

struct Options {
  std::string analyze_path;
  std::string figure_which;
  std::string out;
  int dim = 3;
  int rank = 0;
  long n = 1000;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  double grid_step = 0.0;  // 0 = per-figure default
  bool json = false;
};

int run_analyze(const Options& opt) {
  Eigen::MatrixXcd m;
  try {
    m = qorbit::read_density_file(opt.analyze_path);
  } catch (const qorbit::MatrixFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  const qorbit::AnalysisReport rep = qorbit::analyze(m, opt.tol);
  std::cout << (opt.json ? qorbit::render_json(rep) : qorbit::render_text(rep));
  return qorbit::exit_code_for(rep);
}

int run_verify(const Options& opt) {
  const qorbit::VerifySummary s =
      qorbit::verify_grad_psd(opt.dim, opt.n, opt.seed, opt.tol);
  std::cout << (opt.json ? qorbit::render_json(s) : qorbit::render_text(s));
  return kExitOk;
}

int run_figure(const Options& opt) {
  const std::filesystem::path dir =
      opt.out.empty() ? std::filesystem::path(".")
                      : std::filesystem::path(opt.out);
  if (opt.figure_which == "qutrit_triangle") {
    int nx = 500, ny = 500;
    if (opt.grid_step > 0.0) {
      nx = static_cast<int>(0.75 / opt.grid_step + 0.5) + 1;
      ny = static_cast<int>(1.05 / opt.grid_step + 0.5) + 1;
    }
    qorbit::figure_qutrit(dir, nx, ny, 1000, opt.tol);
  } else {
    qorbit::QuditGrid grid;
    if (opt.grid_step > 0.0) grid.step = opt.grid_step;
    qorbit::figure_qudit(dir, grid, opt.tol);
  }
  return kExitOk;
}

int run_sample(const Options& opt) {
  qorbit::sample_states(opt.dim, opt.n, opt.rank, opt.seed, opt.out, opt.tol);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unitary-invariant coordinates and orbit-space tests for "
               "density matrices"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* analyze = app.add_subcommand("analyze", "Analyze a matrix file");
  analyze->add_option("file", opt.analyze_path, "Matrix JSON document")
      ->required();
  analyze->add_option("--tol", opt.tol, "Tolerance for validity bands");
  analyze->add_flag("--json", opt.json, "Emit a JSON report");

  CLI::App* verify = app.add_subcommand(
      "verify", "Monte Carlo grad-matrix semipositivity check");
  verify->add_option("--dim", opt.dim, "State dimension")
      ->check(CLI::Range(2, 8));
  verify->add_option("--n", opt.n, "Number of random states")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", opt.seed, "RNG seed");
  verify->add_option("--tol", opt.tol, "PSD classification tolerance")
      ->default_val(1e-8);
  verify->add_flag("--json", opt.json, "Emit a JSON summary");

  CLI::App* figure = app.add_subcommand("figure", "Emit figure CSV data");
  figure
      ->add_option("which", opt.figure_which,
                   "qutrit_triangle or qudit_regions")
      ->required()
      ->check(CLI::IsMember({"qutrit_triangle", "qudit_regions"}));
  figure->add_option("--out", opt.out, "Output directory")->required();
  figure->add_option("--grid-step", opt.grid_step, "Grid step override");
  figure->add_option("--tol", opt.tol, "Classification tolerance")
      ->default_val(1e-8);

  CLI::App* sample = app.add_subcommand(
      "sample", "CSV of invariant coordinates of random states");
  sample->add_option("--dim", opt.dim, "State dimension")
      ->check(CLI::Range(2, 8));
  sample->add_option("--n", opt.n, "Number of states")
      ->check(CLI::PositiveNumber);
  sample->add_option("--rank", opt.rank, "State rank (0 = cycle 1..dim)");
  sample->add_option("--seed", opt.seed, "RNG seed");
  sample->add_option("--tol", opt.tol, "Classification tolerance");
  sample->add_option("--out", opt.out, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (analyze->parsed()) return run_analyze(opt);
    if (verify->parsed()) return run_verify(opt);
    if (figure->parsed()) return run_figure(opt);
    if (sample->parsed()) return run_sample(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
