#ifndef QORBIT_COMMANDS_HPP
#define QORBIT_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <string>

#include "qorbit/qudit4.hpp"

namespace qorbit {

/// Monte Carlo check of grad-matrix semipositivity over random states.
struct VerifySummary {
  int dim = 0;
  long n = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  long violations = 0;              // indefinite grad verdicts (expected 0)
  double min_grad_eigenvalue = 0.0; // most negative slack seen
};

/// Samples n random states with ranks cycling 1..d and classifies the grad
/// matrix of each. Deterministic per (d, n, seed).
VerifySummary verify_grad_psd(int d, long n, std::uint64_t seed,
                              double tol = 1e-8);

std::string render_text(const VerifySummary& s);
std::string render_json(const VerifySummary& s);

/// Emits qutrit_grid.csv (nx x ny region classification over
/// [0.3, 1.05] x [0, 1.05]) and the three boundary curves sampled at
/// curve_points points each into dir.
void figure_qutrit(const std::filesystem::path& dir, int nx = 500,
                   int ny = 500, int curve_points = 1000, double tol = 1e-9);

/// Emits qudit_rho_pos.csv (state-positivity region) and
/// qudit_rho_pos_grad_pos.csv (additionally grad4-semipositive) for the grid.
void figure_qudit(const std::filesystem::path& dir,
                  const QuditGrid& grid = QuditGrid{}, double tol = 1e-8);

/// Writes a CSV of invariant (and for d = 4, Casimir) coordinates of n
/// random states. rank = 0 cycles ranks 1..d.
void sample_states(int d, long n, int rank, std::uint64_t seed,
                   const std::filesystem::path& out, double tol = 1e-9);

}  // namespace qorbit

#endif  // QORBIT_COMMANDS_HPP
