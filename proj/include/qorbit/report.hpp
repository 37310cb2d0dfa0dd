#ifndef QORBIT_REPORT_HPP
#define QORBIT_REPORT_HPP

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>

#include "qorbit/density.hpp"
#include "qorbit/invariants.hpp"
#include "qorbit/orbitspace.hpp"
#include "qorbit/strata.hpp"

namespace qorbit {

/// Everything the analyzer derives from one matrix. Dimension-specific
/// sections are present only for the matching dimension.
struct AnalysisReport {
  int dim = 0;
  ValidityReport validity;
  Eigen::VectorXd t;                 // trace invariants t_1..t_d
  Eigen::VectorXd char_coeffs;       // S_1..S_d
  PsdVerdict grad_verdict;
  MembershipVerdict member;
  std::optional<RegionVerdict> region;            // d == 3, normalized
  std::optional<StratumLabel> stratum;            // d == 3, physical
  std::optional<CasimirPoint> casimirs;           // d == 4
  std::optional<std::array<double, 3>> ps_values; // d == 4
};

/// Full per-state analysis. Spectrum-derived quantities come from the
/// Hermitian part, so a non-Hermitian input still yields a report (with its
/// hermitian flag down).
AnalysisReport analyze(const Eigen::MatrixXcd& m, double tol = 1e-9);

/// Key/value text document, full precision.
std::string render_text(const AnalysisReport& rep);

/// The same document as JSON text.
std::string render_json(const AnalysisReport& rep);

/// 0 when the state is physical, 2 otherwise (malformed input never reaches
/// the report stage).
int exit_code_for(const AnalysisReport& rep);

}  // namespace qorbit

#endif  // QORBIT_REPORT_HPP
