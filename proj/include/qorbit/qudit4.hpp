#ifndef QORBIT_QUDIT4_HPP
#define QORBIT_QUDIT4_HPP

#include <Eigen/Dense>
#include <array>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "qorbit/invariants.hpp"
#include "qorbit/orbitspace.hpp"

namespace qorbit {

/// Gradient Gram matrix of the three Casimir scalars of a 4-level system,
/// expressed in the Casimirs themselves:
///   [ 4 c2    6 c3     8 c4          ]
///   [ 6 c3    9 c4     12 c2 c3      ]
///   [ 8 c4    12 c2 c3 4(c3^2+3c2c4) ]
inline Eigen::Matrix3d grad4(const CasimirPoint& c) {
  Eigen::Matrix3d m;
  m << 4.0 * c.c2, 6.0 * c.c3, 8.0 * c.c4,
       6.0 * c.c3, 9.0 * c.c4, 12.0 * c.c2 * c.c3,
       8.0 * c.c4, 12.0 * c.c2 * c.c3,
       4.0 * (c.c3 * c.c3 + 3.0 * c.c2 * c.c4);
  return m;
}

/// The three polynomial inequalities equivalent to semipositivity of the
/// congruence-reduced grad4; all must be >= 0 on the orbit-space image.
inline std::array<double, 3> ps_inequalities(const CasimirPoint& c) {
  const double c2 = c.c2, c3 = c.c3, c4 = c.c4;
  const double v1 = c2 + c3 * c3 + 3.0 * c2 * c4 + c4;
  const double v2 = c3 * c3 * (-4.0 * c2 * c2 + c2 + c4 - 1.0) +
                    c4 * (3.0 * c2 * c2 + 3.0 * c2 * c4 + c2 - 4.0 * c4);
  const double v3 = -4.0 * c2 * c2 * c2 * c3 * c3 +
                    3.0 * c2 * c2 * c4 * c4 + 6.0 * c2 * c3 * c3 * c4 -
                    c3 * c3 * c3 * c3 - 4.0 * c4 * c4 * c4;
  return {v1, v2, v3};
}

/// State positivity in Casimir coordinates: the characteristic coefficients
/// S2, S3, S4 with the all-nonnegative flag.
struct PositivityD4 {
  std::array<double, 3> s{};
  bool ok = false;
};

inline PositivityD4 positivity_d4(const CasimirPoint& c, double tol = 1e-9) {
  PositivityD4 p;
  p.s = s_from_casimirs(c);
  p.ok = p.s[0] >= -tol && p.s[1] >= -tol && p.s[2] >= -tol;
  return p;
}

/// Rectangular scan grid over (c2, c3, c4). Defaults cover the physical
/// image (pure states at (1,1,1), maximally mixed at the origin) with margin.
struct QuditGrid {
  double c2_lo = 0.0, c2_hi = 1.05;
  double c3_lo = -1.05, c3_hi = 1.05;
  double c4_lo = -0.35, c4_hi = 1.05;
  double step = 0.01;

  long count(double lo, double hi) const {
    if (step <= 0.0 || hi < lo) return 0;
    return static_cast<long>((hi - lo) / step + 0.5) + 1;
  }
  long n2() const { return count(c2_lo, c2_hi); }
  long n3() const { return count(c3_lo, c3_hi); }
  long n4() const { return count(c4_lo, c4_hi); }
  long nodes() const { return n2() * n3() * n4(); }
};

/// One grid node with both verdicts: state positivity and grad4
/// semipositivity (eigenvalue test), plus the three inequality values.
struct QuditRegionSample {
  CasimirPoint c;
  double s2 = 0.0, s3 = 0.0, s4 = 0.0;
  bool s_ok = false;
  double grad_min_eig = 0.0;
  bool grad_ok = false;
  std::array<double, 3> ps{};
};

inline QuditRegionSample evaluate_region_sample(const CasimirPoint& c,
                                                double tol = 1e-8) {
  QuditRegionSample s;
  s.c = c;
  const PositivityD4 pos = positivity_d4(c, tol);
  s.s2 = pos.s[0];
  s.s3 = pos.s[1];
  s.s4 = pos.s[2];
  s.s_ok = pos.ok;
  const PsdVerdict g = psd_classify(grad4(c), tol);
  s.grad_min_eig = g.min_eigenvalue;
  s.grad_ok = g.cls != PsdClass::indefinite;
  s.ps = ps_inequalities(c);
  return s;
}

/// Evaluates every node of the grid in row-major (c2, c3, c4) order and
/// feeds the samples to the visitor. Streaming keeps the default grid
/// (several million nodes) out of memory.
template <typename Visitor>
void region_scan(const QuditGrid& grid, double tol, Visitor&& visit) {
  const long n2 = grid.n2(), n3 = grid.n3(), n4 = grid.n4();
  if (n2 <= 0 || n3 <= 0 || n4 <= 0) {
    throw std::invalid_argument("region_scan: empty grid");
  }
  for (long i = 0; i < n2; ++i) {
    const double c2 = grid.c2_lo + static_cast<double>(i) * grid.step;
    for (long j = 0; j < n3; ++j) {
      const double c3 = grid.c3_lo + static_cast<double>(j) * grid.step;
      for (long k = 0; k < n4; ++k) {
        const double c4 = grid.c4_lo + static_cast<double>(k) * grid.step;
        visit(evaluate_region_sample({c2, c3, c4}, tol));
      }
    }
  }
}

inline std::vector<QuditRegionSample> region_scan(const QuditGrid& grid,
                                                  double tol = 1e-8) {
  std::vector<QuditRegionSample> out;
  out.reserve(static_cast<std::size_t>(grid.nodes()));
  region_scan(grid, tol,
              [&out](const QuditRegionSample& s) { out.push_back(s); });
  return out;
}

void write_region_csv_header(std::ostream& os);
void write_region_csv_row(std::ostream& os, const QuditRegionSample& s);

}  // namespace qorbit

#endif  // QORBIT_QUDIT4_HPP
