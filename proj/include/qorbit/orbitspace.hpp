#ifndef QORBIT_ORBITSPACE_HPP
#define QORBIT_ORBITSPACE_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "qorbit/invariants.hpp"

namespace qorbit {

/// Power sums t_0..t_kmax with the t_0 = d convention, extended past d via
/// the characteristic-polynomial recursion when kmax > d.
inline Eigen::VectorXd full_power_sums(const Eigen::VectorXd& t, int kmax) {
  const int d = static_cast<int>(t.size());
  Eigen::VectorXd full(kmax + 1);
  full[0] = static_cast<double>(d);
  full.segment(1, d) = t;
  if (kmax > d) full.tail(kmax - d) = extend_traces(t, kmax);
  return full;
}

/// Hankel matrix of power sums: entries[i][j] = t_{i+j-2} (1-based), t_0 = d.
/// Equals V V^T for the Vandermonde matrix V of the eigenvalues, so it is
/// positive semidefinite exactly when the characteristic polynomial has an
/// all-real root set, and det = prod_{i<j}(x_i - x_j)^2.
inline Eigen::MatrixXd disc_matrix(const Eigen::VectorXd& t) {
  const int d = static_cast<int>(t.size());
  const Eigen::VectorXd p = full_power_sums(t, 2 * d - 2);
  Eigen::MatrixXd m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = p[i + j];
  return m;
}

/// Gram matrix of the trace-invariant gradients: entries[i][j] =
/// i * j * t_{i+j-2} (1-based), t_0 = d. Entrywise equal to
/// diag(1..d) * disc_matrix(t) * diag(1..d).
inline Eigen::MatrixXd grad_matrix(const Eigen::VectorXd& t) {
  const int d = static_cast<int>(t.size());
  const Eigen::VectorXd p = full_power_sums(t, 2 * d - 2);
  Eigen::MatrixXd m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      m(i, j) = static_cast<double>((i + 1) * (j + 1)) * p[i + j];
    }
  return m;
}

/// Vandermonde matrix with V(i, k) = x_k^i, i = 0..n-1, so that the Hankel
/// of power sums factors as V V^T.
inline Eigen::MatrixXd vandermonde(const Eigen::VectorXd& x) {
  const int n = static_cast<int>(x.size());
  Eigen::MatrixXd v(n, n);
  for (int k = 0; k < n; ++k) {
    double p = 1.0;
    for (int i = 0; i < n; ++i) {
      v(i, k) = p;
      p *= x[k];
    }
  }
  return v;
}

enum class PsdClass { positive_definite, psd_boundary, indefinite };

inline const char* to_string(PsdClass c) {
  switch (c) {
    case PsdClass::positive_definite: return "positive_definite";
    case PsdClass::psd_boundary: return "psd_boundary";
    case PsdClass::indefinite: return "indefinite";
  }
  return "?";
}

struct PsdVerdict {
  PsdClass cls = PsdClass::indefinite;
  double min_eigenvalue = 0.0;
  double scale = 0.0;  // spectral norm used for the tolerance band
};

/// Classifies a symmetric matrix by its minimum eigenvalue against the band
/// +-tol * (1 + spectral norm). Rejects asymmetric input.
inline PsdVerdict psd_classify(const Eigen::MatrixXd& m, double tol = 1e-9) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("psd_classify: square matrix required");
  }
  const double scale0 = m.cwiseAbs().maxCoeff();
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol * (1.0 + scale0)) {
    throw std::invalid_argument("psd_classify: matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      ((m + m.transpose()) / 2.0).eval(), Eigen::EigenvaluesOnly);
  PsdVerdict v;
  v.min_eigenvalue = es.eigenvalues().minCoeff();
  v.scale = es.eigenvalues().cwiseAbs().maxCoeff();
  const double band = tol * (1.0 + v.scale);
  if (v.min_eigenvalue < -band) {
    v.cls = PsdClass::indefinite;
  } else if (v.min_eigenvalue <= band) {
    v.cls = PsdClass::psd_boundary;
  } else {
    v.cls = PsdClass::positive_definite;
  }
  return v;
}

enum class MembershipClass { inside, boundary, outside };

inline const char* to_string(MembershipClass c) {
  switch (c) {
    case MembershipClass::inside: return "inside";
    case MembershipClass::boundary: return "boundary";
    case MembershipClass::outside: return "outside";
  }
  return "?";
}

/// Orbit-space membership verdict with per-condition slacks: the S_k values
/// themselves and the spectral slack of the Hankel test.
struct MembershipVerdict {
  MembershipClass cls = MembershipClass::outside;
  Eigen::VectorXd char_coeffs;      // S_1..S_d; the slack of each S_k >= 0
  double disc_min_eig = 0.0;
  double disc_det = 0.0;            // equals the eigenvalue discriminant
  std::vector<int> active_s;        // indices k (1-based) with S_k on its band
  bool disc_active = false;
};

/// Tests whether an invariant point t lies in the image of the physical state
/// space: all characteristic coefficients S_k >= 0 and the power-sum Hankel
/// positive semidefinite. Strict feasibility gives `inside`; feasibility with
/// an active constraint gives `boundary`.
///
/// Activity of the Hankel condition is detected both through its minimum
/// eigenvalue and through its determinant (the eigenvalue discriminant).
/// Near a multiple-degeneracy point the determinant reaches the tolerance
/// band long before the minimum eigenvalue does, and the explicit qutrit
/// region test draws its boundary with exactly that quantity.
inline MembershipVerdict membership(const Eigen::VectorXd& t, bool normalized,
                                    double tol = 1e-9) {
  const int d = static_cast<int>(t.size());
  if (d < 2) throw std::invalid_argument("membership: need t of length >= 2");
  if (normalized && std::abs(t[0] - 1.0) > tol * 2.0) {
    throw std::invalid_argument(
        "membership: normalized flag requires t_1 = 1");
  }

  MembershipVerdict v;
  v.char_coeffs = newton_t_to_S(t);

  const Eigen::MatrixXd disc = disc_matrix(t);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(disc,
                                                    Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  v.disc_min_eig = ev.minCoeff();
  v.disc_det = ev.prod();
  const double disc_band = tol * (1.0 + ev.cwiseAbs().maxCoeff());
  const double det_band = tol * (1.0 + std::abs(v.disc_det));

  bool outside = v.disc_min_eig < -disc_band;
  v.disc_active = !outside && (std::abs(v.disc_min_eig) <= disc_band ||
                               std::abs(v.disc_det) <= det_band);

  for (int k = 1; k <= d; ++k) {
    const double s = v.char_coeffs[k - 1];
    const double band = tol * (1.0 + std::abs(s));
    if (s < -band) outside = true;
    else if (s <= band) v.active_s.push_back(k);
  }

  if (outside) {
    v.cls = MembershipClass::outside;
  } else if (v.disc_active || !v.active_s.empty()) {
    v.cls = MembershipClass::boundary;
  } else {
    v.cls = MembershipClass::inside;
  }
  return v;
}

// --- explicit qutrit (d = 3) region -----------------------------------------

/// Eigenvalue-reality polynomial of a normalized qutrit in (t2, t3); equals
/// the discriminant prod_{i<j}(x_i - x_j)^2 of the spectrum.
inline double qutrit_reality(double t2, double t3) {
  return (3.0 * t2 * t2 * t2 - 21.0 * t2 * t2 + 36.0 * t3 * t2 + 9.0 * t2 -
          18.0 * t3 * t3 - 8.0 * t3 - 1.0) /
         6.0;
}

/// Upper branch of the degenerate-spectrum curve: double eigenvalue below a
/// simple one. Runs from A(1/3, 1/9) to B(1, 1).
inline double qutrit_curve_ab(double t2) {
  const double u = std::max(0.0, 3.0 * t2 - 1.0);
  return (-4.0 + 18.0 * t2 + std::sqrt(2.0 * u * u * u)) / 18.0;
}

/// Lower branch: double eigenvalue above a simple one. A(1/3, 1/9) to
/// C(1/2, 1/4).
inline double qutrit_curve_ac(double t2) {
  const double u = std::max(0.0, 3.0 * t2 - 1.0);
  return (-4.0 + 18.0 * t2 - std::sqrt(2.0 * u * u * u)) / 18.0;
}

/// Rank-deficiency line S_3 = 0: t3 = (3 t2 - 1) / 2. B(1, 1) to C(1/2, 1/4).
inline double qutrit_curve_bc(double t2) {
  return 1.5 * t2 - 0.5;
}

enum class RegionLocation {
  interior,
  edge_ab,
  edge_ac,
  edge_bc,
  vertex_a,
  vertex_b,
  vertex_c,
  outside
};

inline const char* to_string(RegionLocation loc) {
  switch (loc) {
    case RegionLocation::interior: return "interior";
    case RegionLocation::edge_ab: return "edge_AB";
    case RegionLocation::edge_ac: return "edge_AC";
    case RegionLocation::edge_bc: return "edge_BC";
    case RegionLocation::vertex_a: return "vertex_A";
    case RegionLocation::vertex_b: return "vertex_B";
    case RegionLocation::vertex_c: return "vertex_C";
    case RegionLocation::outside: return "outside";
  }
  return "?";
}

enum class QutritConstraint { reality, s2_low, s2_high, s3_low, s3_high };

inline const char* to_string(QutritConstraint c) {
  switch (c) {
    case QutritConstraint::reality: return "reality";
    case QutritConstraint::s2_low: return "S2_low";
    case QutritConstraint::s2_high: return "S2_high";
    case QutritConstraint::s3_low: return "S3_low";
    case QutritConstraint::s3_high: return "S3_high";
  }
  return "?";
}

struct RegionVerdict {
  RegionLocation location = RegionLocation::outside;
  std::vector<QutritConstraint> binding;

  bool has(QutritConstraint c) const {
    return std::find(binding.begin(), binding.end(), c) != binding.end();
  }
};

/// Locates a normalized-qutrit invariant point (t2, t3) in the curvilinear
/// triangle cut out by the reality condition and the bounds
/// 0 <= S2 <= 1/3, 0 <= S3 <= 1/27. Vertex classification takes precedence
/// over edges (the S3 = 0 line is tangent to the upper reality branch at B),
/// edges over interior; equalities are tolerance-banded.
inline RegionVerdict qutrit_region(double t2, double t3, double tol = 1e-9) {
  const double s2 = (1.0 - t2) / 2.0;
  const double s3 = (1.0 - 3.0 * t2 + 2.0 * t3) / 6.0;
  const double r = qutrit_reality(t2, t3);

  const double slack[5] = {r, s2, 1.0 / 3.0 - s2, s3, 1.0 / 27.0 - s3};
  constexpr QutritConstraint kName[5] = {
      QutritConstraint::reality, QutritConstraint::s2_low,
      QutritConstraint::s2_high, QutritConstraint::s3_low,
      QutritConstraint::s3_high};

  RegionVerdict v;
  bool outside = false;
  bool active[5] = {};
  for (int i = 0; i < 5; ++i) {
    const double band = tol * (1.0 + std::abs(slack[i]));
    if (slack[i] < -band) outside = true;
    else if (slack[i] <= band) {
      active[i] = true;
      v.binding.push_back(kName[i]);
    }
  }
  if (outside) {
    v.binding.clear();
    v.location = RegionLocation::outside;
    return v;
  }

  const bool reality_on = active[0];
  const bool s2_low_on = active[1];
  const bool s2_high_on = active[2];
  const bool s3_low_on = active[3];
  const bool s3_high_on = active[4];

  if (s2_high_on || s3_high_on) {
    // Both upper bounds are attained only at the triple degeneracy.
    v.location = RegionLocation::vertex_a;
  } else if (reality_on && s3_low_on) {
    v.location = (t2 > 0.75) ? RegionLocation::vertex_b
                             : RegionLocation::vertex_c;
  } else if (s2_low_on) {
    v.location = RegionLocation::vertex_b;
  } else if (reality_on) {
    // Branch split along the axis of the degeneracy curve.
    v.location = (t3 >= t2 - 2.0 / 9.0) ? RegionLocation::edge_ab
                                        : RegionLocation::edge_ac;
  } else if (s3_low_on) {
    v.location = RegionLocation::edge_bc;
  } else {
    v.location = RegionLocation::interior;
  }
  return v;
}

}  // namespace qorbit

#endif  // QORBIT_ORBITSPACE_HPP
