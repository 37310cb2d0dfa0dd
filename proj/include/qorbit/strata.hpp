#ifndef QORBIT_STRATA_HPP
#define QORBIT_STRATA_HPP

#include <Eigen/Dense>
#include <array>
#include <stdexcept>
#include <string>

#include "qorbit/bloch.hpp"
#include "qorbit/orbitspace.hpp"

namespace qorbit {

/// Gram matrix of the adjoint-orbit tangent vectors l_i = i [g_i, rho],
/// A_ij = tr(l_i l_j) / 2, with its numerical rank. The rank equals the
/// orbit dimension through rho.
struct TangentGram {
  Eigen::MatrixXd entries;
  int rank = 0;
};

inline int gram_rank(const Eigen::MatrixXd& a, double rank_tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd sv = es.eigenvalues().cwiseAbs();
  const double cut = rank_tol * (1.0 + sv.maxCoeff());
  return static_cast<int>((sv.array() > cut).count());
}

/// Tangent Gram matrix from explicit commutators.
inline TangentGram tangent_gram_direct(const Eigen::MatrixXcd& rho,
                                       const SuBasis& basis,
                                       double rank_tol = 1e-8) {
  const int d = basis.dim;
  if (rho.rows() != d || rho.cols() != d) {
    throw std::invalid_argument("tangent_gram_direct: dim mismatch with basis");
  }
  const int n = basis.algebra_dim();
  const Complex I(0.0, 1.0);
  std::vector<Eigen::MatrixXcd> tangents(n);
  for (int i = 0; i < n; ++i) {
    tangents[i] = I * (basis.generators[i] * rho - rho * basis.generators[i]);
  }
  TangentGram g;
  g.entries.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double a = 0.5 * (tangents[i] * tangents[j]).trace().real();
      g.entries(i, j) = a;
      g.entries(j, i) = a;
    }
  }
  g.rank = gram_rank(g.entries, rank_tol);
  return g;
}

/// Same Gram matrix through the structure constants:
/// A_ij = (2 (d-1) / d) sum_s ( f_ims xi_m )( f_jns xi_n ), which is the
/// 4/3 prefactor of the qutrit case. Independent of tangent_gram_direct;
/// the two must agree for every Bloch vector, physical or not.
inline TangentGram tangent_gram_bloch(const Eigen::VectorXd& xi,
                                      const SuBasis& basis,
                                      double rank_tol = 1e-8) {
  const int n = basis.algebra_dim();
  if (xi.size() != n) {
    throw std::invalid_argument("tangent_gram_bloch: coords length mismatch");
  }
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);  // b(i, s) = f_ims xi_m
  for (const auto& e : basis.f_tensor.nonzeros) {
    b(e.i, e.k) += e.value * xi[e.j];
  }
  const double factor = 2.0 * (basis.dim - 1) / static_cast<double>(basis.dim);
  TangentGram g;
  g.entries = factor * (b * b.transpose());
  g.rank = gram_rank(g.entries, rank_tol);
  return g;
}

/// Diagonal of the tangent Gram matrix for a diagonal qutrit state with Bloch
/// coordinates (xi3, xi8):
/// (1/3) (4 xi3^2, 4 xi3^2, 0, (xi3 + sqrt(3) xi8)^2, (xi3 + sqrt(3) xi8)^2,
///        (xi3 - sqrt(3) xi8)^2, (xi3 - sqrt(3) xi8)^2, 0).
inline std::array<double, 8> gram_diag_closed_form(double xi3, double xi8) {
  const double s3 = std::sqrt(3.0);
  const double a = 4.0 * xi3 * xi3;
  const double p = (xi3 + s3 * xi8) * (xi3 + s3 * xi8);
  const double m = (xi3 - s3 * xi8) * (xi3 - s3 * xi8);
  return {a / 3.0, a / 3.0, 0.0, p / 3.0, p / 3.0, m / 3.0, m / 3.0, 0.0};
}

/// Orbit stratum of a qutrit state: orbit dimension, stability group and the
/// location of its invariant point in the region triangle.
struct StratumLabel {
  int orbit_dim = 0;
  std::string stability_group;
  RegionLocation location = RegionLocation::outside;
};

/// Raised when the Gram-rank and eigenvalue-multiplicity routes disagree on
/// the orbit dimension — a tolerance pathology, not a silent preference.
struct StratumConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Classifies a physical qutrit state into the stratum table:
/// distinct spectrum -> dim 6, Cartan stability; one double eigenvalue ->
/// dim 4, U(2)xU(1); triple -> dim 0, U(3). The Gram rank is recomputed and
/// must match the multiplicity-based dimension.
inline StratumLabel stratum_classify(const Eigen::MatrixXcd& rho,
                                     const SuBasis& basis,
                                     double gap_tol = 1e-8,
                                     double rank_tol = 1e-8,
                                     double region_tol = 1e-9) {
  if (basis.dim != 3 || rho.rows() != 3 || rho.cols() != 3) {
    throw std::invalid_argument("stratum_classify: qutrit state required");
  }
  const Eigen::VectorXd x = eigenvalues_desc(rho);
  const double gap_band = gap_tol * (1.0 + x[0]);
  const bool g01 = (x[0] - x[1]) <= gap_band;
  const bool g12 = (x[1] - x[2]) <= gap_band;

  StratumLabel label;
  int mult_dim = 0;
  if (g01 && g12) {
    mult_dim = 0;
    label.stability_group = "U(3)";
  } else if (g01 || g12) {
    mult_dim = 4;
    label.stability_group = "U(2)⊗U(1)";
  } else {
    mult_dim = 6;
    label.stability_group = "U(1)⊗U(1)⊗U(1)";
  }
  label.orbit_dim = mult_dim;

  const int rank = tangent_gram_direct(rho, basis, rank_tol).rank;
  if (rank != mult_dim) {
    throw StratumConsistencyError(
        "stratum_classify: Gram rank " + std::to_string(rank) +
        " disagrees with multiplicity-based orbit dimension " +
        std::to_string(mult_dim));
  }

  const Eigen::VectorXd t = power_sums(x, 3);
  label.location = qutrit_region(t[1], t[2], region_tol).location;
  return label;
}

}  // namespace qorbit

#endif  // QORBIT_STRATA_HPP
