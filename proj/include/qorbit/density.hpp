#ifndef QORBIT_DENSITY_HPP
#define QORBIT_DENSITY_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

#include "qorbit/rng.hpp"

namespace qorbit {

using Complex = std::complex<double>;

/// Per-property validity flags of a candidate density matrix.
/// Each flag is evaluated independently; a non-Hermitian input still gets a
/// spectrum report (computed from its Hermitian part).
struct ValidityReport {
  int dim = 0;
  bool hermitian = false;
  bool unit_trace = false;
  bool psd = false;
  double min_eigenvalue = 0.0;
  int rank = 0;

  bool physical() const { return hermitian && unit_trace && psd; }
};

inline void require_square(const Eigen::MatrixXcd& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() < 2) {
    throw std::invalid_argument(std::string(what) +
                                ": expected a square matrix with dim >= 2");
  }
}

/// Real eigenvalues of a Hermitian matrix, sorted descending.
/// Rejects inputs whose anti-Hermitian part exceeds tol * (1 + max|entry|).
inline Eigen::VectorXd eigenvalues_desc(const Eigen::MatrixXcd& m,
                                        double tol = 1e-9) {
  require_square(m, "eigenvalues_desc");
  const double scale = m.cwiseAbs().maxCoeff();
  const double herm_err = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > tol * (1.0 + scale)) {
    throw std::invalid_argument("eigenvalues_desc: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      ((m + m.adjoint()) / 2.0).eval(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().reverse();
}

/// Checks Hermiticity, unit trace and positive semi-definiteness of m,
/// each against relative tolerance tol * (1 + scale).
inline ValidityReport validate(const Eigen::MatrixXcd& m, double tol = 1e-9) {
  require_square(m, "validate");
  ValidityReport rep;
  rep.dim = static_cast<int>(m.rows());

  const double scale = m.cwiseAbs().maxCoeff();
  rep.hermitian = (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * (1.0 + scale);

  const Complex tr = m.trace();
  rep.unit_trace = std::abs(tr - Complex(1.0, 0.0)) <= tol * (1.0 + std::abs(tr));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      ((m + m.adjoint()) / 2.0).eval(), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  rep.min_eigenvalue = ev.minCoeff();
  const double spectral_norm = ev.cwiseAbs().maxCoeff();
  rep.psd = rep.min_eigenvalue >= -tol * (1.0 + spectral_norm);
  const double rank_cut = tol * (1.0 + ev.maxCoeff());
  rep.rank = static_cast<int>((ev.array() > rank_cut).count());
  return rep;
}

/// Random density matrix of the given rank: G G^dag / tr(G G^dag) with G a
/// d x rank matrix of independent complex Gaussians drawn from seed.
/// Bit-identical output for equal (d, rank, seed).
inline Eigen::MatrixXcd random_density(int d, int rank, std::uint64_t seed) {
  if (d < 1 || rank < 1 || rank > d) {
    throw std::invalid_argument("random_density: need 1 <= rank <= dim");
  }
  GaussianStream g(seed);
  Eigen::MatrixXcd ginibre(d, rank);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < rank; ++j) {
      const double re = g();
      const double im = g();
      ginibre(i, j) = Complex(re, im);
    }
  }
  Eigen::MatrixXcd rho = ginibre * ginibre.adjoint();
  rho = ((rho + rho.adjoint()) / 2.0).eval();  // kill rounding asymmetry
  rho /= rho.trace().real();
  return rho;
}

/// Haar-random unitary: QR of a complex Ginibre matrix with the phase fix
/// U = Q diag(r_jj / |r_jj|).
inline Eigen::MatrixXcd random_unitary(int d, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("random_unitary: dim >= 1 required");
  GaussianStream g(seed);
  Eigen::MatrixXcd ginibre(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const double re = g();
      const double im = g();
      ginibre(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    q.col(j) *= (std::abs(rjj) > 0.0) ? rjj / std::abs(rjj) : Complex(1.0, 0.0);
  }
  return q;
}

inline Eigen::MatrixXcd maximally_mixed(int d) {
  return Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d);
}

}  // namespace qorbit

#endif  // QORBIT_DENSITY_HPP
