#ifndef QORBIT_BLOCH_HPP
#define QORBIT_BLOCH_HPP

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "qorbit/su_basis.hpp"

namespace qorbit {

/// Normalization of the Bloch expansion rho = (I + c_d xi.g) / d.
/// c_3 = sqrt(3), c_4 = sqrt(6); pure states satisfy |xi| = 1 for every d.
inline double bloch_factor(int d) {
  return std::sqrt(d * (d - 1) / 2.0);
}

/// Hermitian unit-trace matrix for a Bloch vector. Positivity is not
/// guaranteed; validate() is the separate check for that.
inline Eigen::MatrixXcd bloch_decode(const Eigen::VectorXd& xi,
                                     const SuBasis& basis) {
  const int d = basis.dim;
  if (xi.size() != basis.algebra_dim()) {
    throw std::invalid_argument("bloch_decode: coords length must be d^2 - 1");
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d);
  const double c = bloch_factor(d);
  for (int i = 0; i < xi.size(); ++i) {
    if (xi[i] != 0.0) m += (c * xi[i]) * basis.generators[i];
  }
  return m / static_cast<double>(d);
}

/// Bloch coordinates of a (trace-1 Hermitian) matrix: xi_i proportional to
/// tr(m g_i). Inverse of bloch_decode on trace-1 Hermitian inputs.
inline Eigen::VectorXd bloch_encode(const Eigen::MatrixXcd& m,
                                    const SuBasis& basis) {
  const int d = basis.dim;
  if (m.rows() != d || m.cols() != d) {
    throw std::invalid_argument("bloch_encode: matrix dim mismatch with basis");
  }
  const double scale = d / (2.0 * bloch_factor(d));
  Eigen::VectorXd xi(basis.algebra_dim());
  for (int i = 0; i < xi.size(); ++i) {
    xi[i] = scale * (m * basis.generators[i]).trace().real();
  }
  return xi;
}

}  // namespace qorbit

#endif  // QORBIT_BLOCH_HPP
