#ifndef QORBIT_INVARIANTS_HPP
#define QORBIT_INVARIANTS_HPP

#include <Eigen/Dense>
#include <array>
#include <stdexcept>

#include "qorbit/bloch.hpp"
#include "qorbit/density.hpp"

namespace qorbit {

/// Power sums t_k = sum_i x_i^k for k = 1..kmax.
template <typename Derived>
Eigen::Vector<typename Derived::Scalar, Eigen::Dynamic> power_sums(
    const Eigen::MatrixBase<Derived>& x, int kmax) {
  using Scalar = typename Derived::Scalar;
  if (kmax < 1) throw std::invalid_argument("power_sums: kmax >= 1 required");
  Eigen::Vector<Scalar, Eigen::Dynamic> t(kmax);
  Eigen::Array<Scalar, Eigen::Dynamic, 1> p = x.derived().array();
  t[0] = p.sum();
  for (int k = 1; k < kmax; ++k) {
    p *= x.derived().array();
    t[k] = p.sum();
  }
  return t;
}

/// Trace invariants t_k = tr(rho^k), k = 1..kmax, computed as power sums of
/// the spectrum (one eigensolve instead of repeated matrix powers).
inline Eigen::VectorXd trace_invariants(const Eigen::MatrixXcd& rho, int kmax,
                                        double tol = 1e-9) {
  return power_sums(eigenvalues_desc(rho, tol), kmax);
}

/// Elementary symmetric polynomials e_1..e_d from power sums t_1..t_d via the
/// Newton identities k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} t_i. These are
/// the coefficients S_k of the characteristic polynomial
/// x^d - S_1 x^(d-1) + S_2 x^(d-2) - ... + (-1)^d S_d.
template <typename Derived>
Eigen::Vector<typename Derived::Scalar, Eigen::Dynamic> newton_t_to_S(
    const Eigen::MatrixBase<Derived>& t) {
  using Scalar = typename Derived::Scalar;
  const int d = static_cast<int>(t.size());
  Eigen::Vector<Scalar, Eigen::Dynamic> e(d + 1);
  e[0] = Scalar(1);
  for (int k = 1; k <= d; ++k) {
    Scalar acc(0);
    Scalar sign(1);
    for (int i = 1; i <= k; ++i) {
      acc += sign * e[k - i] * t[i - 1];
      sign = -sign;
    }
    e[k] = acc / Scalar(k);
  }
  return e.tail(d);
}

/// Power sums t_1..t_kmax reconstructed from elementary symmetric polynomials
/// (e_k = 0 for k beyond S.size()). Inverse direction of the Newton identities.
template <typename Derived>
Eigen::Vector<typename Derived::Scalar, Eigen::Dynamic>
elementary_to_power_sums(const Eigen::MatrixBase<Derived>& S, int kmax) {
  using Scalar = typename Derived::Scalar;
  if (kmax < 1) {
    throw std::invalid_argument("elementary_to_power_sums: kmax >= 1 required");
  }
  const int d = static_cast<int>(S.size());
  Eigen::Vector<Scalar, Eigen::Dynamic> t(kmax);
  for (int k = 1; k <= kmax; ++k) {
    Scalar acc(0);
    Scalar sign(1);
    const int imax = (k - 1 < d) ? k - 1 : d;
    for (int i = 1; i <= imax; ++i) {
      acc += sign * S[i - 1] * t[k - i - 1];
      sign = -sign;
    }
    if (k <= d) acc += sign * Scalar(k) * S[k - 1];
    t[k - 1] = acc;
  }
  return t;
}

/// Traces t_{d+1}..t_kmax determined by t_1..t_d through the characteristic
/// polynomial: t_k = sum_{i=1..d} (-1)^(i-1) S_i t_{k-i}.
inline Eigen::VectorXd extend_traces(const Eigen::VectorXd& t, int kmax) {
  const int d = static_cast<int>(t.size());
  if (kmax <= d) {
    throw std::invalid_argument("extend_traces: kmax must exceed t.size()");
  }
  const Eigen::VectorXd S = newton_t_to_S(t);
  Eigen::VectorXd full(kmax);
  full.head(d) = t;
  for (int k = d + 1; k <= kmax; ++k) {
    double acc = 0.0;
    double sign = 1.0;
    for (int i = 1; i <= d; ++i) {
      acc += sign * S[i - 1] * full[k - i - 1];
      sign = -sign;
    }
    full[k - 1] = acc;
  }
  return full.tail(kmax - d);
}

/// prod_{i<j} (x_i - x_j)^2 — the discriminant of the polynomial with roots x.
template <typename Derived>
typename Derived::Scalar discriminant(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  Scalar acc(1);
  for (int i = 0; i < x.size(); ++i) {
    for (int j = i + 1; j < x.size(); ++j) {
      const Scalar diff = x[i] - x[j];
      acc *= diff * diff;
    }
  }
  return acc;
}

/// Degree-2,3,4 invariant contractions of a d = 4 Bloch vector.
struct CasimirPoint {
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
};

/// Casimir scalars c2 = xi.xi, c3 = sqrt(3/2) d_ijk xi_i xi_j xi_k,
/// c4 = (3/2) d_ijk d_lmk xi_i xi_j xi_l xi_m, contracted over the nonzero
/// d-tensor entries.
inline CasimirPoint casimirs_d4(const Eigen::VectorXd& xi,
                                const SuBasis& basis) {
  if (basis.dim != 4 || xi.size() != 15) {
    throw std::invalid_argument("casimirs_d4: needs dim-4 basis and 15 coords");
  }
  Eigen::VectorXd w = Eigen::VectorXd::Zero(15);
  for (const auto& e : basis.d_tensor.nonzeros) {
    w[e.k] += e.value * xi[e.i] * xi[e.j];
  }
  CasimirPoint c;
  c.c2 = xi.squaredNorm();
  c.c3 = std::sqrt(1.5) * w.dot(xi);
  c.c4 = 1.5 * w.squaredNorm();
  return c;
}

/// Characteristic-polynomial coefficients of a d = 4 state from its Casimirs:
///   S2 = (3/8)(1 - c2)
///   S3 = (1/16)(1 - 3 c2 + 2 c3)
///   S4 = (1/256)((1 - 3 c2)^2 + 8 c3 - 12 c4)
inline std::array<double, 3> s_from_casimirs(const CasimirPoint& c) {
  const double s2 = (3.0 / 8.0) * (1.0 - c.c2);
  const double s3 = (1.0 / 16.0) * (1.0 - 3.0 * c.c2 + 2.0 * c.c3);
  const double u = 1.0 - 3.0 * c.c2;
  const double s4 = (1.0 / 256.0) * (u * u + 8.0 * c.c3 - 12.0 * c.c4);
  return {s2, s3, s4};
}

}  // namespace qorbit

#endif  // QORBIT_INVARIANTS_HPP
