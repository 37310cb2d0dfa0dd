#ifndef QORBIT_SU_BASIS_HPP
#define QORBIT_SU_BASIS_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

#include "qorbit/density.hpp"

namespace qorbit {

/// Dense rank-3 tensor with a precomputed list of nonzero entries.
/// Used for the antisymmetric f and symmetric d structure tensors of su(d);
/// both are sparse, and contractions iterate the nonzero list.
struct StructureTensor {
  struct Entry {
    int i, j, k;
    double value;
  };

  int n = 0;
  std::vector<double> dense;  // n^3, index (i*n + j)*n + k
  std::vector<Entry> nonzeros;

  double operator()(int i, int j, int k) const {
    return dense[static_cast<std::size_t>((i * n + j) * n + k)];
  }

  void set(int i, int j, int k, double v) {
    dense[static_cast<std::size_t>((i * n + j) * n + k)] = v;
  }

  void collect_nonzeros() {
    nonzeros.clear();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const double v = (*this)(i, j, k);
          if (v != 0.0) nonzeros.push_back({i, j, k, v});
        }
  }
};

/// Hermitian generator basis of su(d) with tr(g_i g_j) = 2 delta_ij, plus the
/// antisymmetric f and symmetric d structure tensors:
///   f_ijk = tr([g_i, g_j] g_k) / (4i),   d_ijk = tr({g_i, g_j} g_k) / 4.
struct SuBasis {
  int dim = 0;
  std::vector<Eigen::MatrixXcd> generators;
  StructureTensor f_tensor;
  StructureTensor d_tensor;

  int algebra_dim() const { return dim * dim - 1; }
};

/// Builds the su(d) basis in the nested ordering: the su(k) generators are a
/// prefix of the su(k+1) list, followed by the symmetric/antisymmetric pair
/// for each (j, k) with j < k and the k-th diagonal generator. For d = 3 this
/// is the Gell-Mann list lambda_1..lambda_8; for d = 2 the Pauli matrices.
inline SuBasis su_basis(int d) {
  if (d < 2) throw std::invalid_argument("su_basis: dim >= 2 required");
  SuBasis basis;
  basis.dim = d;
  const int n = d * d - 1;
  basis.generators.reserve(n);

  const Complex I(0.0, 1.0);
  for (int k = 1; k < d; ++k) {
    for (int j = 0; j < k; ++j) {
      Eigen::MatrixXcd sym = Eigen::MatrixXcd::Zero(d, d);
      sym(j, k) = 1.0;
      sym(k, j) = 1.0;
      basis.generators.push_back(sym);

      Eigen::MatrixXcd asym = Eigen::MatrixXcd::Zero(d, d);
      asym(j, k) = -I;
      asym(k, j) = I;
      basis.generators.push_back(asym);
    }
    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(d, d);
    const double norm = std::sqrt(2.0 / (static_cast<double>(k) * (k + 1)));
    for (int j = 0; j < k; ++j) diag(j, j) = norm;
    diag(k, k) = -norm * k;
    basis.generators.push_back(diag);
  }

  basis.f_tensor.n = n;
  basis.f_tensor.dense.assign(static_cast<std::size_t>(n) * n * n, 0.0);
  basis.d_tensor.n = n;
  basis.d_tensor.dense.assign(static_cast<std::size_t>(n) * n * n, 0.0);

  // Entries smaller than the rounding dust of the defining traces are snapped
  // to exact zero so the nonzero lists carry only true structure constants.
  constexpr double kDust = 1e-13;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const Eigen::MatrixXcd prod = basis.generators[i] * basis.generators[j];
      const Eigen::MatrixXcd comm = prod - basis.generators[j] * basis.generators[i];
      const Eigen::MatrixXcd anti = prod + basis.generators[j] * basis.generators[i];
      for (int k = 0; k < n; ++k) {
        double fv = ((comm * basis.generators[k]).trace() / (4.0 * I)).real();
        double dv = (anti * basis.generators[k]).trace().real() / 4.0;
        if (std::abs(fv) < kDust) fv = 0.0;
        if (std::abs(dv) < kDust) dv = 0.0;
        basis.f_tensor.set(i, j, k, fv);
        basis.f_tensor.set(j, i, k, -fv);
        basis.d_tensor.set(i, j, k, dv);
        basis.d_tensor.set(j, i, k, dv);
      }
    }
  }
  basis.f_tensor.collect_nonzeros();
  basis.d_tensor.collect_nonzeros();
  return basis;
}

}  // namespace qorbit

#endif  // QORBIT_SU_BASIS_HPP
