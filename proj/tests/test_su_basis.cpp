#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "qorbit/bloch.hpp"
#include "qorbit/rng.hpp"
#include "qorbit/su_basis.hpp"

using namespace qorbit;

namespace {

// The d = 3 generator list, written out entry by entry.
std::vector<Eigen::MatrixXcd> gell_mann_reference() {
  const Complex I(0.0, 1.0);
  std::vector<Eigen::MatrixXcd> g(8, Eigen::MatrixXcd::Zero(3, 3));
  g[0](0, 1) = 1.0; g[0](1, 0) = 1.0;
  g[1](0, 1) = -I;  g[1](1, 0) = I;
  g[2](0, 0) = 1.0; g[2](1, 1) = -1.0;
  g[3](0, 2) = 1.0; g[3](2, 0) = 1.0;
  g[4](0, 2) = -I;  g[4](2, 0) = I;
  g[5](1, 2) = 1.0; g[5](2, 1) = 1.0;
  g[6](1, 2) = -I;  g[6](2, 1) = I;
  const double r3 = 1.0 / std::sqrt(3.0);
  g[7](0, 0) = r3;  g[7](1, 1) = r3; g[7](2, 2) = -2.0 * r3;
  return g;
}

}  // namespace

TEST_CASE("su_basis(3) reproduces the Gell-Mann matrices in order") {
  const SuBasis basis = su_basis(3);
  REQUIRE(basis.generators.size() == 8);
  const auto ref = gell_mann_reference();
  for (int i = 0; i < 8; ++i) {
    CHECK((basis.generators[i] - ref[i]).cwiseAbs().maxCoeff() <= 1e-15);
  }
}

TEST_CASE("trace orthonormality tr(g_i g_j) = 2 delta_ij") {
  for (int d : {2, 3, 4}) {
    const SuBasis basis = su_basis(d);
    const int n = basis.algebra_dim();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Complex tr = (basis.generators[i] * basis.generators[j]).trace();
        CHECK(std::abs(tr - Complex(i == j ? 2.0 : 0.0)) <= 1e-14);
      }
    }
  }
}

TEST_CASE("su(3) structure constants match the known nonzero list") {
  const SuBasis basis = su_basis(3);
  const auto& f = basis.f_tensor;
  const double h = 0.5;
  const double r = std::sqrt(3.0) / 2.0;
  // canonical triples i < j < k (0-based indices)
  const std::map<std::array<int, 3>, double> expected = {
      {{0, 1, 2}, 1.0}, {{0, 3, 6}, h},  {{1, 3, 5}, h},
      {{1, 4, 6}, h},   {{2, 3, 4}, h},  {{0, 4, 5}, -h},
      {{2, 5, 6}, -h},  {{3, 4, 7}, r},  {{5, 6, 7}, r}};
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      for (int k = j + 1; k < 8; ++k) {
        const auto it = expected.find({i, j, k});
        const double want = (it == expected.end()) ? 0.0 : it->second;
        CHECK(f(i, j, k) == doctest::Approx(want).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("su(2): f is the Levi-Civita symbol, d vanishes") {
  const SuBasis basis = su_basis(2);
  CHECK(basis.f_tensor(0, 1, 2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(basis.f_tensor(1, 0, 2) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(basis.f_tensor(2, 0, 1) == doctest::Approx(1.0).epsilon(1e-15));
  for (const auto& e : basis.d_tensor.nonzeros) {
    CHECK(std::abs(e.value) <= 1e-14);
  }
  CHECK(basis.d_tensor.nonzeros.empty());
}

TEST_CASE("f antisymmetric, d symmetric, both real and index-consistent") {
  for (int d : {3, 4}) {
    const SuBasis basis = su_basis(d);
    const int n = basis.algebra_dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const double f = basis.f_tensor(i, j, k);
          CHECK(basis.f_tensor(j, i, k) == doctest::Approx(-f).epsilon(1e-14));
          CHECK(basis.f_tensor(k, j, i) == doctest::Approx(-f).epsilon(1e-14));
          CHECK(basis.f_tensor(i, k, j) == doctest::Approx(-f).epsilon(1e-14));
          const double dv = basis.d_tensor(i, j, k);
          CHECK(basis.d_tensor(j, i, k) == doctest::Approx(dv).epsilon(1e-14));
          CHECK(basis.d_tensor(k, j, i) == doctest::Approx(dv).epsilon(1e-14));
        }
  }
}

TEST_CASE("commutator reconstruction [g_i, g_j] = 2i f_ijk g_k") {
  const Complex I(0.0, 1.0);
  for (int d : {2, 3, 4}) {
    const SuBasis basis = su_basis(d);
    const int n = basis.algebra_dim();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(d, d);
        for (int k = 0; k < n; ++k) {
          rhs += 2.0 * I * basis.f_tensor(i, j, k) * basis.generators[k];
        }
        const Eigen::MatrixXcd lhs =
            basis.generators[i] * basis.generators[j] -
            basis.generators[j] * basis.generators[i];
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12);
      }
    }
  }
}

TEST_CASE("product reconstruction g_i g_j = (2/d) delta_ij I + (d+if) g") {
  const Complex I(0.0, 1.0);
  for (int d : {2, 3, 4}) {
    const SuBasis basis = su_basis(d);
    const int n = basis.algebra_dim();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(d, d);
        if (i == j) {
          rhs += (2.0 / d) * Eigen::MatrixXcd::Identity(d, d);
        }
        for (int k = 0; k < n; ++k) {
          const Complex coeff =
              basis.d_tensor(i, j, k) + I * basis.f_tensor(i, j, k);
          rhs += coeff * basis.generators[k];
        }
        const Eigen::MatrixXcd lhs = basis.generators[i] * basis.generators[j];
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12);
      }
    }
  }
}

TEST_CASE("bloch_decode anchors") {
  const SuBasis b3 = su_basis(3);
  CHECK((bloch_decode(Eigen::VectorXd::Zero(8), b3) - maximally_mixed(3))
            .cwiseAbs()
            .maxCoeff() <= 1e-15);

  Eigen::VectorXd xi = Eigen::VectorXd::Zero(8);
  xi[7] = 0.5;
  Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(3, 3);
  want(0, 0) = 0.5;
  want(1, 1) = 0.5;
  CHECK((bloch_decode(xi, b3) - want).cwiseAbs().maxCoeff() <= 1e-15);

  const SuBasis b4 = su_basis(4);
  CHECK((bloch_decode(Eigen::VectorXd::Zero(15), b4) - maximally_mixed(4))
            .cwiseAbs()
            .maxCoeff() <= 1e-15);
}

TEST_CASE("bloch encode/decode roundtrips") {
  for (int d : {2, 3, 4}) {
    const SuBasis basis = su_basis(d);
    const int n = basis.algebra_dim();
    GaussianStream g(stream_seed(11, d));
    for (int rep = 0; rep < 50; ++rep) {
      Eigen::VectorXd xi(n);
      for (int i = 0; i < n; ++i) xi[i] = g();
      const Eigen::VectorXd back = bloch_encode(bloch_decode(xi, basis), basis);
      CHECK((xi - back).cwiseAbs().maxCoeff() <= 1e-12);
    }
    for (int rep = 0; rep < 50; ++rep) {
      const Eigen::MatrixXcd rho =
          random_density(d, d, stream_seed(13, d * 100 + rep));
      const Eigen::MatrixXcd back =
          bloch_decode(bloch_encode(rho, basis), basis);
      CHECK((rho - back).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("bloch: wrong coordinate length rejected") {
  const SuBasis basis = su_basis(3);
  CHECK_THROWS_AS(bloch_decode(Eigen::VectorXd::Zero(7), basis),
                  std::invalid_argument);
}
