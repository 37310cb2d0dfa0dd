#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "qorbit/density.hpp"
#include "qorbit/matrix_io.hpp"
#include "qorbit/report.hpp"

using namespace qorbit;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name)
      : path(std::filesystem::temp_directory_path() / name) {}
  ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
  void write(const std::string& text) {
    std::ofstream out(path);
    out << text;
  }
};

}  // namespace

TEST_CASE("matrix file roundtrip is bit exact") {
  TempFile f("qorbit_io_roundtrip.json");
  const Eigen::MatrixXcd rho = random_density(4, 3, 2024);
  write_density_file(f.path, rho);
  const Eigen::MatrixXcd back = read_density_file(f.path);
  REQUIRE(back.rows() == 4);
  CHECK((rho - back).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("real-number entries are accepted") {
  TempFile f("qorbit_io_real.json");
  f.write(R"({"dim": 2, "entries": [[0.5, 0], [0, 0.5]]})");
  const Eigen::MatrixXcd m = read_density_file(f.path);
  CHECK(m(0, 0) == Complex(0.5, 0.0));
  CHECK(m(1, 0) == Complex(0.0, 0.0));
}

TEST_CASE("malformed JSON reports the parse position") {
  TempFile f("qorbit_io_bad.json");
  f.write("{\"dim\": 3,\n  \"entries\": [[1, 2,]]}");
  try {
    read_density_file(f.path);
    FAIL("expected MatrixFormatError");
  } catch (const MatrixFormatError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("line") != std::string::npos);
    CHECK(msg.find("column") != std::string::npos);
  }
}

TEST_CASE("shape and key errors are rejected") {
  TempFile f("qorbit_io_shape.json");
  f.write(R"({"dim": 3, "entries": [[1, 0, 0], [0, 0, 0]]})");
  CHECK_THROWS_AS(read_density_file(f.path), MatrixFormatError);

  f.write(R"({"entries": [[1]]})");
  CHECK_THROWS_AS(read_density_file(f.path), MatrixFormatError);

  f.write(R"({"dim": 1, "entries": [[1]]})");
  CHECK_THROWS_AS(read_density_file(f.path), MatrixFormatError);

  f.write(R"({"dim": 2, "entries": [[[0,0],[0,0]], [[0,0], "x"]]})");
  CHECK_THROWS_AS(read_density_file(f.path), MatrixFormatError);

  CHECK_THROWS_AS(read_density_file("/nonexistent/qorbit.json"),
                  MatrixFormatError);
}

TEST_CASE("analyze report: qutrit sections") {
  const AnalysisReport rep = analyze(maximally_mixed(3));
  CHECK(rep.dim == 3);
  CHECK(rep.validity.physical());
  REQUIRE(rep.region.has_value());
  CHECK(rep.region->location == RegionLocation::vertex_a);
  REQUIRE(rep.stratum.has_value());
  CHECK(rep.stratum->orbit_dim == 0);
  CHECK(rep.stratum->stability_group == "U(3)");
  CHECK_FALSE(rep.casimirs.has_value());
  CHECK_FALSE(rep.ps_values.has_value());
  CHECK(exit_code_for(rep) == 0);

  const std::string text = render_text(rep);
  CHECK(text.find("vertex_A") != std::string::npos);
  CHECK(text.find("U(3)") != std::string::npos);
  CHECK(text.find("casimirs") == std::string::npos);
}

TEST_CASE("analyze report: qudit sections") {
  const AnalysisReport rep = analyze(maximally_mixed(4));
  CHECK(rep.dim == 4);
  REQUIRE(rep.casimirs.has_value());
  CHECK(rep.casimirs->c2 == doctest::Approx(0.0).epsilon(1e-14));
  REQUIRE(rep.ps_values.has_value());
  CHECK_FALSE(rep.region.has_value());
  CHECK_FALSE(rep.stratum.has_value());
}

TEST_CASE("analyze report: unphysical input still reports") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
  m(0, 0) = 0.5;
  m(1, 1) = 0.4;  // trace 0.9
  const AnalysisReport rep = analyze(m);
  CHECK_FALSE(rep.validity.unit_trace);
  CHECK(exit_code_for(rep) == 2);
  CHECK_FALSE(rep.region.has_value());
  CHECK_FALSE(rep.stratum.has_value());

  m(2, 2) = Complex(0.1, 0.0);
  m(0, 1) = Complex(0.0, 0.7);
  m(1, 0) = Complex(0.0, 0.7);  // not Hermitian
  const AnalysisReport rep2 = analyze(m);
  CHECK_FALSE(rep2.validity.hermitian);
  CHECK(exit_code_for(rep2) == 2);
}

TEST_CASE("pure qutrit analyzes to vertex B") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
  m(0, 0) = 1.0;
  const AnalysisReport rep = analyze(m);
  CHECK(rep.t[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rep.t[2] == doctest::Approx(1.0).epsilon(1e-14));
  REQUIRE(rep.region.has_value());
  CHECK(rep.region->location == RegionLocation::vertex_b);
}

TEST_CASE("render_json emits parseable structure") {
  const std::string js = render_json(analyze(maximally_mixed(3)));
  CHECK(js.find("\"stratum\"") != std::string::npos);
  CHECK(js.find("\"vertex_A\"") != std::string::npos);
}
