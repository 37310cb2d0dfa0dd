#include "qorbit/matrix_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>

#include "qorbit/density.hpp"

namespace qorbit {

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Eigen::MatrixXcd read_density_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw MatrixFormatError("cannot open matrix file: " + path.string());
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    // e.what() carries the line/column position of the failure
    throw MatrixFormatError(path.string() + ": " + e.what());
  }

  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("entries")) {
    throw MatrixFormatError(path.string() +
                            ": document must carry \"dim\" and \"entries\"");
  }
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long>() < 2) {
    throw MatrixFormatError(path.string() + ": \"dim\" must be an integer >= 2");
  }
  const int d = doc["dim"].get<int>();
  const auto& rows = doc["entries"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != d) {
    throw MatrixFormatError(path.string() + ": \"entries\" must hold " +
                            std::to_string(d) + " rows");
  }
  Eigen::MatrixXcd m(d, d);
  for (int i = 0; i < d; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != d) {
      throw MatrixFormatError(path.string() + ": row " + std::to_string(i) +
                              " must hold " + std::to_string(d) + " entries");
    }
    for (int j = 0; j < d; ++j) {
      const auto& cell = row[j];
      if (cell.is_number()) {
        m(i, j) = Complex(cell.get<double>(), 0.0);
      } else if (cell.is_array() && cell.size() == 2 &&
                 cell[0].is_number() && cell[1].is_number()) {
        m(i, j) = Complex(cell[0].get<double>(), cell[1].get<double>());
      } else {
        throw MatrixFormatError(path.string() + ": entry (" +
                                std::to_string(i) + "," + std::to_string(j) +
                                ") must be [re, im] or a number");
      }
    }
  }
  return m;
}

void write_density_file(const std::filesystem::path& path,
                        const Eigen::MatrixXcd& m) {
  std::ofstream out(path);
  if (!out) {
    throw MatrixFormatError("cannot write matrix file: " + path.string());
  }
  const int d = static_cast<int>(m.rows());
  out << "{\"dim\": " << d << ", \"entries\": [\n";
  for (int i = 0; i < d; ++i) {
    out << "  [";
    for (int j = 0; j < static_cast<int>(m.cols()); ++j) {
      out << "[" << format_full(m(i, j).real()) << ", "
          << format_full(m(i, j).imag()) << "]";
      if (j + 1 < m.cols()) out << ", ";
    }
    out << "]" << (i + 1 < d ? "," : "") << "\n";
  }
  out << "]}\n";
}

}  // namespace qorbit
