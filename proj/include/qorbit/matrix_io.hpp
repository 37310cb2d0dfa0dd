#ifndef QORBIT_MATRIX_IO_HPP
#define QORBIT_MATRIX_IO_HPP

#include <Eigen/Dense>
#include <filesystem>
#include <stdexcept>
#include <string>

namespace qorbit {

/// Malformed matrix file: bad JSON (with line/column diagnostics from the
/// parser), missing keys, or shape mismatches.
struct MatrixFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reads {"dim": d, "entries": [[[re, im], ...], ...]} with row-major
/// entries. Bare numbers are accepted for real entries.
Eigen::MatrixXcd read_density_file(const std::filesystem::path& path);

/// Writes the same document with 17 significant digits per component.
void write_density_file(const std::filesystem::path& path,
                        const Eigen::MatrixXcd& m);

/// Formats a double with 17 significant digits (round-trip exact).
std::string format_full(double v);

}  // namespace qorbit

#endif  // QORBIT_MATRIX_IO_HPP
