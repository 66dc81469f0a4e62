#pragma once

#include <Eigen/Dense>

#include <istream>
#include <string>

namespace hdcov {

struct CsvOptions {
    char delimiter = ',';
    bool has_header = false;
    /// Input rows are variables instead of observations.
    bool transpose = false;
};

/// Reads a dense numeric matrix. Blank lines are skipped; every row must have
/// the same number of fields. Throws DataError on malformed input.
Eigen::MatrixXd read_matrix_csv(std::istream& in, const CsvOptions& opts = {});
Eigen::MatrixXd read_matrix_csv_file(const std::string& path, const CsvOptions& opts = {});

}  // namespace hdcov
