#include "hdcov/csv_io.hpp"

#include "hdcov/error.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace hdcov {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_field(const std::string& raw, std::size_t line_no) {
    const std::string field = trim(raw);
    if (field.empty()) {
        throw DataError("line " + std::to_string(line_no) + ": empty field");
    }
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(field.c_str(), &end);
    if (end != field.c_str() + field.size() || errno == ERANGE) {
        throw DataError("line " + std::to_string(line_no) + ": cannot parse '" + field + "' as a number");
    }
    return v;
}

}  // namespace

Eigen::MatrixXd read_matrix_csv(std::istream& in, const CsvOptions& opts) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    bool header_pending = opts.has_header;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        if (header_pending) {
            header_pending = false;
            continue;
        }
        std::vector<double> row;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, opts.delimiter)) {
            row.push_back(parse_field(field, line_no));
        }
        if (!line.empty() && line.back() == opts.delimiter) {
            throw DataError("line " + std::to_string(line_no) + ": trailing delimiter");
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw DataError("line " + std::to_string(line_no) + ": expected " + std::to_string(rows.front().size()) +
                            " fields, found " + std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw DataError("no data rows");
    }
    const auto r = static_cast<Eigen::Index>(rows.size());
    const auto c = static_cast<Eigen::Index>(rows.front().size());
    Eigen::MatrixXd m(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
        for (Eigen::Index j = 0; j < c; ++j) {
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    if (opts.transpose) {
        return m.transpose();
    }
    return m;
}

Eigen::MatrixXd read_matrix_csv_file(const std::string& path, const CsvOptions& opts) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open '" + path + "'");
    }
    try {
        return read_matrix_csv(in, opts);
    } catch (const DataError& e) {
        throw DataError(path + ": " + e.what());
    }
}

}  // namespace hdcov
