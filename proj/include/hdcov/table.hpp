#pragma once

#include "hdcov/sim.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace hdcov {

/// Published size/power experiments:
///   table1        one-sample, n = 500, Gaussian, power under diag(1, 0.05, ...)
///   table2_upper  two-sample, y1 = y2 = 0.05, power under Sigma1 Sigma2^{-1} = diag(3, 1, ...)
///   table2_lower  two-sample, y1 = 0.05, y2 = 0.1, same alternative
///   table3        two-sample pseudo-LRT, y1 = 0.1, y2 = 0.05, scaled t(5), beta = 6, size only
enum class TableId { table1, table2_upper, table2_lower, table3 };

std::string_view to_string(TableId t);
TableId parse_table_id(std::string_view s);

/// Replication count the experiment was published with (10,000 or 1,000).
long long base_replications(TableId t);

struct TableRowSpec {
    SimulationConfig size;
    std::optional<SimulationConfig> power;
};

struct TableRow {
    SimulationReport size;
    std::optional<SimulationReport> power;
};

/// Row configurations with replications = round(scale * base count). Each
/// row and each of its size/power runs uses its own block of stream ids.
/// Throws DomainError unless 0 < scale <= 1 and scale * 10000 >= 500.
std::vector<TableRowSpec> table_layout(TableId table, double scale, std::uint64_t seed, Tail tail = Tail::two_sided);

TableRow run_table_row(const TableRowSpec& spec);

std::vector<TableRow> reproduce_table(TableId table, double scale, std::uint64_t seed, Tail tail = Tail::two_sided,
                                      int workers = 0);

}  // namespace hdcov
