#include "hdcov/table.hpp"

#include "hdcov/error.hpp"

#include <array>
#include <cmath>
#include <string>

namespace hdcov {

namespace {

struct Dims {
    long long p;
    long long n1;
    long long n2;  // 0 for one-sample rows
};

constexpr std::array<Dims, 5> kTable1{{{5, 500, 0}, {10, 500, 0}, {50, 500, 0}, {100, 500, 0}, {300, 500, 0}}};
constexpr std::array<Dims, 7> kTable2Upper{{{5, 100, 100},
                                            {10, 200, 200},
                                            {20, 400, 400},
                                            {40, 800, 800},
                                            {80, 1600, 1600},
                                            {160, 3200, 3200},
                                            {320, 6400, 6400}}};
constexpr std::array<Dims, 7> kTable2Lower{{{5, 100, 50},
                                            {10, 200, 100},
                                            {20, 400, 200},
                                            {40, 800, 400},
                                            {80, 1600, 800},
                                            {160, 3200, 1600},
                                            {320, 6400, 3200}}};
// p/n1 = 0.1, p/n2 = 0.05
constexpr std::array<Dims, 6> kTable3{
    {{10, 100, 200}, {20, 200, 400}, {40, 400, 800}, {80, 800, 1600}, {160, 1600, 3200}, {320, 3200, 6400}}};

// Stream-id block per run; far larger than any replication count.
constexpr std::uint64_t kStreamBlock = 1ULL << 32;

template <std::size_t N>
std::vector<Dims> to_vector(const std::array<Dims, N>& rows) {
    return {rows.begin(), rows.end()};
}

std::vector<Dims> rows_of(TableId t) {
    switch (t) {
        case TableId::table1:
            return to_vector(kTable1);
        case TableId::table2_upper:
            return to_vector(kTable2Upper);
        case TableId::table2_lower:
            return to_vector(kTable2Lower);
        case TableId::table3:
            return to_vector(kTable3);
    }
    return {};
}

}  // namespace

std::string_view to_string(TableId t) {
    switch (t) {
        case TableId::table1:
            return "table1";
        case TableId::table2_upper:
            return "table2_upper";
        case TableId::table2_lower:
            return "table2_lower";
        case TableId::table3:
            return "table3";
    }
    return "unknown";
}

TableId parse_table_id(std::string_view s) {
    for (auto t : {TableId::table1, TableId::table2_upper, TableId::table2_lower, TableId::table3}) {
        if (s == to_string(t)) {
            return t;
        }
    }
    throw DomainError("unknown table '" + std::string(s) + "' (expected table1, table2_upper, table2_lower, table3)");
}

long long base_replications(TableId t) {
    return t == TableId::table3 ? 1000 : 10000;
}

std::vector<TableRowSpec> table_layout(TableId table, double scale, std::uint64_t seed, Tail tail) {
    if (!(scale > 0.0 && scale <= 1.0) || scale * 10000.0 < 500.0 - 1e-9) {
        throw DomainError("scale must lie in [0.05, 1], got " + std::to_string(scale));
    }
    const long long reps = std::llround(scale * static_cast<double>(base_replications(table)));
    std::vector<TableRowSpec> out;
    std::uint64_t block = 0;
    for (const Dims& d : rows_of(table)) {
        SimulationConfig size;
        size.p = d.p;
        size.n1 = d.n1;
        size.replications = reps;
        size.alpha = 0.05;
        size.seed = seed;
        size.tail = tail;
        if (d.n2 == 0) {
            size.scenario = Scenario::one_sample;
        } else {
            size.scenario = Scenario::two_sample;
            size.n2 = d.n2;
        }
        if (table == TableId::table3) {
            size.generator = Generator::scaled_t5;
            size.beta = 6.0;
        }
        size.stream_base = block++ * kStreamBlock;

        TableRowSpec spec{size, std::nullopt};
        if (table == TableId::table1) {
            SimulationConfig power = size;
            power.alternative = AlternativeSpec{AlternativeSpec::Kind::one_sample_diag, 1.0, 0.05};
            power.stream_base = block++ * kStreamBlock;
            spec.power = power;
        } else if (table != TableId::table3) {
            SimulationConfig power = size;
            power.alternative = AlternativeSpec{AlternativeSpec::Kind::two_sample_ratio_diag, 3.0, 1.0};
            power.stream_base = block++ * kStreamBlock;
            spec.power = power;
        }
        out.push_back(spec);
    }
    return out;
}

TableRow run_table_row(const TableRowSpec& spec) {
    TableRow row{run_simulation(spec.size), std::nullopt};
    if (spec.power) {
        row.power = run_simulation(*spec.power);
    }
    return row;
}

std::vector<TableRow> reproduce_table(TableId table, double scale, std::uint64_t seed, Tail tail, int workers) {
    std::vector<TableRow> rows;
    for (TableRowSpec spec : table_layout(table, scale, seed, tail)) {
        spec.size.workers = workers;
        if (spec.power) {
            spec.power->workers = workers;
        }
        rows.push_back(run_table_row(spec));
    }
    return rows;
}

}  // namespace hdcov
