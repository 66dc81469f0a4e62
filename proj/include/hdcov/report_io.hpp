#pragma once

#include "hdcov/lr_tests.hpp"
#include "hdcov/sim.hpp"
#include "hdcov/table.hpp"

#include <json.hpp>

#include <ostream>
#include <vector>

namespace hdcov {

nlohmann::json to_json(const CorrectionConstants& k);
nlohmann::json to_json(const TestResult& r);
nlohmann::json to_json(const SimulationReport& r);
nlohmann::json to_json(TableId table, const std::vector<TableRow>& rows);

TestResult test_result_from_json(const nlohmann::json& j);

/// Key/value CSV (field,value) of a single test result.
void write_test_result_csv(std::ostream& out, const TestResult& r);

/// Header of the simulation CSV:
/// scenario,p,n1,n2,generator,beta,alpha,method,rate,mc_se,replications,seed
void write_simulation_csv_header(std::ostream& out);

/// Two rows per report, one for the corrected and one for the classical test.
void write_simulation_csv_rows(std::ostream& out, const SimulationReport& r);

/// One row per table line: dimensions, CLRT size / difference from alpha /
/// power and LRT size / power, each rate followed by its MC standard error.
void write_table_csv(std::ostream& out, TableId table, const std::vector<TableRow>& rows);

}  // namespace hdcov
