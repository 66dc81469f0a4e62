#pragma once

#include "hdcov/lr_tests.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace hdcov {

enum class Scenario { one_sample, two_sample };
enum class Generator { gaussian, scaled_t5 };

std::string_view to_string(Scenario s);
std::string_view to_string(Generator g);
Scenario parse_scenario(std::string_view s);
Generator parse_generator(std::string_view s);

/// Covariance alternatives used for power.
///   one_sample_diag:        Sigma = diag(leading, rest, ..., rest)
///   two_sample_ratio_diag:  Sigma1 = diag(leading, rest, ..., rest), Sigma2 = I
struct AlternativeSpec {
    enum class Kind { one_sample_diag, two_sample_ratio_diag };
    Kind kind = Kind::one_sample_diag;
    double leading = 1.0;
    double rest = 1.0;
};

std::string_view to_string(AlternativeSpec::Kind k);

struct SimulationConfig {
    Scenario scenario = Scenario::one_sample;
    long long p = 0;
    long long n1 = 0;
    std::optional<long long> n2;
    long long replications = 1000;
    double alpha = 0.05;
    Generator generator = Generator::gaussian;
    std::optional<AlternativeSpec> alternative;
    std::uint64_t seed = 0;
    Tail tail = Tail::two_sided;
    /// beta handed to the corrected two-sample test; defaults to the exact
    /// value of the generator (0 Gaussian, 6 scaled t5).
    std::optional<double> beta;
    /// Replicate i draws from stream (seed, stream_base + i).
    std::uint64_t stream_base = 0;
    /// OpenMP thread count for run_simulation; 0 keeps the runtime default.
    int workers = 0;
    /// Keep per-replicate statistics and dataset digests in the report.
    bool keep_replicates = false;

    double resolved_beta() const;
    void validate() const;
};

struct MethodOutcome {
    TestMethod method = TestMethod::clrt_one;
    long long rejections = 0;
    long long replications = 0;
    double rate = 0.0;
    double mc_std_error = 0.0;  // sqrt(rate (1 - rate) / R)
};

struct ReplicateRecord {
    std::uint64_t dataset_digest = 0;
    double raw_statistic = 0.0;
    double clrt_standardized = 0.0;
    double lrt_standardized = 0.0;
    bool clrt_rejected = false;
    bool lrt_rejected = false;
};

struct SimulationReport {
    SimulationConfig config;
    MethodOutcome clrt;
    MethodOutcome lrt;
    std::vector<ReplicateRecord> replicates;  // empty unless keep_replicates
};

struct ReplicateData {
    Eigen::MatrixXd x;
    std::optional<Eigen::MatrixXd> y;
};

/// Dataset of replicate `index`, drawn from stream (seed, stream_base + index).
ReplicateData generate_replicate(const SimulationConfig& cfg, std::uint64_t index);

/// FNV-1a digest over the raw bytes of a replicate's data.
std::uint64_t dataset_digest(const ReplicateData& data);

/// Both tests on one replicate: the corrected and classical decisions share
/// the same dataset and the same raw statistic.
ReplicateRecord run_replicate(const SimulationConfig& cfg, std::uint64_t index);

/// Replicates distributed over OpenMP threads; counters are reduced in index
/// order so the report is bit-identical for any worker count.
SimulationReport run_simulation(const SimulationConfig& cfg);

/// Single-threaded reference for run_simulation.
SimulationReport run_simulation_serial(const SimulationConfig& cfg);

}  // namespace hdcov
