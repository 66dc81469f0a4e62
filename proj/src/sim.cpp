#include "hdcov/sim.hpp"

#include "hdcov/error.hpp"
#include "hdcov/numerics.hpp"
#include "hdcov/spectral.hpp"

#include <cmath>
#include <cstring>
#include <exception>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hdcov {

std::string_view to_string(Scenario s) {
    return s == Scenario::one_sample ? "one_sample" : "two_sample";
}

std::string_view to_string(Generator g) {
    return g == Generator::gaussian ? "gaussian" : "scaled_t5";
}

std::string_view to_string(AlternativeSpec::Kind k) {
    return k == AlternativeSpec::Kind::one_sample_diag ? "one_sample_diag" : "two_sample_ratio_diag";
}

Scenario parse_scenario(std::string_view s) {
    if (s == "one_sample" || s == "one-sample") {
        return Scenario::one_sample;
    }
    if (s == "two_sample" || s == "two-sample") {
        return Scenario::two_sample;
    }
    throw DomainError("unknown scenario '" + std::string(s) + "'");
}

Generator parse_generator(std::string_view s) {
    if (s == "gaussian") {
        return Generator::gaussian;
    }
    if (s == "scaled_t5" || s == "t5") {
        return Generator::scaled_t5;
    }
    throw DomainError("unknown generator '" + std::string(s) + "'");
}

double SimulationConfig::resolved_beta() const {
    if (beta) {
        return *beta;
    }
    return generator == Generator::scaled_t5 ? 6.0 : 0.0;
}

void SimulationConfig::validate() const {
    if (replications < 1) {
        throw DomainError("replications must be >= 1");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError("alpha must lie in (0, 1)");
    }
    if (p < 1 || n1 < 2) {
        throw DomainError("need p >= 1 and n1 >= 2");
    }
    if (workers < 0) {
        throw DomainError("workers must be >= 0");
    }
    if (scenario == Scenario::one_sample) {
        if (p < 2 || p > n1 - 2) {
            throw DomainError("one-sample simulation needs 2 <= p <= n - 2");
        }
        if (alternative && alternative->kind != AlternativeSpec::Kind::one_sample_diag) {
            throw DomainError("one-sample simulation needs a one_sample_diag alternative");
        }
    } else {
        if (!n2) {
            throw DomainError("two-sample simulation needs n2");
        }
        if (p > n1 - 2 || p > *n2 - 2) {
            throw DomainError("two-sample simulation needs p <= min(n1, n2) - 2");
        }
        if (alternative && alternative->kind != AlternativeSpec::Kind::two_sample_ratio_diag) {
            throw DomainError("two-sample simulation needs a two_sample_ratio_diag alternative");
        }
    }
    if (alternative && !(alternative->leading > 0.0 && alternative->rest > 0.0)) {
        throw DomainError("alternative diagonal entries must be positive");
    }
}

namespace {

void fill(RandomStream::Engine& engine, Generator g, Eigen::MatrixXd& m) {
    if (g == Generator::gaussian) {
        fill_standard_normal(engine, m.data(), static_cast<std::size_t>(m.size()));
    } else {
        fill_scaled_t5(engine, m.data(), static_cast<std::size_t>(m.size()));
    }
}

// Rows drawn with covariance diag(leading, rest, ..., rest).
void apply_diagonal(Eigen::MatrixXd& m, double leading, double rest) {
    if (leading != 1.0) {
        m.col(0) *= std::sqrt(leading);
    }
    if (rest != 1.0 && m.cols() > 1) {
        m.rightCols(m.cols() - 1) *= std::sqrt(rest);
    }
}

void fnv1a(std::uint64_t& h, const Eigen::MatrixXd& m) {
    const auto* bytes = reinterpret_cast<const unsigned char*>(m.data());
    const std::size_t count = static_cast<std::size_t>(m.size()) * sizeof(double);
    for (std::size_t i = 0; i < count; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ULL;
    }
}

MethodOutcome summarise(TestMethod method, long long rejections, long long replications) {
    const double rate = static_cast<double>(rejections) / static_cast<double>(replications);
    return {method, rejections, replications, rate, std::sqrt(rate * (1.0 - rate) / static_cast<double>(replications))};
}

SimulationReport reduce(const SimulationConfig& cfg, std::vector<ReplicateRecord>&& records) {
    long long clrt_hits = 0;
    long long lrt_hits = 0;
    for (const auto& r : records) {
        clrt_hits += r.clrt_rejected ? 1 : 0;
        lrt_hits += r.lrt_rejected ? 1 : 0;
    }
    const bool one = cfg.scenario == Scenario::one_sample;
    SimulationReport report;
    report.config = cfg;
    report.clrt = summarise(one ? TestMethod::clrt_one : TestMethod::clrt_two, clrt_hits, cfg.replications);
    report.lrt = summarise(one ? TestMethod::lrt_one : TestMethod::lrt_two, lrt_hits, cfg.replications);
    if (cfg.keep_replicates) {
        report.replicates = std::move(records);
    }
    return report;
}

}  // namespace

ReplicateData generate_replicate(const SimulationConfig& cfg, std::uint64_t index) {
    auto engine = RandomStream(cfg.seed, cfg.stream_base + index).make_engine();
    ReplicateData data;
    data.x.resize(cfg.n1, cfg.p);
    fill(engine, cfg.generator, data.x);
    if (cfg.scenario == Scenario::two_sample) {
        data.y = Eigen::MatrixXd(*cfg.n2, cfg.p);
        fill(engine, cfg.generator, *data.y);
    }
    if (cfg.alternative) {
        apply_diagonal(data.x, cfg.alternative->leading, cfg.alternative->rest);
    }
    return data;
}

std::uint64_t dataset_digest(const ReplicateData& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    fnv1a(h, data.x);
    if (data.y) {
        fnv1a(h, *data.y);
    }
    return h;
}

ReplicateRecord run_replicate(const SimulationConfig& cfg, std::uint64_t index) {
    ReplicateData data = generate_replicate(cfg, index);
    ReplicateRecord rec;
    if (cfg.keep_replicates) {
        rec.dataset_digest = dataset_digest(data);
    }
    if (cfg.scenario == Scenario::one_sample) {
        const ObservationMatrix x(std::move(data.x));
        const Spectrum spectrum = eigenvalues_sym(sample_covariance(x));
        const double n = static_cast<double>(cfg.n1);
        const double l_star = one_sample_lr_core(spectrum);
        const TestResult clrt =
            clrt_one_sample_from_core(one_sample_lr_core(spectrum, n / (n - 1.0)), cfg.p, cfg.n1, cfg.alpha, cfg.tail);
        const TestResult lrt = lrt_one_sample_from_core(l_star, cfg.p, cfg.n1, cfg.alpha);
        rec.raw_statistic = l_star;
        rec.clrt_standardized = clrt.standardized;
        rec.clrt_rejected = clrt.rejected;
        rec.lrt_standardized = lrt.standardized;
        rec.lrt_rejected = lrt.rejected;
    } else {
        const ObservationMatrix x(std::move(data.x));
        const ObservationMatrix y(std::move(*data.y));
        const long long n2 = *cfg.n2;
        const CovarianceMatrix sx = sample_covariance(x);
        const CovarianceMatrix sy = sample_covariance(y);
        const double core = two_sample_lr_core(sx, sy, cfg.n1, n2);
        const double core_unbiased = two_sample_lr_core(unbiased(sx), unbiased(sy), cfg.n1 - 1, n2 - 1);
        const TestResult clrt =
            clrt_two_sample_from_core(core_unbiased, cfg.p, cfg.n1, n2, cfg.alpha, cfg.resolved_beta(), cfg.tail);
        const TestResult lrt = lrt_two_sample_from_core(core, cfg.p, cfg.n1, n2, cfg.alpha);
        rec.raw_statistic = core;
        rec.clrt_standardized = clrt.standardized;
        rec.clrt_rejected = clrt.rejected;
        rec.lrt_standardized = lrt.standardized;
        rec.lrt_rejected = lrt.rejected;
    }
    return rec;
}

SimulationReport run_simulation(const SimulationConfig& cfg) {
    cfg.validate();
    const long long count = cfg.replications;
    std::vector<ReplicateRecord> records(static_cast<std::size_t>(count));
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(count));

#ifdef _OPENMP
    const int threads = cfg.workers > 0 ? cfg.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
#endif
    for (long long i = 0; i < count; ++i) {
        try {
            records[static_cast<std::size_t>(i)] = run_replicate(cfg, static_cast<std::uint64_t>(i));
        } catch (...) {
            failures[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }

    for (std::size_t i = 0; i < failures.size(); ++i) {
        if (failures[i]) {
            try {
                std::rethrow_exception(failures[i]);
            } catch (const std::exception& e) {
                throw ReplicateError(i, e.what());
            }
        }
    }
    return reduce(cfg, std::move(records));
}

SimulationReport run_simulation_serial(const SimulationConfig& cfg) {
    cfg.validate();
    std::vector<ReplicateRecord> records;
    records.reserve(static_cast<std::size_t>(cfg.replications));
    for (long long i = 0; i < cfg.replications; ++i) {
        try {
            records.push_back(run_replicate(cfg, static_cast<std::uint64_t>(i)));
        } catch (const std::exception& e) {
            throw ReplicateError(static_cast<std::size_t>(i), e.what());
        }
    }
    return reduce(cfg, std::move(records));
}

}  // namespace hdcov
