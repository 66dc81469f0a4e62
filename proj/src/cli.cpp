#include "hdcov/cli.hpp"

#include "hdcov/corrections.hpp"
#include "hdcov/csv_io.hpp"
#include "hdcov/error.hpp"
#include "hdcov/fisher_lsd.hpp"
#include "hdcov/lr_tests.hpp"
#include "hdcov/mp_law.hpp"
#include "hdcov/report_io.hpp"
#include "hdcov/sim.hpp"
#include "hdcov/spectral.hpp"
#include "hdcov/table.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iomanip>
#include <optional>
#include <string>

namespace hdcov {

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

struct DataFlags {
    std::string delimiter = ",";
    bool has_header = false;
    bool transpose = false;

    CsvOptions options() const {
        CsvOptions o;
        if (delimiter == "\\t" || delimiter == "tab") {
            o.delimiter = '\t';
        } else if (delimiter.size() == 1) {
            o.delimiter = delimiter.front();
        } else {
            throw CLI::ValidationError("--delimiter", "expected a single character, 'tab' or '\\t'");
        }
        o.has_header = has_header;
        o.transpose = transpose;
        return o;
    }
};

void add_data_flags(CLI::App* cmd, DataFlags& flags) {
    cmd->add_option("--delimiter", flags.delimiter, "Field delimiter")->capture_default_str();
    cmd->add_flag("--has-header", flags.has_header, "Skip the first non-empty line");
    cmd->add_flag("--transpose", flags.transpose, "Input rows are variables instead of observations");
}

const std::vector<std::string> kOutputs{"csv", "json"};
const std::vector<std::string> kTails{"two_sided", "upper"};

void emit(std::ostream& out, const std::string& format, const TestResult& r) {
    if (format == "json") {
        out << to_json(r).dump(2) << '\n';
    } else {
        write_test_result_csv(out, r);
    }
}

void print_key_values(std::ostream& out, const std::string& format,
                      const std::vector<std::pair<std::string, nlohmann::json>>& kv) {
    if (format == "json") {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [k, v] : kv) {
            j[k] = v;
        }
        out << j.dump(2) << '\n';
        return;
    }
    out << "field,value\n";
    for (const auto& [k, v] : kv) {
        if (v.is_string()) {
            out << k << ',' << v.get<std::string>() << '\n';
        } else if (v.is_number_float()) {
            out << k << ',' << std::setprecision(10) << v.get<double>() << '\n';
        } else {
            out << k << ',' << v.dump() << '\n';
        }
    }
}

void write_density(std::ostream& out, double lo, double hi, int points, const std::function<double(double)>& pdf) {
    if (points < 2) {
        throw DomainError("--points must be >= 2");
    }
    out << "x,density\n" << std::setprecision(12);
    for (int i = 0; i < points; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
        out << x << ',' << pdf(x) << '\n';
    }
}

Eigen::MatrixXd apply_reference_covariance(const Eigen::MatrixXd& data, const std::string& sigma0_path,
                                           const CsvOptions& opts) {
    CsvOptions matrix_opts = opts;
    matrix_opts.transpose = false;
    const Eigen::MatrixXd a = read_matrix_csv_file(sigma0_path, matrix_opts);
    if (a.rows() != a.cols() || a.rows() != data.cols()) {
        throw DimensionMismatch("--sigma0 must be a " + std::to_string(data.cols()) + "x" +
                                std::to_string(data.cols()) + " matrix");
    }
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw DomainError("--sigma0 must be symmetric");
    }
    return data * inverse_sqrt_spd(a);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Corrected likelihood-ratio tests for high-dimensional covariance matrices", "hdcov"};
    app.require_subcommand(1);

    // one-sample
    DataFlags one_flags;
    std::string one_path;
    std::string one_sigma0;
    double one_alpha = 0.05;
    std::string one_tail = "two_sided";
    std::string one_method = "clrt";
    std::string one_output = "csv";
    auto* one = app.add_subcommand("one-sample", "Test H0: Sigma = I (or Sigma = Sigma0 with --sigma0)");
    one->add_option("data", one_path, "CSV data file, rows are observations")->required();
    add_data_flags(one, one_flags);
    one->add_option("--alpha", one_alpha, "Significance level")->capture_default_str();
    one->add_option("--tail", one_tail, "Rejection region of the corrected test")->check(CLI::IsMember(kTails))->capture_default_str();
    one->add_option("--method", one_method, "clrt (corrected) or lrt (classical)")
        ->check(CLI::IsMember({"clrt", "lrt"}))
        ->capture_default_str();
    one->add_option("--sigma0", one_sigma0, "Reference covariance A; the data are transformed by A^{-1/2}");
    one->add_option("--output", one_output)->check(CLI::IsMember(kOutputs))->capture_default_str();

    // two-sample
    DataFlags two_flags;
    std::string two_x;
    std::string two_y;
    double two_alpha = 0.05;
    double two_beta = 0.0;
    bool two_estimate_beta = false;
    std::string two_tail = "two_sided";
    std::string two_method = "clrt";
    std::string two_output = "csv";
    auto* two = app.add_subcommand("two-sample", "Test H0: Sigma1 = Sigma2");
    two->add_option("data_x", two_x, "First sample")->required();
    two->add_option("data_y", two_y, "Second sample")->required();
    add_data_flags(two, two_flags);
    two->add_option("--alpha", two_alpha)->capture_default_str();
    auto* beta_opt = two->add_option("--beta", two_beta, "Fourth-moment parameter E x^4 - 3")->capture_default_str();
    two->add_flag("--estimate-beta", two_estimate_beta, "Use the pooled plug-in estimate of beta")->excludes(beta_opt);
    two->add_option("--tail", two_tail)->check(CLI::IsMember(kTails))->capture_default_str();
    two->add_option("--method", two_method)->check(CLI::IsMember({"clrt", "lrt"}))->capture_default_str();
    two->add_option("--output", two_output)->check(CLI::IsMember(kOutputs))->capture_default_str();

    // constants
    long long k_p = 0;
    std::optional<long long> k_n;
    std::optional<long long> k_n1;
    std::optional<long long> k_n2;
    double k_beta = 0.0;
    bool k_complex = false;
    std::string k_output = "csv";
    auto* constants = app.add_subcommand("constants", "Print the correction constants for (p, n) or (p, n1, n2)");
    constants->add_option("--p", k_p, "Dimension")->required();
    auto* n_opt = constants->add_option("--n", k_n, "Sample size (one-sample)");
    auto* n1_opt = constants->add_option("--n1", k_n1, "First sample size (two-sample)")->excludes(n_opt);
    auto* n2_opt = constants->add_option("--n2", k_n2, "Second sample size (two-sample)")->excludes(n_opt);
    n1_opt->needs(n2_opt);
    n2_opt->needs(n1_opt);
    constants->add_option("--beta", k_beta, "Fourth-moment parameter (two-sample)")->capture_default_str();
    constants->add_flag("--complex", k_complex, "Complex-valued population");
    constants->add_option("--output", k_output)->check(CLI::IsMember(kOutputs))->capture_default_str();

    // simulate
    std::string s_scenario = "one_sample";
    long long s_p = 0;
    long long s_n1 = 0;
    std::optional<long long> s_n2;
    long long s_reps = 1000;
    double s_alpha = 0.05;
    std::string s_generator = "gaussian";
    bool s_alternative = false;
    std::optional<double> s_alt_leading;
    std::optional<double> s_alt_rest;
    std::uint64_t s_seed = kDefaultSeed;
    std::uint64_t s_stream_base = 0;
    std::string s_tail = "two_sided";
    std::optional<double> s_beta;
    int s_workers = 0;
    std::string s_output = "csv";
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo size/power of the corrected and classical tests");
    simulate->add_option("--scenario", s_scenario)
        ->check(CLI::IsMember({"one_sample", "two_sample"}))
        ->capture_default_str();
    simulate->add_option("--p", s_p)->required();
    simulate->add_option("--n1,--n", s_n1, "Sample size (first sample)")->required();
    simulate->add_option("--n2", s_n2, "Second sample size");
    simulate->add_option("--replications", s_reps)->capture_default_str();
    simulate->add_option("--alpha", s_alpha)->capture_default_str();
    simulate->add_option("--generator", s_generator)
        ->check(CLI::IsMember({"gaussian", "scaled_t5"}))
        ->capture_default_str();
    simulate->add_flag("--alternative", s_alternative,
                       "Simulate under the diagonal alternative (power) instead of H0 (size)");
    simulate->add_option("--alt-leading", s_alt_leading, "Leading diagonal entry (default 1 one-sample, 3 two-sample)");
    simulate->add_option("--alt-rest", s_alt_rest, "Remaining diagonal entries (default 0.05 one-sample, 1 two-sample)");
    simulate->add_option("--seed", s_seed)->capture_default_str();
    simulate->add_option("--stream-base", s_stream_base)->capture_default_str();
    simulate->add_option("--tail", s_tail)->check(CLI::IsMember(kTails))->capture_default_str();
    simulate->add_option("--beta", s_beta, "beta for the corrected two-sample test (default: generator value)");
    simulate->add_option("--workers", s_workers, "OpenMP threads, 0 = runtime default")->capture_default_str();
    simulate->add_option("--output", s_output)->check(CLI::IsMember(kOutputs))->capture_default_str();

    // reproduce-table
    std::string t_id;
    double t_scale = 0.2;
    std::uint64_t t_seed = kDefaultSeed;
    std::string t_tail = "two_sided";
    int t_workers = 0;
    std::string t_output = "csv";
    auto* table = app.add_subcommand("reproduce-table", "Re-run a published size/power table at a given scale");
    table->add_option("table", t_id, "table1 | table2_upper | table2_lower | table3")
        ->required()
        ->check(CLI::IsMember({"table1", "table2_upper", "table2_lower", "table3"}));
    table->add_option("--scale", t_scale, "Fraction of the published replication count")->capture_default_str();
    table->add_option("--seed", t_seed)->capture_default_str();
    table->add_option("--tail", t_tail)->check(CLI::IsMember(kTails))->capture_default_str();
    table->add_option("--workers", t_workers)->capture_default_str();
    table->add_option("--output", t_output)->check(CLI::IsMember(kOutputs))->capture_default_str();

    // densities
    double mp_y = 0.0;
    int mp_points = 201;
    auto* mp = app.add_subcommand("mp-pdf", "Dump the Marcenko-Pastur density as x,density CSV");
    mp->add_option("--y", mp_y, "Index y in (0, 1]")->required();
    mp->add_option("--points", mp_points)->capture_default_str();

    double f_y1 = 0.0;
    double f_y2 = 0.0;
    int f_points = 201;
    auto* fisher = app.add_subcommand("fisher-pdf", "Dump the F-matrix limiting density as x,density CSV");
    fisher->add_option("--y1", f_y1)->required();
    fisher->add_option("--y2", f_y2)->required();
    fisher->add_option("--points", f_points)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (one->parsed()) {
            const CsvOptions opts = one_flags.options();
            Eigen::MatrixXd data = read_matrix_csv_file(one_path, opts);
            if (!one_sigma0.empty()) {
                data = apply_reference_covariance(data, one_sigma0, opts);
            }
            const ObservationMatrix x(std::move(data));
            const TestResult r = one_method == "clrt" ? clrt_one_sample(x, one_alpha, parse_tail(one_tail))
                                                      : lrt_one_sample(x, one_alpha);
            emit(out, one_output, r);
        } else if (two->parsed()) {
            const CsvOptions opts = two_flags.options();
            const ObservationMatrix x(read_matrix_csv_file(two_x, opts));
            const ObservationMatrix y(read_matrix_csv_file(two_y, opts));
            const double beta = two_estimate_beta ? estimate_beta(x, y) : two_beta;
            const TestResult r = two_method == "clrt" ? clrt_two_sample(x, y, two_alpha, beta, parse_tail(two_tail))
                                                      : lrt_two_sample(x, y, two_alpha);
            emit(out, two_output, r);
        } else if (constants->parsed()) {
            const PopulationCase pc = k_complex ? PopulationCase::complex : PopulationCase::real;
            if (k_n) {
                const double y = static_cast<double>(k_p) / static_cast<double>(*k_n);
                const CorrectionConstants k = one_sample_constants(k_p, *k_n, pc);
                print_key_values(out, k_output,
                                 {{"scenario", "one_sample"},
                                  {"case", std::string(to_string(pc))},
                                  {"p", k_p},
                                  {"n", *k_n},
                                  {"y_n", y},
                                  {"lsd_functional", one_sample_centering(y)},
                                  {"centering", k.centering},
                                  {"mean", k.mean},
                                  {"variance", k.variance}});
            } else if (k_n1 && k_n2) {
                const double y1 = static_cast<double>(k_p) / static_cast<double>(*k_n1);
                const double y2 = static_cast<double>(k_p) / static_cast<double>(*k_n2);
                const CorrectionConstants k = two_sample_constants(k_p, *k_n1, *k_n2, pc, FourthMomentInfo{k_beta});
                print_key_values(out, k_output,
                                 {{"scenario", "two_sample"},
                                  {"case", std::string(to_string(pc))},
                                  {"p", k_p},
                                  {"n1", *k_n1},
                                  {"n2", *k_n2},
                                  {"y_n1", y1},
                                  {"y_n2", y2},
                                  {"beta", k_beta},
                                  {"lsd_functional", two_sample_centering(y1, y2)},
                                  {"centering", k.centering},
                                  {"mean", k.mean},
                                  {"variance", k.variance}});
            } else {
                err << "constants: provide --n (one-sample) or --n1 and --n2 (two-sample)\n";
                return kExitUsage;
            }
        } else if (simulate->parsed()) {
            SimulationConfig cfg;
            cfg.scenario = parse_scenario(s_scenario);
            cfg.p = s_p;
            cfg.n1 = s_n1;
            cfg.n2 = s_n2;
            cfg.replications = s_reps;
            cfg.alpha = s_alpha;
            cfg.generator = parse_generator(s_generator);
            cfg.seed = s_seed;
            cfg.stream_base = s_stream_base;
            cfg.tail = parse_tail(s_tail);
            cfg.beta = s_beta;
            cfg.workers = s_workers;
            if (s_alternative) {
                const bool one_sided = cfg.scenario == Scenario::one_sample;
                cfg.alternative = AlternativeSpec{
                    one_sided ? AlternativeSpec::Kind::one_sample_diag : AlternativeSpec::Kind::two_sample_ratio_diag,
                    s_alt_leading.value_or(one_sided ? 1.0 : 3.0), s_alt_rest.value_or(one_sided ? 0.05 : 1.0)};
            }
            const SimulationReport report = run_simulation(cfg);
            if (s_output == "json") {
                out << to_json(report).dump(2) << '\n';
            } else {
                write_simulation_csv_header(out);
                write_simulation_csv_rows(out, report);
            }
        } else if (table->parsed()) {
            const TableId id = parse_table_id(t_id);
            const auto rows = reproduce_table(id, t_scale, t_seed, parse_tail(t_tail), t_workers);
            if (t_output == "json") {
                out << to_json(id, rows).dump(2) << '\n';
            } else {
                write_table_csv(out, id, rows);
            }
        } else if (mp->parsed()) {
            const MpLaw law = MpLaw::make(mp_y);
            write_density(out, law.a, law.b, mp_points, [&](double x) { return law.pdf(x); });
        } else if (fisher->parsed()) {
            const FisherLsd lsd = FisherLsd::make(f_y1, f_y2);
            write_density(out, lsd.a, lsd.b, f_points, [&](double x) { return lsd.pdf(x); });
        }
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitOk;
}

}  // namespace hdcov
