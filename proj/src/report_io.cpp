#include "hdcov/report_io.hpp"

#include <iomanip>
#include <sstream>
#include <string>

namespace hdcov {

using nlohmann::json;

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
    }
    return j.at(key).get<T>();
}

json outcome_json(const MethodOutcome& m) {
    return {{"method", to_string(m.method)},
            {"rejections", m.rejections},
            {"replications", m.replications},
            {"rate", m.rate},
            {"mc_se", m.mc_std_error}};
}

json config_json(const SimulationConfig& c) {
    json j = {{"scenario", to_string(c.scenario)},
              {"p", c.p},
              {"n1", c.n1},
              {"n2", optional_json(c.n2)},
              {"replications", c.replications},
              {"alpha", c.alpha},
              {"generator", to_string(c.generator)},
              {"beta", c.resolved_beta()},
              {"seed", c.seed},
              {"stream_base", c.stream_base},
              {"tail", to_string(c.tail)}};
    if (c.alternative) {
        j["alternative"] = {{"kind", to_string(c.alternative->kind)},
                            {"leading", c.alternative->leading},
                            {"rest", c.alternative->rest}};
    } else {
        j["alternative"] = nullptr;
    }
    return j;
}

// Ten significant digits in CSV cells; JSON keeps full precision.
std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(10) << v;
    return os.str();
}

}  // namespace

json to_json(const CorrectionConstants& k) {
    return {{"centering", k.centering}, {"mean", k.mean}, {"variance", k.variance}};
}

json to_json(const TestResult& r) {
    json j = {{"method", to_string(r.method)},
              {"raw_statistic", r.raw_statistic},
              {"standardized", r.standardized},
              {"p_value", r.p_value},
              {"reject_at", optional_json(r.reject_at)},
              {"rejected", r.rejected},
              {"tail", r.tail ? json(to_string(*r.tail)) : json(nullptr)},
              {"beta", optional_json(r.beta)},
              {"chi_square_dof", optional_json(r.chi_square_dof)},
              {"ratios",
               {{"p", r.ratios.p},
                {"n1", r.ratios.n1},
                {"n2", optional_json(r.ratios.n2)},
                {"y_n1", r.ratios.y_n1},
                {"y_n2", optional_json(r.ratios.y_n2)}}}};
    j["constants"] = r.constants ? to_json(*r.constants) : json(nullptr);
    return j;
}

TestResult test_result_from_json(const json& j) {
    TestResult r;
    r.method = parse_test_method(j.at("method").get<std::string>());
    r.raw_statistic = j.at("raw_statistic").get<double>();
    r.standardized = j.at("standardized").get<double>();
    r.p_value = j.at("p_value").get<double>();
    r.reject_at = optional_from<double>(j, "reject_at");
    r.rejected = j.at("rejected").get<bool>();
    if (auto tail = optional_from<std::string>(j, "tail")) {
        r.tail = parse_tail(*tail);
    }
    r.beta = optional_from<double>(j, "beta");
    r.chi_square_dof = optional_from<long long>(j, "chi_square_dof");
    const json& ratios = j.at("ratios");
    r.ratios.p = ratios.at("p").get<long long>();
    r.ratios.n1 = ratios.at("n1").get<long long>();
    r.ratios.n2 = optional_from<long long>(ratios, "n2");
    r.ratios.y_n1 = ratios.at("y_n1").get<double>();
    r.ratios.y_n2 = optional_from<double>(ratios, "y_n2");
    if (j.contains("constants") && !j.at("constants").is_null()) {
        const json& k = j.at("constants");
        r.constants = CorrectionConstants{k.at("centering").get<double>(), k.at("mean").get<double>(),
                                          k.at("variance").get<double>()};
    }
    return r;
}

json to_json(const SimulationReport& r) {
    json j = {{"config", config_json(r.config)}, {"clrt", outcome_json(r.clrt)}, {"lrt", outcome_json(r.lrt)}};
    if (!r.replicates.empty()) {
        json reps = json::array();
        for (const auto& rec : r.replicates) {
            reps.push_back({{"digest", rec.dataset_digest},
                            {"raw_statistic", rec.raw_statistic},
                            {"clrt_standardized", rec.clrt_standardized},
                            {"lrt_standardized", rec.lrt_standardized}});
        }
        j["replicates"] = std::move(reps);
    }
    return j;
}

json to_json(TableId table, const std::vector<TableRow>& rows) {
    json out = {{"table", to_string(table)}, {"rows", json::array()}};
    for (const auto& row : rows) {
        out["rows"].push_back({{"size", to_json(row.size)}, {"power", row.power ? to_json(*row.power) : json(nullptr)}});
    }
    return out;
}

void write_test_result_csv(std::ostream& out, const TestResult& r) {
    out << "field,value\n";
    out << "method," << to_string(r.method) << '\n';
    out << "p," << r.ratios.p << '\n';
    out << "n1," << r.ratios.n1 << '\n';
    out << "n2," << (r.ratios.n2 ? std::to_string(*r.ratios.n2) : "") << '\n';
    out << "y_n1," << num(r.ratios.y_n1) << '\n';
    out << "y_n2," << (r.ratios.y_n2 ? num(*r.ratios.y_n2) : "") << '\n';
    out << "raw_statistic," << num(r.raw_statistic) << '\n';
    out << "standardized," << num(r.standardized) << '\n';
    out << "p_value," << num(r.p_value) << '\n';
    out << "alpha," << (r.reject_at ? num(*r.reject_at) : "") << '\n';
    out << "rejected," << (r.rejected ? "true" : "false") << '\n';
    if (r.tail) {
        out << "tail," << to_string(*r.tail) << '\n';
    }
    if (r.beta) {
        out << "beta," << num(*r.beta) << '\n';
    }
    if (r.chi_square_dof) {
        out << "chi_square_dof," << *r.chi_square_dof << '\n';
    }
    if (r.constants) {
        out << "centering," << num(r.constants->centering) << '\n';
        out << "mean," << num(r.constants->mean) << '\n';
        out << "variance," << num(r.constants->variance) << '\n';
    }
}

void write_simulation_csv_header(std::ostream& out) {
    out << "scenario,p,n1,n2,generator,beta,alpha,method,rate,mc_se,replications,seed\n";
}

void write_simulation_csv_rows(std::ostream& out, const SimulationReport& r) {
    const auto& c = r.config;
    for (const MethodOutcome* m : {&r.clrt, &r.lrt}) {
        out << to_string(c.scenario) << ',' << c.p << ',' << c.n1 << ',' << (c.n2 ? std::to_string(*c.n2) : "")
            << ',' << to_string(c.generator) << ',' << num(c.resolved_beta()) << ',' << num(c.alpha) << ','
            << to_string(m->method) << ',' << num(m->rate) << ',' << num(m->mc_std_error) << ',' << c.replications
            << ',' << c.seed << '\n';
    }
}

void write_table_csv(std::ostream& out, TableId table, const std::vector<TableRow>& rows) {
    out << "table,p,n1,n2,generator,beta,alpha,tail,replications,seed,"
           "clrt_size,clrt_size_se,clrt_size_diff,clrt_power,clrt_power_se,"
           "lrt_size,lrt_size_se,lrt_power,lrt_power_se\n";
    for (const auto& row : rows) {
        const auto& c = row.size.config;
        out << to_string(table) << ',' << c.p << ',' << c.n1 << ',' << (c.n2 ? std::to_string(*c.n2) : "") << ','
            << to_string(c.generator) << ',' << num(c.resolved_beta()) << ',' << num(c.alpha) << ','
            << to_string(c.tail) << ',' << c.replications << ',' << c.seed << ',';
        out << num(row.size.clrt.rate) << ',' << num(row.size.clrt.mc_std_error) << ','
            << num(row.size.clrt.rate - c.alpha) << ',';
        if (row.power) {
            out << num(row.power->clrt.rate) << ',' << num(row.power->clrt.mc_std_error) << ',';
        } else {
            out << ",,";
        }
        out << num(row.size.lrt.rate) << ',' << num(row.size.lrt.mc_std_error) << ',';
        if (row.power) {
            out << num(row.power->lrt.rate) << ',' << num(row.power->lrt.mc_std_error);
        } else {
            out << ',';
        }
        out << '\n';
    }
}

}  // namespace hdcov
