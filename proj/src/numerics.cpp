#include "hdcov/numerics.hpp"

#include "hdcov/error.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

namespace hdcov {

namespace {

constexpr int kRuleOrder = 10;

struct GaussLegendreRule {
    std::array<double, kRuleOrder> nodes{};
    std::array<double, kRuleOrder> weights{};
};

// Roots of P_n by Newton iteration from the Chebyshev-like initial guesses.
GaussLegendreRule build_rule() {
    GaussLegendreRule rule;
    const int n = kRuleOrder;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

const GaussLegendreRule& rule() {
    static const GaussLegendreRule r = build_rule();
    return r;
}

double panel(const RealFunction& f, double lo, double hi) {
    const auto& r = rule();
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double sum = 0.0;
    for (int i = 0; i < kRuleOrder; ++i) {
        sum += r.weights[i] * f(mid + half * r.nodes[i]);
    }
    return half * sum;
}

double refine(const RealFunction& f, double lo, double hi, double whole, double tol, int depth,
              int max_depth) {
    const double mid = 0.5 * (lo + hi);
    const double left = panel(f, lo, mid);
    const double right = panel(f, mid, hi);
    const double both = left + right;
    if (std::abs(both - whole) <= tol) {
        return both;
    }
    if (depth >= max_depth) {
        throw NonConvergence("integrate: refinement budget of " + std::to_string(max_depth) +
                             " exhausted on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return refine(f, lo, mid, left, 0.5 * tol, depth + 1, max_depth) +
           refine(f, mid, hi, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(abs_tolerance > 0.0)) {
        throw DomainError("QuadratureSpec: abs_tolerance must be positive");
    }
    if (max_refinements < 1) {
        throw DomainError("QuadratureSpec: max_refinements must be >= 1");
    }
}

double integrate(const RealFunction& f, double lo, double hi, const QuadratureSpec& spec) {
    spec.validate();
    if (!(lo < hi)) {
        throw DomainError("integrate: requires lo < hi");
    }
    const double whole = panel(f, lo, hi);
    const double value = refine(f, lo, hi, whole, spec.abs_tolerance, 1, spec.max_refinements);
    if (!std::isfinite(value)) {
        throw NonConvergence("integrate: non-finite result");
    }
    return value;
}

double integrate_edge_sqrt(const RealFunction& f, double lo, double hi, const QuadratureSpec& spec) {
    if (!(lo < hi)) {
        throw DomainError("integrate_edge_sqrt: requires lo < hi");
    }
    const double centre = 0.5 * (lo + hi);
    const double radius = 0.5 * (hi - lo);
    auto substituted = [&](double theta) {
        return f(centre - radius * std::cos(theta)) * radius * std::sin(theta);
    };
    return integrate(substituted, 0.0, std::numbers::pi, spec);
}

double std_normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double chisq_sf(double x, long long dof) {
    if (dof < 1) {
        throw DomainError("chisq_sf: degrees of freedom must be positive");
    }
    if (std::isnan(x) || x < 0.0) {
        throw DomainError("chisq_sf: x must be >= 0");
    }
    if (x == 0.0) {
        return 1.0;
    }
    if (std::isinf(x)) {
        return 0.0;
    }
    return boost::math::gamma_q(0.5 * static_cast<double>(dof), 0.5 * x);
}

RandomStream::Engine RandomStream::make_engine() const {
    std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                      static_cast<std::uint32_t>(stream_id_), static_cast<std::uint32_t>(stream_id_ >> 32)};
    return Engine(seq);
}

void fill_standard_normal(RandomStream::Engine& engine, double* out, std::size_t count) {
    std::normal_distribution<double> normal(0.0, 1.0);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = normal(engine);
    }
}

void fill_scaled_t5(RandomStream::Engine& engine, double* out, std::size_t count) {
    // sqrt(3/5) * Z / sqrt(V/5) == sqrt(3) * Z / sqrt(V), V ~ chi^2_5
    std::normal_distribution<double> normal(0.0, 1.0);
    std::chi_squared_distribution<double> chisq(5.0);
    const double scale = std::sqrt(3.0);
    for (std::size_t i = 0; i < count; ++i) {
        const double z = normal(engine);
        const double v = chisq(engine);
        out[i] = scale * z / std::sqrt(v);
    }
}

std::vector<double> sample_standard_normal(const RandomStream& stream, std::size_t count) {
    auto engine = stream.make_engine();
    std::vector<double> out(count);
    fill_standard_normal(engine, out.data(), count);
    return out;
}

std::vector<double> sample_scaled_t5(const RandomStream& stream, std::size_t count) {
    auto engine = stream.make_engine();
    std::vector<double> out(count);
    fill_scaled_t5(engine, out.data(), count);
    return out;
}

}  // namespace hdcov
