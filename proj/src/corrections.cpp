#include "hdcov/corrections.hpp"

#include "hdcov/error.hpp"
#include "hdcov/fisher_lsd.hpp"
#include "hdcov/mp_law.hpp"

#include <cmath>
#include <string>

namespace hdcov {

namespace {

void require_unit_ratio(double y, const char* name) {
    if (!(y > 0.0 && y < 1.0)) {
        throw DomainError(std::string(name) + " must lie in (0, 1), got " + std::to_string(y));
    }
}

double ratio(long long p, long long n) {
    if (p < 1 || n < 1) {
        throw DomainError("dimension and sample sizes must be positive");
    }
    return static_cast<double>(p) / static_cast<double>(n);
}

}  // namespace

std::string_view to_string(PopulationCase c) {
    return c == PopulationCase::real ? "real" : "complex";
}

void FourthMomentInfo::validate(PopulationCase c) const {
    const double bound = c == PopulationCase::real ? -2.0 : -1.0;
    if (!std::isfinite(beta) || beta < bound) {
        throw DomainError("fourth-moment parameter beta=" + std::to_string(beta) + " is infeasible for the " +
                          std::string(to_string(c)) + " case");
    }
}

double one_sample_mean(double y, PopulationCase c) {
    require_unit_ratio(y, "y");
    if (c == PopulationCase::complex) {
        return 0.0;
    }
    return -0.5 * std::log1p(-y);
}

double one_sample_var(double y, PopulationCase c) {
    require_unit_ratio(y, "y");
    const double real_var = -2.0 * std::log1p(-y) - 2.0 * y;
    return c == PopulationCase::complex ? 0.5 * real_var : real_var;
}

double two_sample_mean(double y1, double y2, PopulationCase c, FourthMomentInfo fm) {
    require_unit_ratio(y1, "y1");
    require_unit_ratio(y2, "y2");
    fm.validate(c);
    const double sum = y1 + y2;
    // (beta/2) (y1^2 y2 + y1 y2^2) / (y1 + y2)^2
    const double beta_shift = 0.5 * fm.beta * y1 * y2 / sum;
    if (c == PopulationCase::complex) {
        return beta_shift;
    }
    const double gaussian =
        0.5 * (std::log((sum - y1 * y2) / sum) - (y1 / sum) * std::log1p(-y2) - (y2 / sum) * std::log1p(-y1));
    return gaussian + beta_shift;
}

double two_sample_var(double y1, double y2, PopulationCase c, FourthMomentInfo fm) {
    require_unit_ratio(y1, "y1");
    require_unit_ratio(y2, "y2");
    fm.validate(c);
    const double sum = y1 + y2;
    const double sum2 = sum * sum;
    const double real_var = -2.0 * y2 * y2 / sum2 * std::log1p(-y1) - 2.0 * y1 * y1 / sum2 * std::log1p(-y2) +
                            2.0 * std::log1p(-y1 * y2 / sum);
    return c == PopulationCase::complex ? 0.5 * real_var : real_var;
}

CorrectionConstants one_sample_constants(long long p, long long n, PopulationCase c) {
    const double y = ratio(p, n);
    return {static_cast<double>(p) * one_sample_centering(y), one_sample_mean(y, c), one_sample_var(y, c)};
}

CorrectionConstants two_sample_constants(long long p, long long n1, long long n2, PopulationCase c,
                                         FourthMomentInfo fm) {
    const double y1 = ratio(p, n1);
    const double y2 = ratio(p, n2);
    return {static_cast<double>(p) * two_sample_centering(y1, y2), two_sample_mean(y1, y2, c, fm),
            two_sample_var(y1, y2, c, fm)};
}

}  // namespace hdcov
