#pragma once

#include <string_view>

namespace hdcov {

enum class PopulationCase { real, complex };

std::string_view to_string(PopulationCase c);

/// beta = E|xi|^4 - 3 for real data, E|xi|^4 - 2 for complex data. Zero for
/// Gaussian entries; 6 for sqrt(3/5) t(5).
struct FourthMomentInfo {
    double beta = 0.0;

    /// Throws DomainError if beta is below the moment-feasibility bound of
    /// the case (-2 real, -1 complex).
    void validate(PopulationCase c) const;
};

struct CorrectionConstants {
    double centering = 0.0;  // p times the LSD functional
    double mean = 0.0;
    double variance = 0.0;
};

/// m(g) for g(x) = x - log x - 1: -log(1 - y)/2 (real), 0 (complex).
double one_sample_mean(double y, PopulationCase c = PopulationCase::real);

/// v(g) = -2 log(1 - y) - 2y (real), half of it (complex).
double one_sample_var(double y, PopulationCase c = PopulationCase::real);

/// m(f) for the two-sample test function. The fourth-moment shift
/// beta y1 y2 / (2 (y1 + y2)) is added in both cases; the complex case has no
/// Gaussian part.
double two_sample_mean(double y1, double y2, PopulationCase c = PopulationCase::real, FourthMomentInfo fm = {});

/// v(f) for the two-sample test function; independent of beta, halved in
/// the complex case.
double two_sample_var(double y1, double y2, PopulationCase c = PopulationCase::real, FourthMomentInfo fm = {});

/// Corrections for H0: Sigma = I at finite (p, n), evaluated at y_n = p/n.
CorrectionConstants one_sample_constants(long long p, long long n, PopulationCase c = PopulationCase::real);

/// Corrections for H0: Sigma1 = Sigma2 at finite (p, n1, n2), evaluated at
/// y_nk = p / n_k.
CorrectionConstants two_sample_constants(long long p, long long n1, long long n2,
                                         PopulationCase c = PopulationCase::real, FourthMomentInfo fm = {});

}  // namespace hdcov
