#pragma once

#include "hdcov/corrections.hpp"
#include "hdcov/spectral.hpp"

#include <optional>
#include <string_view>

namespace hdcov {

enum class TestMethod { clrt_one, lrt_one, clrt_two, lrt_two };

/// Rejection region of the corrected tests: |z| > z_{1-alpha/2} or
/// z > z_{1-alpha}. The classical chi-square tests are always upper-tailed.
enum class Tail { two_sided, upper };

std::string_view to_string(TestMethod m);
std::string_view to_string(Tail t);
TestMethod parse_test_method(std::string_view s);
Tail parse_tail(std::string_view s);

struct DimensionRatios {
    long long p = 0;
    long long n1 = 0;
    std::optional<long long> n2;
    /// Ratios the corrections were evaluated at: p/(n_k - 1) for the
    /// corrected tests, p/n_k for the classical ones.
    double y_n1 = 0.0;
    std::optional<double> y_n2;
};

struct TestResult {
    TestMethod method = TestMethod::clrt_one;
    double raw_statistic = 0.0;  // L* or -(2/N) log L1 the test was computed from
    double standardized = 0.0;   // z-score (corrected) or chi-square value (classical)
    double p_value = 1.0;
    std::optional<double> reject_at;
    bool rejected = false;
    std::optional<Tail> tail;
    std::optional<double> beta;
    std::optional<long long> chi_square_dof;
    DimensionRatios ratios;
    std::optional<CorrectionConstants> constants;
};

/// Corrected LRT for H0: Sigma = I.
///   z = (L* - p F^{y_N}(g) - m(g)) / sqrt(v(g)),  y_N = p/N,  N = n - 1.
/// The data are centred, so L* is taken on the covariance with divisor
/// N = n - 1 and the corrections are evaluated at N. Requires p < n - 1.
TestResult clrt_one_sample(const ObservationMatrix& x, double alpha, Tail tail = Tail::two_sided);

/// Classical LRT for H0: Sigma = I: n L* against chi^2 with p(p+1)/2 dof.
TestResult lrt_one_sample(const ObservationMatrix& x, double alpha);

/// Corrected (pseudo-)LRT for H0: Sigma1 = Sigma2.
///   z = (-(2/N) log L1 - p F_{y_N1,y_N2}(f) - m(f)) / sqrt(v(f)),
/// with N_k = n_k - 1 throughout, as in the one-sample test.
TestResult clrt_two_sample(const ObservationMatrix& x, const ObservationMatrix& y, double alpha, double beta = 0.0,
                           Tail tail = Tail::two_sided);

/// Classical LRT for H0: Sigma1 = Sigma2: -2 log L1 against chi^2 with
/// p(p+1)/2 dof.
TestResult lrt_two_sample(const ObservationMatrix& x, const ObservationMatrix& y, double alpha);

// The *_from_core variants finish a test from an already computed raw
// statistic so that the corrected and classical tests can share one
// eigen-decomposition. n, n1, n2 are always the numbers of observations.
// The corrected variants expect the statistic of unbiased(S) (two-sample:
// of unbiased(S1), unbiased(S2) with sizes n1 - 1, n2 - 1); the classical
// ones expect the statistic of S itself.
TestResult clrt_one_sample_from_core(double l_star, long long p, long long n, double alpha, Tail tail);
TestResult lrt_one_sample_from_core(double l_star, long long p, long long n, double alpha);
TestResult clrt_two_sample_from_core(double core, long long p, long long n1, long long n2, double alpha, double beta,
                                     Tail tail);
TestResult lrt_two_sample_from_core(double core, long long p, long long n1, long long n2, double alpha);

/// Plug-in estimate of beta = E x^4 - 3 from column-standardised data:
/// (1/(p n)) sum_ij z_ij^4 - 3.
double estimate_beta(const ObservationMatrix& x);

/// Same estimate pooled over two samples (each standardised separately).
double estimate_beta(const ObservationMatrix& x, const ObservationMatrix& y);

}  // namespace hdcov
