#pragma once

namespace hdcov {

/// Limiting spectral distribution of the F-matrix S1 S2^{-1} with ratios
/// y1 = p/n1, y2 = p/n2, both in (0, 1).
struct FisherLsd {
    double y1 = 0.0;
    double y2 = 0.0;
    double h = 0.0;  // sqrt(y1 + y2 - y1 y2)
    double a = 0.0;  // (1 - h)^2 / (1 - y2)^2
    double b = 0.0;  // (1 + h)^2 / (1 - y2)^2

    static FisherLsd make(double y1, double y2);

    double pdf(double x) const;
};

struct FisherSupport {
    double a = 0.0;
    double b = 0.0;
    double h = 0.0;
};

FisherSupport fisher_support(double y1, double y2);
double fisher_pdf(const FisherLsd& lsd, double x);

/// Integral of f(x) = log(y1 + y2 x) - (y2/(y1+y2)) log x - log(y1 + y2)
/// against the F-matrix LSD with ratios (y_n1, y_n2), in closed form.
double two_sample_centering(double y_n1, double y_n2);

/// The function x -> log(alpha + beta_coef * x). alpha = 0 (pure log x) is
/// admitted.
struct LogAffineSpec {
    double alpha = 0.0;
    double beta_coef = 1.0;
};

/// Constants (c, d), 0 < d < c, with
///   c^2 + d^2 = alpha (1 - y2)^2 + beta_coef (1 + h^2),   c d = beta_coef h,
/// so that log(alpha + beta_coef z(xi)) = log(|c + d xi|^2 / (1 - y2)^2) on
/// the unit circle.
struct CdPair {
    double c = 0.0;
    double d = 0.0;
};

CdPair lemma1_solve(const LogAffineSpec& spec, const FisherLsd& lsd);

/// Limiting mean of the centred LSS for log(alpha + beta x):
///   (1/2) log((c^2 - d^2) h^2 / (c h - y2 d)^2).
double lemma1_mean(const CdPair& pair, const FisherLsd& lsd);

/// Limiting covariance between the LSS of f ~ (c, d) and g ~ (gamma, eta):
///   2 b h / (c d) log(c gamma / (c gamma - d eta)), b = beta_coef of f.
double lemma1_cov(const CdPair& pair_f, const CdPair& pair_g, double beta_coef_f, const FisherLsd& lsd);

}  // namespace hdcov
