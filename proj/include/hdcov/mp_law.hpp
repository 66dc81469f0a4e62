#pragma once

namespace hdcov {

/// Marcenko-Pastur law of index y in (0, 1], supported on [a, b].
struct MpLaw {
    double y = 0.0;
    double a = 0.0;  // (1 - sqrt y)^2
    double b = 0.0;  // (1 + sqrt y)^2

    /// Throws DomainError unless 0 < y <= 1.
    static MpLaw make(double y);

    double pdf(double x) const;
};

struct SupportInterval {
    double lo = 0.0;
    double hi = 0.0;
};

SupportInterval mp_support(double y);
double mp_pdf(double y, double x);

/// F^{y}(g) for g(x) = x - log x - 1, i.e. the integral of g against the
/// Marcenko-Pastur density: 1 - ((y - 1)/y) log(1 - y).
double one_sample_centering(double y_n);

}  // namespace hdcov
