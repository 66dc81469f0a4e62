#include "hdcov/mp_law.hpp"

#include "hdcov/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace hdcov {

MpLaw MpLaw::make(double y) {
    if (!(y > 0.0 && y <= 1.0)) {
        throw DomainError("Marcenko-Pastur index must lie in (0, 1], got " + std::to_string(y));
    }
    const double root = std::sqrt(y);
    return {y, (1.0 - root) * (1.0 - root), (1.0 + root) * (1.0 + root)};
}

double MpLaw::pdf(double x) const {
    if (x <= a || x >= b) {
        return 0.0;
    }
    return std::sqrt((b - x) * (x - a)) / (2.0 * std::numbers::pi * y * x);
}

SupportInterval mp_support(double y) {
    const MpLaw law = MpLaw::make(y);
    return {law.a, law.b};
}

double mp_pdf(double y, double x) {
    return MpLaw::make(y).pdf(x);
}

double one_sample_centering(double y_n) {
    if (!(y_n > 0.0 && y_n < 1.0)) {
        throw DomainError("one_sample_centering: y_n must lie in (0, 1), got " + std::to_string(y_n));
    }
    return 1.0 - ((y_n - 1.0) / y_n) * std::log1p(-y_n);
}

}  // namespace hdcov
