#include "hdcov/fisher_lsd.hpp"

#include "hdcov/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hdcov {

namespace {

void require_unit_ratio(double y, const char* name) {
    if (!(y > 0.0 && y < 1.0)) {
        throw DomainError(std::string(name) + " must lie in (0, 1), got " + std::to_string(y));
    }
}

}  // namespace

FisherLsd FisherLsd::make(double y1, double y2) {
    require_unit_ratio(y1, "y1");
    require_unit_ratio(y2, "y2");
    const double h = std::sqrt(y1 + y2 - y1 * y2);
    const double scale = 1.0 / ((1.0 - y2) * (1.0 - y2));
    return {y1, y2, h, scale * (1.0 - h) * (1.0 - h), scale * (1.0 + h) * (1.0 + h)};
}

double FisherLsd::pdf(double x) const {
    if (x <= a || x >= b) {
        return 0.0;
    }
    return (1.0 - y2) * std::sqrt((b - x) * (x - a)) / (2.0 * std::numbers::pi * x * (y1 + y2 * x));
}

FisherSupport fisher_support(double y1, double y2) {
    const FisherLsd lsd = FisherLsd::make(y1, y2);
    return {lsd.a, lsd.b, lsd.h};
}

double fisher_pdf(const FisherLsd& lsd, double x) {
    return lsd.pdf(x);
}

double two_sample_centering(double y_n1, double y_n2) {
    require_unit_ratio(y_n1, "y_n1");
    require_unit_ratio(y_n2, "y_n2");
    const double sum = y_n1 + y_n2;
    const double prod = y_n1 * y_n2;
    const double h2 = sum - prod;
    // The first two terms combine to (h2/prod) log(sum/h2); log1p keeps the
    // small-ratio cancellation under control.
    const double lead = (h2 / prod) * -std::log1p(-prod / sum);
    const double tail1 = y_n1 * (1.0 - y_n2) / (y_n2 * sum) * std::log1p(-y_n2);
    const double tail2 = y_n2 * (1.0 - y_n1) / (y_n1 * sum) * std::log1p(-y_n1);
    return lead + tail1 + tail2;
}

CdPair lemma1_solve(const LogAffineSpec& spec, const FisherLsd& lsd) {
    if (!(spec.alpha >= 0.0) || !(spec.beta_coef > 0.0) || !std::isfinite(spec.alpha) ||
        !std::isfinite(spec.beta_coef)) {
        throw DomainError("lemma1_solve: need alpha >= 0 and beta_coef > 0");
    }
    const double one_minus_y2 = 1.0 - lsd.y2;
    const double s = spec.alpha * one_minus_y2 * one_minus_y2 + spec.beta_coef * (1.0 + lsd.h * lsd.h);
    const double prod = spec.beta_coef * lsd.h;
    // c, d are the square roots of the roots of t^2 - s t + prod^2; equivalently
    // (c + d)^2 = s + 2 prod and (c - d)^2 = s - 2 prod.
    const double gap = s - 2.0 * prod;
    if (gap < -1e-12 * s) {
        throw NoRealSolution("lemma1_solve: s^2 < 4 prod^2; the log-affine function is not positive on the support");
    }
    const double sum_root = std::sqrt(s + 2.0 * prod);
    const double diff_root = std::sqrt(std::max(gap, 0.0));
    const CdPair pair{0.5 * (sum_root + diff_root), 0.5 * (sum_root - diff_root)};
    if (!(pair.d > 0.0 && pair.d < pair.c)) {
        throw NoRealSolution("lemma1_solve: no solution with 0 < d < c");
    }
    return pair;
}

double lemma1_mean(const CdPair& pair, const FisherLsd& lsd) {
    const double denom = pair.c * lsd.h - lsd.y2 * pair.d;
    if (std::abs(denom) <= 1e-14 * std::abs(pair.c * lsd.h)) {
        throw Singularity("lemma1_mean: c h - y2 d vanishes");
    }
    const double num = (pair.c - pair.d) * (pair.c + pair.d) * lsd.h * lsd.h;
    return 0.5 * std::log(num / (denom * denom));
}

double lemma1_cov(const CdPair& pair_f, const CdPair& pair_g, double beta_coef_f, const FisherLsd& lsd) {
    const double cg = pair_f.c * pair_g.c;
    const double gap = cg - pair_f.d * pair_g.d;
    if (!(gap > 0.0)) {
        throw Singularity("lemma1_cov: c gamma - d eta must be positive");
    }
    return 2.0 * beta_coef_f * lsd.h / (pair_f.d * pair_f.c) * std::log(cg / gap);
}

}  // namespace hdcov
