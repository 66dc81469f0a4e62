#include "hdcov/spectral.hpp"

#include "hdcov/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hdcov {

namespace {

void require_finite(const Eigen::MatrixXd& m, const char* what) {
    if (!m.allFinite()) {
        throw DomainError(std::string(what) + ": non-finite entries");
    }
}

double singularity_floor(const Eigen::VectorXd& eigenvalues) {
    return kSingularityTolerance * std::max(1.0, eigenvalues.maxCoeff());
}

void require_positive_definite(const Eigen::VectorXd& eigenvalues, const char* what) {
    const double floor = singularity_floor(eigenvalues);
    if (eigenvalues.minCoeff() <= floor) {
        throw DegenerateCovariance(std::string(what) + ": smallest eigenvalue " +
                                   std::to_string(eigenvalues.minCoeff()) +
                                   " is at or below the singularity tolerance (p too close to n, or collinear data)");
    }
}

}  // namespace

ObservationMatrix::ObservationMatrix(Eigen::MatrixXd values) : values_(std::move(values)) {
    if (values_.rows() < 2) {
        throw DomainError("ObservationMatrix: need at least 2 observations");
    }
    if (values_.cols() < 1) {
        throw DomainError("ObservationMatrix: need at least 1 variable");
    }
    require_finite(values_, "ObservationMatrix");
}

CovarianceMatrix sample_covariance(const ObservationMatrix& x) {
    const auto& v = x.values();
    const Eigen::Index n = x.n();
    const Eigen::Index p = x.p();
    const Eigen::RowVectorXd mean = v.colwise().mean();
    const Eigen::MatrixXd centred = v.rowwise() - mean;

    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(p, p);
    s.selfadjointView<Eigen::Lower>().rankUpdate(centred.transpose(), 1.0 / static_cast<double>(n));
    s.triangularView<Eigen::StrictlyUpper>() = s.transpose();
    return {std::move(s), n};
}

CovarianceMatrix sample_covariance_reference(const ObservationMatrix& x) {
    const auto& v = x.values();
    const Eigen::Index n = x.n();
    const Eigen::Index p = x.p();
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(p);
    for (Eigen::Index j = 0; j < p; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            mean(j) += v(i, j);
        }
        mean(j) /= static_cast<double>(n);
    }
    Eigen::MatrixXd s(p, p);
    for (Eigen::Index j = 0; j < p; ++j) {
        for (Eigen::Index k = 0; k <= j; ++k) {
            double acc = 0.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                acc += (v(i, j) - mean(j)) * (v(i, k) - mean(k));
            }
            s(j, k) = acc / static_cast<double>(n);
            s(k, j) = s(j, k);
        }
    }
    return {std::move(s), n};
}

Spectrum eigenvalues_sym(const CovarianceMatrix& s) {
    if (s.values.rows() != s.values.cols()) {
        throw DimensionMismatch("eigenvalues_sym: matrix is not square");
    }
    require_finite(s.values, "eigenvalues_sym");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s.values, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceFailure("eigenvalues_sym: symmetric QR iteration did not converge");
    }
    return {solver.eigenvalues()};
}

SymmetricEigen eigen_decompose_sym(const Eigen::MatrixXd& s) {
    if (s.rows() != s.cols()) {
        throw DimensionMismatch("eigen_decompose_sym: matrix is not square");
    }
    require_finite(s, "eigen_decompose_sym");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceFailure("eigen_decompose_sym: symmetric QR iteration did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double log_det_spd(const Eigen::MatrixXd& s) {
    const Spectrum spectrum = eigenvalues_sym({s, 0});
    require_positive_definite(spectrum.eigenvalues, "log_det_spd");
    return spectrum.eigenvalues.array().log().sum();
}

CovarianceMatrix unbiased(const CovarianceMatrix& s) {
    if (s.divisor_n < 2) {
        throw DomainError("unbiased: divisor must be >= 2");
    }
    const double n = static_cast<double>(s.divisor_n);
    return {s.values * (n / (n - 1.0)), s.divisor_n - 1};
}

double one_sample_lr_core(const CovarianceMatrix& s) {
    return one_sample_lr_core(eigenvalues_sym(s));
}

double one_sample_lr_core(const Spectrum& spectrum, double scale) {
    require_positive_definite(spectrum.eigenvalues, "one_sample_lr_core");
    double total = 0.0;
    for (const double lambda : spectrum.eigenvalues) {
        const double v = scale * lambda;
        total += (v - 1.0) - std::log(v);
    }
    return total;
}

double two_sample_lr_core(const CovarianceMatrix& a, const CovarianceMatrix& b, long long n1, long long n2) {
    if (a.p() != b.p() || a.values.cols() != b.values.cols()) {
        throw DimensionMismatch("two_sample_lr_core: covariance matrices differ in dimension (" +
                                std::to_string(a.p()) + " vs " + std::to_string(b.p()) + ")");
    }
    const long long p = a.p();
    if (n1 < p + 1 || n2 < p + 1) {
        throw DomainError("two_sample_lr_core: need n1, n2 >= p + 1");
    }
    const double total = static_cast<double>(n1 + n2);
    const double c1 = static_cast<double>(n1) / total;
    const double c2 = static_cast<double>(n2) / total;

    const double log_det_a = log_det_spd(a.values);
    const double log_det_b = log_det_spd(b.values);
    const Eigen::MatrixXd pooled = c1 * a.values + c2 * b.values;
    const double log_det_pooled = log_det_spd(pooled);
    return log_det_pooled - c1 * log_det_a - c2 * log_det_b;
}

Eigen::MatrixXd inverse_sqrt_spd(const Eigen::MatrixXd& s) {
    const SymmetricEigen eig = eigen_decompose_sym(s);
    require_positive_definite(eig.eigenvalues, "inverse_sqrt_spd");
    const Eigen::VectorXd scale = eig.eigenvalues.array().rsqrt();
    return eig.eigenvectors * scale.asDiagonal() * eig.eigenvectors.transpose();
}

}  // namespace hdcov
