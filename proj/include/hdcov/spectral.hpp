#pragma once

#include <Eigen/Dense>

namespace hdcov {

/// n x p data matrix, rows are observations.
class ObservationMatrix {
public:
    /// Throws DomainError unless n >= 2, p >= 1 and every entry is finite.
    explicit ObservationMatrix(Eigen::MatrixXd values);

    const Eigen::MatrixXd& values() const noexcept { return values_; }
    Eigen::Index n() const noexcept { return values_.rows(); }
    Eigen::Index p() const noexcept { return values_.cols(); }

private:
    Eigen::MatrixXd values_;
};

struct CovarianceMatrix {
    Eigen::MatrixXd values;
    Eigen::Index divisor_n = 0;

    Eigen::Index p() const noexcept { return values.rows(); }
};

/// Ascending eigenvalues.
struct Spectrum {
    Eigen::VectorXd eigenvalues;
};

struct SymmetricEigen {
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXd eigenvectors;  // columns match eigenvalues
};

/// Eigenvalues at or below this multiple of max(1, lambda_max) count as zero.
inline constexpr double kSingularityTolerance = 1e-10;

/// S = (1/n) sum (x_i - xbar)(x_i - xbar)^T. The divisor is n, not n - 1.
CovarianceMatrix sample_covariance(const ObservationMatrix& x);

/// Double-loop covariance kept as the serial reference for the blocked
/// kernel above; used by tests and the benchmark.
CovarianceMatrix sample_covariance_reference(const ObservationMatrix& x);

Spectrum eigenvalues_sym(const CovarianceMatrix& s);
SymmetricEigen eigen_decompose_sym(const Eigen::MatrixXd& s);

/// log|S| from the spectrum; throws DegenerateCovariance when S is singular
/// to tolerance.
double log_det_spd(const Eigen::MatrixXd& s);

/// The same matrix rescaled to divisor n - 1, the degrees of freedom left
/// after the column means are removed.
CovarianceMatrix unbiased(const CovarianceMatrix& s);

/// L* = tr S - log|S| - p.
double one_sample_lr_core(const CovarianceMatrix& s);

/// L* of scale * S from the spectrum of S: sum(scale l - log(scale l) - 1).
double one_sample_lr_core(const Spectrum& spectrum, double scale = 1.0);

/// -(2/N) log L1 = log|c1 A + c2 B| - c1 log|A| - c2 log|B|, c_k = n_k / N.
double two_sample_lr_core(const CovarianceMatrix& a, const CovarianceMatrix& b, long long n1, long long n2);

/// S^{-1/2} for a symmetric positive-definite S.
Eigen::MatrixXd inverse_sqrt_spd(const Eigen::MatrixXd& s);

}  // namespace hdcov
