#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace hdcov {

struct QuadratureSpec {
    double abs_tolerance = 1e-10;
    int max_refinements = 30;

    void validate() const;
};

using RealFunction = std::function<double(double)>;

/// Adaptive Gauss-Legendre quadrature of f over [lo, hi]. Each panel is
/// compared against the sum of its two halves and bisected until the
/// difference is below its share of abs_tolerance.
/// Throws NonConvergence when a panel needs more than max_refinements
/// bisections.
double integrate(const RealFunction& f, double lo, double hi, const QuadratureSpec& spec = {});

/// Integral over [lo, hi] of an integrand with square-root behaviour at both
/// edges. Uses x = (lo+hi)/2 - ((hi-lo)/2) cos(theta), so the integrand seen
/// by the quadrature is f(x(theta)) * ((hi-lo)/2) sin(theta) on [0, pi].
double integrate_edge_sqrt(const RealFunction& f, double lo, double hi, const QuadratureSpec& spec = {});

/// Standard normal CDF, absolute error well below 1e-12.
double std_normal_cdf(double x);

/// Survival function of the chi-square distribution with `dof` degrees of
/// freedom, Q(dof/2, x/2).
double chisq_sf(double x, long long dof);

/// Reproducible random stream. Two streams with the same (seed, stream_id)
/// generate identical sequences; distinct stream ids seed the engine with
/// distinct seed sequences.
class RandomStream {
public:
    using Engine = std::mt19937_64;

    RandomStream(std::uint64_t seed, std::uint64_t stream_id) : seed_(seed), stream_id_(stream_id) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    Engine make_engine() const;

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
};

std::vector<double> sample_standard_normal(const RandomStream& stream, std::size_t count);

/// Draws of sqrt(3/5) * t(5): mean 0, variance 1, fourth moment 9.
std::vector<double> sample_scaled_t5(const RandomStream& stream, std::size_t count);

/// In-place fill variants used by the simulation kernels so a replicate can
/// draw straight into its data buffers.
void fill_standard_normal(RandomStream::Engine& engine, double* out, std::size_t count);
void fill_scaled_t5(RandomStream::Engine& engine, double* out, std::size_t count);

}  // namespace hdcov
