#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace hdcov::oracles;

TEST(Oracles, OneSampleMeanValues) {
    EXPECT_NEAR(mean_oracle_one_sample(0.5), 0.3465736, 1e-7);
    EXPECT_NEAR(mean_oracle_one_sample(0.1), 0.0526803, 1e-7);
    EXPECT_LT(std::abs(mean_oracle_one_sample(1e-9)), 1e-8);
}

TEST(Oracles, CenteringValues) {
    EXPECT_NEAR(centering_oracle(0.5, 0.0, Lsd::mp), 0.3068528, 1e-7);
    EXPECT_LE(centering_oracle(1e-6, 0.0, Lsd::mp), 1e-5);
}

TEST(Oracles, TwoSampleMeanValues) {
    EXPECT_NEAR(mean_oracle_two_sample(0.05, 0.05, 0.0), 0.0129877, 1e-7);
    EXPECT_NEAR(mean_oracle_two_sample(0.1, 0.05, 6.0) - mean_oracle_two_sample(0.1, 0.05, 0.0), 0.1, 1e-7);
    EXPECT_EQ(mean_oracle_two_sample([](double) { return 0.0; }, 0.2, 0.3, 6.0), 0.0);
}

TEST(Oracles, ContourStableInRadius) {
    ContourSpec half;
    half.radius_offset = 0.5e-6;
    for (double y1 : {0.05, 0.2, 0.5}) {
        for (double y2 : {0.05, 0.3}) {
            EXPECT_NEAR(mean_oracle_two_sample(y1, y2, 6.0), mean_oracle_two_sample(y1, y2, 6.0, half), 1e-7);
        }
    }
}

TEST(Oracles, ContourSpecValidation) {
    ContourSpec bad;
    bad.nodes = 100;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad.nodes = 4096;
    bad.radius_offset = 0.0;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Oracles, GammaQ) {
    EXPECT_NEAR(upper_gamma_q(1.0, 2.0), std::exp(-2.0), 1e-15);
    EXPECT_NEAR(upper_gamma_q(0.5, 1.0), std::erfc(1.0), 1e-14);
    EXPECT_NEAR(upper_gamma_q(3.0, 0.5), std::exp(-0.5) * (1.0 + 0.5 + 0.125), 1e-15);
}

TEST(Oracles, NormalCdf) {
    for (double x = -8.0; x <= 8.0; x += 0.25) {
        EXPECT_NEAR(normal_cdf_series(x), 0.5 * std::erfc(-x / std::sqrt(2.0)), 2e-15) << x;
    }
}

TEST(Oracles, LuDeterminant) {
    const auto r = lu_log_det([](int i, int j) { return i == j ? 2.0 : (i + 1 == j ? 1.0 : 0.0); }, 5);
    EXPECT_NEAR(r.first, 5.0 * std::log(2.0), 1e-14);
    EXPECT_EQ(r.second, 1);
    const auto s = lu_log_det([](int i, int j) { return static_cast<double>(i == 1 - j); }, 2);
    EXPECT_NEAR(s.first, 0.0, 1e-15);
    EXPECT_EQ(s.second, -1);
}

TEST(Oracles, KsNormal) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> n01;
    std::vector<double> good(2000);
    for (auto& v : good) {
        v = n01(rng);
    }
    EXPECT_GT(ks_normal(good).p_value, 0.01);
    std::vector<double> shifted = good;
    for (auto& v : shifted) {
        v += 0.2;
    }
    EXPECT_LT(ks_normal(shifted).p_value, 0.01);
}
