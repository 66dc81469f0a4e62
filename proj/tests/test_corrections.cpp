#include "hdcov/corrections.hpp"
#include "hdcov/error.hpp"
#include "hdcov/fisher_lsd.hpp"
#include "hdcov/mp_law.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace hdcov;

namespace {

std::vector<double> grid5() {
    std::vector<double> g;
    for (int i = 0; i < 5; ++i) {
        g.push_back(0.05 + 0.1125 * i);
    }
    return g;
}

double assembled_var(double y1, double y2) {
    const auto lsd = FisherLsd::make(y1, y2);
    const auto l1 = lemma1_solve({y1, y2}, lsd);
    const auto l2 = lemma1_solve({0.0, 1.0}, lsd);
    const double w = y2 / (y1 + y2);
    return lemma1_cov(l1, l1, y2, lsd) + w * w * lemma1_cov(l2, l2, 1.0, lsd) - 2.0 * w * lemma1_cov(l1, l2, y2, lsd);
}

}  // namespace

TEST(OneSample, Examples) {
    EXPECT_NEAR(one_sample_mean(0.1), 0.0526802578289, 1e-12);
    EXPECT_NEAR(one_sample_var(0.1), 0.0107210313156, 1e-12);
    EXPECT_NEAR(one_sample_mean(0.5), 0.346573590279973, 1e-12);
    EXPECT_EQ(one_sample_mean(0.3, PopulationCase::complex), 0.0);
    EXPECT_DOUBLE_EQ(one_sample_var(0.3, PopulationCase::complex), 0.5 * one_sample_var(0.3));
}

TEST(OneSample, MeanAgainstOracle) {
    for (double y : {0.02, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        EXPECT_NEAR(one_sample_mean(y), oracles::mean_oracle_one_sample(y), 1e-8) << y;
    }
}

TEST(OneSample, VarPositiveIncreasing) {
    double prev = 0.0;
    for (int i = 1; i < 1000; ++i) {
        const double v = one_sample_var(i / 1000.0);
        EXPECT_GT(v, prev);
        prev = v;
    }
}

TEST(OneSample, Constants) {
    const auto k = one_sample_constants(50, 500);
    EXPECT_NEAR(k.centering, 50.0 * 0.0517553590795633, 1e-10);
    EXPECT_NEAR(k.mean, one_sample_mean(0.1), 1e-15);
    EXPECT_NEAR(k.variance, one_sample_var(0.1), 1e-15);
    EXPECT_THROW(one_sample_constants(0, 500), DomainError);
    EXPECT_THROW(one_sample_constants(500, 500), DomainError);
}

TEST(TwoSample, MeanExamples) {
    EXPECT_NEAR(two_sample_mean(0.05, 0.05), 0.0129877432016303, 1e-12);
    EXPECT_NEAR(two_sample_mean(0.1, 0.05, PopulationCase::real, {6.0}) - two_sample_mean(0.1, 0.05), 0.1, 1e-14);
    EXPECT_EQ(two_sample_mean(0.1, 0.05, PopulationCase::complex), 0.0);
    EXPECT_NEAR(two_sample_mean(0.1, 0.05, PopulationCase::complex, {6.0}), 0.1, 1e-14);
}

TEST(TwoSample, MeanAgainstContour) {
    for (double y1 : grid5()) {
        for (double y2 : grid5()) {
            EXPECT_NEAR(two_sample_mean(y1, y2), oracles::mean_oracle_two_sample(y1, y2, 0.0), 1e-6) << y1 << " " << y2;
        }
    }
    EXPECT_NEAR(two_sample_mean(0.1, 0.05, PopulationCase::real, {6.0}), oracles::mean_oracle_two_sample(0.1, 0.05, 6.0),
                1e-6);
}

TEST(TwoSample, BetaShiftLinear) {
    for (double beta : {-1.5, 0.5, 2.0, 6.0, 20.0}) {
        for (double y1 : grid5()) {
            for (double y2 : grid5()) {
                const double shift = two_sample_mean(y1, y2, PopulationCase::real, {beta}) - two_sample_mean(y1, y2);
                const double expected = 0.5 * beta * (y1 * y1 * y2 + y1 * y2 * y2) / ((y1 + y2) * (y1 + y2));
                EXPECT_NEAR(shift, expected, 1e-14);
            }
        }
    }
}

TEST(TwoSample, VarExamples) {
    EXPECT_NEAR(two_sample_var(0.05, 0.05), 0.000657678418970783, 1e-15);
    EXPECT_EQ(two_sample_var(0.1, 0.05, PopulationCase::real, {6.0}), two_sample_var(0.1, 0.05));
    EXPECT_DOUBLE_EQ(two_sample_var(0.1, 0.05, PopulationCase::complex), 0.5 * two_sample_var(0.1, 0.05));
}

TEST(TwoSample, VarSymmetric) {
    for (double y1 : grid5()) {
        for (double y2 : grid5()) {
            EXPECT_NEAR(two_sample_var(y1, y2), two_sample_var(y2, y1), 1e-12);
        }
    }
}

TEST(TwoSample, VarLemma1Assembly) {
    for (double y1 : grid5()) {
        for (double y2 : grid5()) {
            EXPECT_NEAR(two_sample_var(y1, y2), assembled_var(y1, y2), 1e-10) << y1 << " " << y2;
        }
    }
}

TEST(TwoSample, MeanLemma1Assembly) {
    for (double y1 : grid5()) {
        for (double y2 : grid5()) {
            const auto lsd = FisherLsd::make(y1, y2);
            const double w = y2 / (y1 + y2);
            const double m = lemma1_mean(lemma1_solve({y1, y2}, lsd), lsd) - w * lemma1_mean(lemma1_solve({0.0, 1.0}, lsd), lsd);
            EXPECT_NEAR(two_sample_mean(y1, y2), m, 1e-12);
        }
    }
}

TEST(TwoSample, Constants) {
    const auto k = two_sample_constants(40, 400, 800, PopulationCase::real, {6.0});
    EXPECT_NEAR(k.centering, 40.0 * two_sample_centering(0.1, 0.05), 1e-12);
    EXPECT_NEAR(k.mean, two_sample_mean(0.1, 0.05) + 0.1, 1e-14);
    EXPECT_NEAR(k.variance, two_sample_var(0.1, 0.05), 1e-15);
}

TEST(FourthMoment, Feasibility) {
    EXPECT_NO_THROW(FourthMomentInfo{-2.0}.validate(PopulationCase::real));
    EXPECT_THROW(FourthMomentInfo{-2.5}.validate(PopulationCase::real), DomainError);
    EXPECT_THROW(FourthMomentInfo{-1.5}.validate(PopulationCase::complex), DomainError);
    EXPECT_THROW(two_sample_mean(0.1, 0.1, PopulationCase::real, {-3.0}), DomainError);
    EXPECT_THROW(two_sample_mean(0.0, 0.1), DomainError);
}
