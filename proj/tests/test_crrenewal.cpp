#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "looplaw/crrenewal.hpp"

using namespace looplaw;

namespace {

const CRGapLaw& law6() {
    static const CRGapLaw law = build_cr_gap_law(from_kappa(6.0));
    return law;
}

}  // namespace

TEST(PointMass, RenewalCountIsFloor) {
    const auto law = point_mass_gap_law(0.5);
    for (double c : {5.0, 7.0, 10.3}) {
        const auto r = estimate_renewal_rate(law, c, 20, 1);
        EXPECT_DOUBLE_EQ(r.rate.mean, std::floor(c / 0.5) / c);
        EXPECT_NEAR(r.rate.stderr, 0.0, 1e-15);
    }
    EXPECT_NEAR(gap_law_mean(law), 0.5, 1e-15);
    EXPECT_NEAR(gap_law_transform(law, 2.0), std::exp(-1.0), 1e-15);
    EXPECT_THROW(point_mass_gap_law(0.0), domain_error);
}

TEST(CrGapLaw, TableIsAValidCdf) {
    const auto& law = law6();
    EXPECT_NO_THROW(validate_gap_law(law));
    EXPECT_GE(law.tabulated_cdf.values.back(), 0.999);
    EXPECT_NEAR(law.tail_rate, -ssw_cr_threshold(from_kappa(6.0)), 1e-15);
    double prev = 0.0;
    for (double b = 0.0; b < 80.0; b += 0.37) {
        const double f = gap_cdf(law, b);
        EXPECT_GE(f, prev);
        EXPECT_LE(f, 1.0);
        prev = f;
    }
}

TEST(CrGapLaw, RoundTripsMoments) {
    const auto p = from_kappa(6.0);
    for (double lam : {0.5, 1.0, 2.0, 4.0})
        EXPECT_LT(std::abs(gap_law_transform(law6(), lam) / ssw_cr_moment(p, lam) - 1), 1e-4) << lam;
    EXPECT_LT(std::abs(gap_law_mean(law6()) * dilation_constant(p) - 1), 1e-4);
}

TEST(CrGapLaw, SamplesFollowTable) {
    const auto& law = law6();
    Rng rng(3, 0);
    std::vector<double> xs;
    for (int i = 0; i < 4000; ++i) {
        xs.push_back(sample_log_cr_gap(law, rng));
        ASSERT_GT(xs.back(), 0.0);
    }
    std::sort(xs.begin(), xs.end());
    double d = 0.0;
    const double n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = gap_cdf(law, xs[i]);
        d = std::max({d, (i + 1) / n - f, f - i / n});
    }
    EXPECT_LT(d, 1.63 / std::sqrt(n));
}

TEST(CrGapLaw, DerivativeMean) {
    for (double k : {3.0, 4.0, 6.0}) {
        const auto p = from_kappa(k);
        EXPECT_LT(std::abs(1 / cr_mean_from_moment(p) / dilation_constant(p) - 1), 1e-6) << k;
    }
}

TEST(CrGapLaw, DomainAndCsv) {
    EXPECT_THROW(build_cr_gap_law(from_kappa(2.0)), domain_error);
    const auto csv = cr_law_to_csv(point_mass_gap_law(1.5));
    EXPECT_EQ(csv, "b,F\n1.5,0\n1.5,1\n");
}

TEST(Renewal, RateAndHorizonWarning) {
    const auto r = estimate_renewal_rate(law6(), 200.0, 2000, 5);
    EXPECT_FALSE(r.short_horizon_warning);
    EXPECT_NEAR(r.rate.mean, dilation_constant(from_kappa(6.0)), 4 * r.rate.stderr + 0.01);
    EXPECT_TRUE(estimate_renewal_rate(law6(), 50.0, 10, 5).short_horizon_warning);
    const auto a = estimate_renewal_rate(law6(), 30.0, 100, 8, 1), b = estimate_renewal_rate(law6(), 30.0, 100, 8, 3);
    EXPECT_EQ(a.rate.mean, b.rate.mean);
}
