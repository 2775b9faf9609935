#include <gtest/gtest.h>

#include "cforge/bridge.hpp"
#include "cforge/convolutions.hpp"
#include "cforge/search.hpp"

using namespace cforge;

namespace {
Rational q(long n, long d) { return make_rational(Integer(n), Integer(d)); }
}  // namespace

TEST(FullConvolution, Examples) {
    EXPECT_EQ(full_conv_divided(4), q(1, 144));
    EXPECT_EQ(full_conv_divided(6), q(-1, 720));
    EXPECT_EQ(full_conv_divided(5), 0);
    EXPECT_THROW(full_conv_divided(3), error);
}

TEST(TruncatedConvolution, Examples) {
    EXPECT_EQ(truncated_conv(11, 6), q(-1, 30240));
    EXPECT_EQ(mod_reduce(Rational(121 * truncated_conv(11, 6)), PrimeModulus(11, 3)).value, 1210u);
    EXPECT_EQ(truncated_conv(7, 4), q(1, 14400));
    EXPECT_EQ(truncated_conv(7, 2), 0);
    EXPECT_THROW(truncated_conv(7, 6), error);
    EXPECT_THROW(truncated_conv(11, 3), error);
}

TEST(OrdinaryConvolution, Examples) {
    EXPECT_EQ(ordinary_conv(4), q(1, 36));
    EXPECT_EQ(ordinary_conv(6), q(-1, 90));
    EXPECT_EQ(mod_reduce(ordinary_conv(4), PrimeModulus(7, 1)), mod_reduce(Rational(-2 * bernoulli(4)), PrimeModulus(7, 1)));
    EXPECT_EQ(mod_reduce(ordinary_conv(4), PrimeModulus(7, 1)).value, 1u);
}

TEST(Identities, Examples) {
    EXPECT_EQ(identity_residual(Identity::euler, 2), 0);
    EXPECT_EQ(identity_residual(Identity::miki, 4), 0);
    EXPECT_EQ(identity_residual(Identity::miki, 3), 0);
    EXPECT_EQ(identity_residual(Identity::dunne_schubert, 2), 0);
    EXPECT_EQ(identity_residual(Identity::spivey, 3), 0);
    EXPECT_EQ(spivey_sum(3), q(-1, 3));
    EXPECT_EQ(identity_residual(Identity::chu_vandermonde, 0, {5, 7, 6}), 0);
}

TEST(Identities, Thresholds) {
    EXPECT_THROW(euler_residual(0), error);
    EXPECT_THROW(miki_residual(2), error);
    EXPECT_THROW(dunne_schubert_residual(1), error);
    EXPECT_THROW(spivey_residual(0), error);
}

TEST(Identities, HoldOverTheirRanges) {
    for (std::size_t n = 1; n <= 60; ++n) EXPECT_EQ(euler_residual(n), 0) << n;
    for (std::size_t n = 3; n <= 60; ++n) EXPECT_EQ(miki_residual(n), 0) << n;
    for (std::size_t n = 2; n <= 30; ++n) EXPECT_EQ(dunne_schubert_residual(n), 0) << n;
    for (std::size_t n = 1; n <= 200; ++n) EXPECT_EQ(spivey_sum(n), q(-1, static_cast<long>(n))) << n;
    for (unsigned long m = 0; m <= 30; ++m)
        for (unsigned long n = 0; n <= 30; ++n)
            for (unsigned long r = 0; r <= 30; ++r) ASSERT_EQ(chu_residual(m, n, r), 0) << m << " " << n << " " << r;
}

// the identity fails at n = 1: the left side is empty and the right is B_2 H_2 = 1/4
TEST(Identities, DunneSchubertBoundary) { EXPECT_EQ(dunne_schubert_residual_unchecked(1), q(-1, 4)); }

TEST(BinomialModPSquared, Examples) {
    const auto [l52, r52] = binom_p1_check(5, 2);
    EXPECT_EQ(l52.value, 6u);
    EXPECT_EQ(r52.value, 6u);
    const auto [l0, r0] = binom_p1_check(11, 0);
    EXPECT_EQ(l0.value, 1u);
    EXPECT_EQ(r0.value, 1u);
    const auto [l73, r73] = binom_p1_check(7, 3);
    EXPECT_EQ(l73.value, 20u);
    EXPECT_EQ(r73.value, 20u);
    for (std::uint64_t p : odd_primes_in(3, 61))
        for (unsigned long j = 0; j < p; ++j) {
            const auto [l, r] = binom_p1_check(p, j);
            EXPECT_EQ(l, r) << p << " " << j;
        }
}

TEST(HarmonicDifference, Examples) {
    EXPECT_EQ(lemma6_residual(11, 2).value, 0u);
    EXPECT_EQ(lemma6_residual(13, 2).value, 0u);
    EXPECT_THROW(lemma6_residual(11, 3), error);
    for (std::uint64_t p : odd_primes_in(7, 101))
        for (std::size_t n = 0; 2 * n + 5 < p; ++n) EXPECT_EQ(lemma6_residual(p, n).value, 0u) << p << " " << n;
}

TEST(Bridge, PinnedWitnesses) {
    const auto at11 = bridge::bridge_checks(11, 6);
    const auto it = std::find_if(at11.begin(), at11.end(), [](const CheckOutcome& o) { return o.check_id == "P1-iii"; });
    ASSERT_NE(it, at11.end());
    EXPECT_EQ(it->status, CheckStatus::pass);
    EXPECT_EQ(it->lhs, "1210");
    EXPECT_EQ(it->rhs, "1210");

    const auto at17 = bridge::bridge_checks(17, 14);
    ASSERT_EQ(at17.size(), 1u);
    EXPECT_EQ(at17[0].check_id, "P1-ii");
    EXPECT_EQ(at17[0].lhs, "1734");
    EXPECT_EQ(at17[0].rhs, "1734");

    PrimeContext c5(5);
    const Sides s = bridge::p2_54(c5);
    EXPECT_EQ(s.lhs, q(25, 288));
    EXPECT_EQ(s.rhs, q(-25, 1152));
    EXPECT_EQ(mod_reduce(s.lhs, PrimeModulus(5, 3)).value, 50u);
    EXPECT_EQ(mod_reduce(s.rhs, PrimeModulus(5, 3)).value, 50u);
}

TEST(Bridge, RangesAndRearrangementsAgree) {
    EXPECT_THROW(bridge::bridge_checks(11, 5), error);
    EXPECT_THROW(bridge::bridge_checks(11, 10), error);
    for (std::uint64_t p : odd_primes_in(5, 101)) {
        for (std::size_t tn = 0; tn + 3 <= p; tn += 2) {
            const auto outs = bridge::bridge_checks(p, tn);
            for (const auto& o : outs) EXPECT_EQ(o.status, CheckStatus::pass) << p << " " << tn << " " << o.check_id;
            auto status_of = [&](const char* id) {
                for (const auto& o : outs)
                    if (o.check_id == id) return std::optional<CheckStatus>(o.status);
                return std::optional<CheckStatus>();
            };
            EXPECT_EQ(status_of("T1-i"), status_of("EQ79")) << p << " " << tn;
        }
    }
}
