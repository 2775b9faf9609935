#include <gtest/gtest.h>

#include "cforge/bernoulli.hpp"
#include "cforge/search.hpp"
#include "cforge/sums.hpp"

using namespace cforge;

namespace {
Rational q(long n, long d) { return make_rational(Integer(n), Integer(d)); }
}  // namespace

TEST(PowerSum, Examples) {
    EXPECT_EQ(power_sum(5, 2), 30);
    EXPECT_EQ(power_sum(5, 0), 4);
    EXPECT_EQ(power_sum(7, 1), 21);
}

TEST(PowerSum, ReducesToMinusOneOrZero) {
    for (std::uint64_t p : odd_primes_in(3, 41))
        for (unsigned long k = 1; k <= 3 * p; ++k) {
            const std::uint64_t expect = k % (p - 1) == 0 ? p - 1 : 0;
            EXPECT_EQ(mod_reduce(power_sum(p, k), PrimeModulus(p, 1)).value, expect) << p << " " << k;
        }
}

TEST(HarmonicPowerSum, Examples) {
    EXPECT_EQ(harmonic_power_sum(5, 1), q(25, 12));
    EXPECT_EQ(harmonic_power_sum(7, 1), q(49, 20));
    EXPECT_EQ(harmonic_power_sum(5, 2), q(205, 144));
    EXPECT_THROW(harmonic_power_sum(5, 0), error);
}

TEST(Harmonic, Examples) {
    EXPECT_EQ(harmonic(0), 0);
    EXPECT_EQ(harmonic(1), 1);
    EXPECT_EQ(harmonic(4), q(25, 12));
}

TEST(FermatQuotient, Examples) {
    EXPECT_EQ(fermat_quotient(2, 5), 3);
    EXPECT_EQ(fermat_quotient(1, 11), 0);
    EXPECT_EQ(fermat_quotient(3, 7), 104);
    try {
        fermat_quotient(10, 5);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), errc::base_divisible);
    }
}

TEST(FermatQuotient, WordPathMatchesExact) {
    for (std::uint64_t p : odd_primes_in(3, 101))
        for (std::uint64_t a = 1; a < p; ++a)
            EXPECT_EQ(fermat_quotient_mod_p(a, p), mod_reduce(fermat_quotient(a, p), PrimeModulus(p, 1)).value);
}

TEST(WilsonQuotient, Examples) {
    EXPECT_EQ(wilson_quotient(5), 5);
    EXPECT_EQ(wilson_quotient(7), 103);
    EXPECT_EQ(mod_reduce(wilson_quotient(13), PrimeModulus(13, 1)).value, 0u);
}

TEST(Delta, Examples) {
    EXPECT_EQ(delta(2, 5), (DeltaPair{{3}, {0}}));
    EXPECT_EQ(delta(1, 13), (DeltaPair{{0}, {0}}));
    EXPECT_EQ(delta(3, 7), (DeltaPair{{6}, {0}}));
}

TEST(Delta, DigitsRebuildThePower) {
    for (std::uint64_t p : odd_primes_in(3, 101))
        for (std::uint64_t k = 1; k < p; ++k) {
            const DeltaPair d = delta(k, p);
            const std::uint64_t m = p * p * p;
            EXPECT_EQ(powmod(k, p - 1, m), (1 + p * d.delta0.value + p * p * d.delta1.value) % m);
            const Rational quotient = Rational(integer_pow(k, p - 1) - 1) / Rational(to_integer(p));
            EXPECT_EQ(d.delta0, hensel_digit(quotient, p, 0));
        }
}

TEST(EmWeightedSum, Examples) {
    EXPECT_EQ(em_weighted_sum(7, 4).value, 2u);
    EXPECT_EQ(em_weighted_sum(7, -2).value, 2u);
    EXPECT_EQ(em_weighted_sum(5, -2).value, 1u);
}

// H_m = 0 mod p for even m and mod p^2 for odd m once p >= m+3
TEST(HarmonicPowerSum, GeneralizedWolstenholme) {
    for (std::uint64_t p : odd_primes_in(3, 101))
        for (unsigned long m = 1; m <= 8; ++m) {
            if (p < m + 3) continue;
            const Rational h = harmonic_power_sum(p, m);
            EXPECT_GE(padic_valuation(h, p), m % 2 ? 2 : 1) << p << " " << m;
        }
}

TEST(HarmonicPowerSum, Wolstenholme) {
    for (std::uint64_t p : odd_primes_in(5, 101)) EXPECT_GE(padic_valuation(harmonic_power_sum(p, 1), p), 2);
}

TEST(HarmonicPowerSum, EvenIndexModPSquared) {
    for (std::uint64_t p : odd_primes_in(5, 101))
        for (unsigned long k = 1; 2 * k + 3 <= p; ++k) {
            const Rational rhs = make_rational(to_integer(2 * k), to_integer(2 * k + 1)) * Rational(to_integer(p)) *
                                 bernoulli(p - 1 - 2 * k);
            EXPECT_TRUE(congruent(harmonic_power_sum(p, 2 * k), rhs, p, 2)) << p << " " << k;
        }
}
