#include <gtest/gtest.h>

#include "cforge/mhs.hpp"
#include "cforge/search.hpp"

using namespace cforge;

namespace {

Rational q(long n, long d) { return make_rational(Integer(n), Integer(d)); }

// e_k(1/1, ..., 1/(p-1)) by enumerating subsets
std::vector<Rational> subset_enumeration(std::uint64_t p) {
    std::vector<Rational> e(p, Rational(0));
    const std::uint64_t n = p - 1;
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        Rational prod = 1;
        for (std::uint64_t a = 0; a < n; ++a)
            if (mask >> a & 1) prod /= Rational(to_integer(a + 1));
        e[static_cast<std::size_t>(__builtin_popcountll(mask))] += prod;
    }
    return {e.begin() + 1, e.end()};
}

}  // namespace

TEST(MhsRow, NewtonExamples) {
    const MhsRow r = mhs_row_newton(5);
    const std::vector<Rational> expect{q(25, 12), q(35, 24), q(5, 12), q(1, 24)};
    EXPECT_EQ(r.values, expect);
    EXPECT_EQ(r.values, subset_enumeration(5));
    EXPECT_EQ(r.at(1), harmonic_power_sum(5, 1));
}

TEST(MhsRow, PolynomialOracleExamples) {
    EXPECT_EQ(mhs_row_poly_oracle(5), mhs_row_newton(5));
    EXPECT_EQ(mhs_row_poly_oracle(7).at(2), q(203, 90));
    EXPECT_EQ(Rational(24) * mhs_row_poly_oracle(5).at(2), Rational(stirling_row_exact(5).A(2)));
    EXPECT_EQ(mhs_row_newton(13).values, subset_enumeration(13));
}

TEST(MhsRow, PipelinesAgreeAndMatchStirling) {
    std::vector<std::uint64_t> primes = odd_primes_in(3, 61);
    primes.push_back(101);
    for (std::uint64_t p : primes) {
        const MhsRow newton = mhs_row_newton(p);
        ASSERT_EQ(newton, mhs_row_poly_oracle(p)) << p;
        if (p > 61) continue;
        const StirlingRow st = stirling_row_exact(p);
        const Rational fact(factorial(p - 1));
        EXPECT_EQ(newton.at(p - 1), 1 / fact);
        for (std::size_t j = 1; j + 1 < p; ++j) {
            EXPECT_EQ(Rational(st.A(p - 1 - j)), fact * newton.at(j)) << p << " " << j;
            EXPECT_GE(padic_valuation(newton.at(j), p), 1) << p << " " << j;
        }
    }
}

TEST(MhsFormula, Examples) {
    EXPECT_EQ(mhs_mod_formula(5, 3).value, 115u);
    EXPECT_EQ(mhs_mod_formula(5, 4).value, 99u);
    EXPECT_EQ(mhs_mod_formula(5, 1).value, 75u);
    EXPECT_EQ(mod_reduce(q(5, 12), PrimeModulus(5, 3)).value, 115u);
    EXPECT_EQ(mod_reduce(q(1, 24), PrimeModulus(5, 3)).value, 99u);
    EXPECT_THROW(mhs_mod_formula(5, 5), error);
}

TEST(MhsFormula, MatchesExactRow) {
    for (std::uint64_t p : odd_primes_in(7, 101)) {
        const MhsRow row = mhs_row_newton(p);
        for (std::size_t k = 1; k < p; ++k)
            EXPECT_EQ(mhs_mod_formula(p, k), mod_reduce(row.at(k), PrimeModulus(p, 3))) << p << " " << k;
    }
}

TEST(MhsBernoulliRelations, Examples) {
    const auto [ii, iii] = theorem2_relations(5, 2);
    EXPECT_EQ(ii.status, CheckStatus::pass);
    EXPECT_EQ(ii.lhs, "90");
    EXPECT_EQ(ii.rhs, "90");
    EXPECT_EQ(iii.status, CheckStatus::pass);
    EXPECT_EQ(iii.lhs, "35");
    EXPECT_EQ(iii.rhs, "35");
    EXPECT_EQ(theorem2_relations(7, 1).first.status, CheckStatus::pass);
    EXPECT_THROW(theorem2_relations(7, 6), error);
}

TEST(MhsBernoulliRelations, HoldAcrossPrimes) {
    for (std::uint64_t p : odd_primes_in(3, 31))
        for (std::size_t k = 1; k + 2 <= p; ++k) {
            const auto [ii, iii] = theorem2_relations(p, k);
            EXPECT_EQ(ii.status, CheckStatus::pass) << p << " " << k;
            EXPECT_EQ(iii.status, CheckStatus::pass) << p << " " << k;
        }
}

// H_1 = p A*_2 mod p^4 from p = 7 on; p = 5 is a counterexample of valuation 3
TEST(MhsRow, HarmonicAgainstDoubleSum) {
    for (std::uint64_t p : odd_primes_in(7, 101)) {
        const Rational d = harmonic_power_sum(p, 1) - Rational(to_integer(p)) * mhs_row_newton(p).at(2);
        EXPECT_TRUE(d == 0 || padic_valuation(d, p) >= 4) << p;
    }
    const Rational d5 = harmonic_power_sum(5, 1) - Rational(5) * mhs_row_newton(5).at(2);
    EXPECT_EQ(d5, q(-125, 24));
    EXPECT_EQ(padic_valuation(d5, 5), 3);
}
