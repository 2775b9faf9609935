#include <functional>
#include <set>

#include <gtest/gtest.h>

#include "cforge/report.hpp"
#include "cforge/verifier.hpp"

using namespace cforge;

namespace {

Rational q(long n, long d) { return make_rational(Integer(n), Integer(d)); }

CheckOutcome only(const std::vector<CheckOutcome>& v) {
    EXPECT_EQ(v.size(), 1u);
    return v.front();
}

// brute force over all compositions of `remaining` into `parts` parts
Rational compositions(std::uint64_t remaining, unsigned parts) {
    if (parts == 1) return Rational(Integer(1), to_integer(remaining));
    Rational s = 0;
    for (std::uint64_t first = 1; first + parts - 1 <= remaining; ++first)
        s += Rational(Integer(1), to_integer(first)) * compositions(remaining - first, parts - 1);
    return s;
}

}  // namespace

TEST(Registry, ShapeAndUniqueness) {
    const auto& r = registry();
    EXPECT_GE(r.size(), 35u);
    std::set<std::string> ids;
    for (const CheckSpec& s : r) {
        EXPECT_TRUE(ids.insert(s.id).second) << s.id;
        EXPECT_FALSE(s.description.empty());
        EXPECT_FALSE(s.paper_anchor.empty());
        EXPECT_LE(s.exponent, 4u);
        EXPECT_TRUE(static_cast<bool>(s.evaluate)) << s.id;
    }
    const CheckSpec* p1iii = find_check("P1-iii");
    ASSERT_NE(p1iii, nullptr);
    EXPECT_EQ(p1iii->exponent, 3u);
    EXPECT_EQ(find_check("NOPE"), nullptr);
}

TEST(RunChecks, PinnedWitnesses) {
    const CheckOutcome a = only(run_checks({11}, {"P1-iii"}));
    EXPECT_EQ(a.status, CheckStatus::pass);
    EXPECT_EQ(a.lhs, "1210");
    EXPECT_EQ(a.rhs, "1210");
    EXPECT_EQ(a.modulus, "11^3");
    const CheckOutcome b = only(run_checks({17}, {"P1-ii"}));
    EXPECT_EQ(b.status, CheckStatus::pass);
    EXPECT_EQ(b.lhs, "1734");
    EXPECT_EQ(b.modulus, "17^3");
    const CheckOutcome c = only(run_checks({5}, {"T00"}));
    EXPECT_EQ(c.status, CheckStatus::skipped);
    EXPECT_EQ(c.reason, "requires p ≥ 7");
}

TEST(RunChecks, SmallPrimeInstances) {
    const CheckOutcome t01 = only(run_checks({7}, {"T01"}));
    EXPECT_EQ(t01.lhs, "252");
    EXPECT_EQ(t01.rhs, "252");
    const CheckOutcome t00 = only(run_checks({7}, {"T00"}));
    EXPECT_EQ(t00.lhs, "1323");
    EXPECT_EQ(t00.rhs, "1323");
    EXPECT_EQ(t00.modulus, "7^4");
    const CheckOutcome t02 = only(run_checks({7}, {"T02"}));
    EXPECT_EQ(t02.lhs, "2");
    EXPECT_EQ(t02.rhs, "2");
}

TEST(RunChecks, Errors) {
    try {
        run_checks(std::vector<std::uint64_t>{9}, {});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), errc::invalid_prime);
    }
    try {
        run_checks({7}, {"NOT-A-CHECK"});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), errc::unknown_check_id);
    }
}

TEST(RunChecks, OrderingAndCompleteness) {
    const std::vector<std::uint64_t> primes{13, 7, 11};
    const auto out = run_checks(primes, {}, {4, false});
    EXPECT_TRUE(std::is_sorted(out.begin(), out.end(), outcome_less));
    std::size_t expected = 0;
    for (std::uint64_t p : primes)
        for (const CheckSpec& s : registry()) {
            if (p < s.min_prime || !s.indexed()) {
                ++expected;
                continue;
            }
            const std::size_t n = s.indices(p).size();
            expected += n ? n : 1;
        }
    EXPECT_EQ(out.size(), expected);
    for (const auto& o : out) {
        if (o.status == CheckStatus::fail) ADD_FAILURE() << o.prime << " " << o.check_id;
        if (o.status == CheckStatus::skipped) {
            EXPECT_FALSE(o.reason.empty());
        }
        EXPECT_FALSE(o.paper_anchor.empty());
    }
}

TEST(RunChecks, DeterministicAcrossJobCounts) {
    const auto primes = odd_primes_in(7, 37);
    const std::string one = emit_string(run_checks(primes, {}, {1, false}), Format::json);
    const std::string many = emit_string(run_checks(primes, {}, {8, false}), Format::json);
    EXPECT_EQ(one, many);
}

TEST(RunChecks, NothingSkippedFromElevenOn) {
    for (const auto& o : run_checks(odd_primes_in(11, 23), {}, {4, false})) {
        EXPECT_NE(o.status, CheckStatus::skipped) << o.prime << " " << o.check_id << " " << o.reason;
        EXPECT_NE(o.status, CheckStatus::fail) << o.prime << " " << o.check_id;
    }
}

TEST(RunChecks, ThresholdCounterexamples) {
    // below the declared thresholds these checks are genuinely false
    auto forced = [](std::uint64_t p, const char* id) { return run_checks({p}, {id}, {1, true}); };
    for (const char* id : {"T03-A4", "T03-S5", "RMK3-b"}) {
        const auto out = forced(7, id);
        EXPECT_TRUE(any_fail(out)) << id;
    }
    EXPECT_TRUE(any_fail(forced(3, "EQ55")));
    EXPECT_TRUE(any_fail(forced(5, "EQ92")));
    EXPECT_TRUE(any_fail(forced(5, "P1-iii")));
}

TEST(NegativeControls, AllFailAtFive) {
    const auto audit = negative_control_audit();
    ASSERT_EQ(audit.size(), 4u);
    for (const auto& o : audit) EXPECT_EQ(o.status, CheckStatus::fail) << o.check_id;
    const Rational d = harmonic_power_sum(5, 1) - Rational(5) * mhs_row_newton(5).at(2);
    EXPECT_EQ(padic_valuation(d, 5), 3);
    const Rational t00 = harmonic_power_sum(5, 1) + Rational(25) * (divided_bernoulli(6) - 2 * divided_bernoulli(2));
    EXPECT_EQ(t00, q(-125, 63));
}

TEST(FaultInjection, FailsEverywhere) {
    const auto out = run_checks(registry_with_fault(), {7, 11}, {"FAULT"});
    ASSERT_EQ(out.size(), 2u);
    for (const auto& o : out) {
        EXPECT_EQ(o.status, CheckStatus::fail);
        EXPECT_FALSE(o.lhs.empty());
        EXPECT_FALSE(o.rhs.empty());
    }
}

TEST(Curious, Examples) {
    EXPECT_EQ(curious_sum(7, 3), q(29, 15));
    EXPECT_EQ(curious_sum(5, 3), q(7, 4));
    EXPECT_EQ(curious_sum(7, 2), q(7, 10));
    EXPECT_EQ(curious_closed_form(7, 2), q(7, 45));
    EXPECT_EQ(curious_check(7, 3).status, CheckStatus::pass);
    EXPECT_EQ(curious_check(7, 3).lhs, "1");
    EXPECT_EQ(curious_check(5, 3).lhs, "3");
    EXPECT_EQ(curious_check(7, 2).status, CheckStatus::pass);
    EXPECT_THROW(curious_sum(7, 7), error);
    EXPECT_THROW(curious_sum(5, 1), error);
}

TEST(Curious, DynamicProgrammeMatchesEnumeration) {
    for (std::uint64_t p : odd_primes_in(5, 23))
        for (unsigned n = 2; n <= 6 && n < p; ++n) EXPECT_EQ(curious_sum(p, n), compositions(p, n)) << p << " " << n;
}

TEST(Curious, ClosedFormsFromNPlusTwo) {
    for (std::uint64_t p : odd_primes_in(5, 31))
        for (unsigned n = 2; n <= 6 && n + 2 <= p; ++n)
            EXPECT_EQ(curious_check(p, n).status, CheckStatus::pass) << p << " " << n;
    EXPECT_EQ(curious_check(7, 6).status, CheckStatus::fail);
    EXPECT_EQ(curious_check(3, 2).status, CheckStatus::fail);
}
