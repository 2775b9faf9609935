#pragma once

// Congruences linking the truncated convolution, the full convolution and the
// Stirling row. Each evaluator returns both sides exactly; comparison is mod p^3.

#include <cstdint>
#include <vector>

#include "check.hpp"
#include "context.hpp"
#include "convolutions.hpp"

namespace cforge::bridge {

inline Rational db(std::size_t n) { return divided_bernoulli(n); }

// p^2/2 TC(p,2n) = -p^2/2 CB(p-1-2n) + p (Bd_{2(p-1)-2n} - Bd_{p-1-2n}) + p^2 (AG-1) Bd_{p-1-2n}
inline Sides t1_i(PrimeContext& c, std::size_t two_n) {
    const std::uint64_t p = c.p();
    const Rational& pp = c.pq();
    const Rational p2 = pp * pp;
    const Rational rhs = -p2 / 2 * full_conv_divided(p - 1 - two_n) +
                         pp * (db(2 * (p - 1) - two_n) - db(p - 1 - two_n)) + p2 * (c.ag() - 1) * db(p - 1 - two_n);
    return {p2 / 2 * truncated_conv(p, two_n), rhs};
}

// the same statement with the factor 2/p^2 cleared differently
inline Sides eq79(PrimeContext& c, std::size_t two_n) {
    const std::uint64_t p = c.p();
    const Rational& pp = c.pq();
    const Rational p2 = pp * pp;
    const Rational b = db(p - 1 - two_n);
    const Rational rhs = -p2 * full_conv_divided(p - 1 - two_n) + 2 * pp * db(2 * (p - 1) - two_n) -
                         2 * (pp + p2) * b + 2 * c.ag() * p2 * b;
    return {p2 * truncated_conv(p, two_n), rhs};
}

// p^2 TC = -p^2 CB + 2p Bd_{2(p-1)-2n} p (h_{2(p-1)-2n} - h_{p-1-2n})
//          + 2(p+1) p B_{p-1} (1 + p/(2n+1)) p Bd_{p-1-2n}
inline Sides p1_i(PrimeContext& c, std::size_t two_n) {
    const std::uint64_t p = c.p();
    const Rational& pp = c.pq();
    const Rational p2 = pp * pp;
    const Rational rhs =
        -p2 * full_conv_divided(p - 1 - two_n) +
        2 * pp * db(2 * (p - 1) - two_n) * pp * (c.harm(2 * (p - 1) - two_n) - c.harm(p - 1 - two_n)) +
        2 * (pp + 1) * c.pB() * (1 + pp / detail::rat(two_n + 1)) * pp * db(p - 1 - two_n);
    return {p2 * truncated_conv(p, two_n), rhs};
}

// 2n = p-3: p^2 sum_{i=4}^{p-3} Bd_i Bd_{p+1-i} = 2p Bd_{p+1} + p^2 Bd_2 + 2p Bd_2 p B_{p-1}
inline Sides p1_ii(PrimeContext& c) {
    const std::uint64_t p = c.p();
    const Rational& pp = c.pq();
    Rational s = 0;
    for (std::size_t i = 4; i + 3 <= p; ++i) s += db(i) * db(p + 1 - i);
    return {pp * pp * s, 2 * pp * db(p + 1) + pp * pp * db(2) + 2 * pp * db(2) * c.pB()};
}

// 2n = p-5: p^2 sum_{i=6}^{p-3} Bd_i Bd_{p+3-i} = 7p^2/720 + 2p Bd_{p+3} + 2p Bd_4 p B_{p-1}
inline Sides p1_iii(PrimeContext& c) {
    const std::uint64_t p = c.p();
    const Rational& pp = c.pq();
    Rational s = 0;
    for (std::size_t i = 6; i + 3 <= p; ++i) s += db(i) * db(p + 3 - i);
    return {pp * pp * s, Rational(7, 720) * pp * pp + 2 * pp * db(p + 3) + 2 * pp * db(4) * c.pB()};
}

// p^2/2 CB(p-1-2n) = A_{p-1-2n} + p Bd_{p-1-2n}, 0 <= 2n <= p-5
inline Sides p2(PrimeContext& c, std::size_t two_n) {
    const std::uint64_t p = c.p();
    const Rational& pp = c.pq();
    return {pp * pp / 2 * full_conv_divided(p - 1 - two_n), c.A(p - 1 - two_n) + pp * db(p - 1 - two_n)};
}

// p^2/2 CB(p-1) = p Bd_{2p-2} - p^2 Bd_{p-1}^2 / 2
inline Sides p2_54(PrimeContext& c) {
    const std::uint64_t p = c.p();
    const Rational& pp = c.pq();
    const Rational b = db(p - 1);
    return {pp * pp / 2 * full_conv_divided(p - 1), pp * db(2 * p - 2) - pp * pp * b * b / 2};
}

inline Sides eq55(PrimeContext& c) { return {Rational(c.fact()), sun_factorial_value(c.p())}; }

/// Every bridge congruence whose range contains 2n, judged mod p^3.
inline std::vector<CheckOutcome> bridge_checks(std::uint64_t p, std::size_t two_n) {
    if (two_n % 2 != 0 || two_n + 3 > p) throw error(errc::out_of_range, "needs even 0 <= 2n <= p-3");
    PrimeContext c(p);
    const long idx = static_cast<long>(two_n);
    std::vector<CheckOutcome> out;
    if (two_n >= 4 && two_n + 7 <= p) {
        out.push_back(judge(p, "T1-i", idx, 3, t1_i(c, two_n)));
        out.push_back(judge(p, "EQ79", idx, 3, eq79(c, two_n)));
        out.push_back(judge(p, "P1-i", idx, 3, p1_i(c, two_n)));
    }
    if (two_n + 3 == p && p >= 5) out.push_back(judge(p, "P1-ii", std::nullopt, 3, p1_ii(c)));
    if (two_n + 5 == p && p >= 7) out.push_back(judge(p, "P1-iii", std::nullopt, 3, p1_iii(c)));
    if (two_n + 5 <= p) out.push_back(judge(p, "P2", idx, 3, p2(c, two_n)));
    if (two_n == 0) {
        out.push_back(judge(p, "P2-54", std::nullopt, 3, p2_54(c)));
        out.push_back(judge(p, "EQ55", std::nullopt, 3, eq55(c)));
    }
    if (out.empty()) throw error(errc::out_of_range, "no bridge congruence covers this index");
    return out;
}

}  // namespace cforge::bridge
