#pragma once

// Sums of 1/(l_1 ... l_n) over compositions l_1 + ... + l_n = p.

#include <cstdint>
#include <vector>

#include "bernoulli.hpp"
#include "check.hpp"

namespace cforge {

// Dynamic programme over partial sums: g_j[s] = sum_{a<s} g_{j-1}[a] / (s-a).
inline Rational curious_sum(std::uint64_t p, unsigned n) {
    if (n < 2 || n > 6) throw error(errc::out_of_range, "number of parts must lie in 2..6");
    if (p <= n) throw error(errc::out_of_range, "needs p > n");
    std::vector<Rational> f(p + 1, Rational(0));
    for (std::uint64_t s = 1; s <= p; ++s) f[s] = Rational(Integer(1), to_integer(s));
    std::vector<Rational> g = f;
    for (unsigned part = 2; part <= n; ++part) {
        std::vector<Rational> next(p + 1, Rational(0));
        for (std::uint64_t s = part; s <= p; ++s)
            for (std::uint64_t a = part - 1; a < s; ++a) next[s] += g[a] * f[s - a];
        g = std::move(next);
    }
    return g[p];
}

/// Closed form the sum should match: -(n-1)! B_{p-n} mod p for odd n and
/// -(n! n p)/(2(n+1)) B_{p-n-1} mod p^2 for even n.
inline Rational curious_closed_form(std::uint64_t p, unsigned n) {
    if (n % 2)
        return -Rational(factorial(n - 1)) * bernoulli(p - n);
    const Integer num = factorial(n) * to_integer(n) * to_integer(p);
    return -make_rational(num, to_integer(2 * (n + 1))) * bernoulli(p - n - 1);
}

inline unsigned curious_exponent(unsigned n) { return n % 2 ? 1 : 2; }

inline CheckOutcome curious_check(std::uint64_t p, unsigned n) {
    return judge(p, "CURIOUS", static_cast<long>(n), curious_exponent(n), {curious_sum(p, n), curious_closed_form(p, n)});
}

}  // namespace cforge
