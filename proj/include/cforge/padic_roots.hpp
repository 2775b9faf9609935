#pragma once

// Roots of f = X^(p-1) + (p-1)! in Z/p^3Z: Hensel lifts and the closed
// digit formulas built from delta0, delta1.

#include <cstdint>
#include <vector>

#include "sums.hpp"

namespace cforge {

enum class Result13Reading {
    carried,  // p t0 taken as the exact term i(1 + (p-1)! + p delta0(i))
    digits,   // t0 reduced to a canonical digit i(w_p + delta0(i)) mod p
};

/// roots[i-1] is the root congruent to i mod p; t0/t1 are its digits 1 and 2.
struct RootSet {
    std::uint64_t p = 0;
    std::vector<Residue> roots;
    std::vector<PadicDigit> t0;
    std::vector<PadicDigit> t1;
};

inline std::uint64_t factorial_mod(std::uint64_t n, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    for (std::uint64_t a = 2; a <= n; ++a) r = mulmod(r, a % m, m);
    return r;
}

// f(x) mod p^3
inline std::uint64_t root_polynomial_value(std::uint64_t p, std::uint64_t x) {
    const std::uint64_t m = PrimeModulus(p, 3).value();
    return (powmod(x % m, p - 1, m) + factorial_mod(p - 1, m)) % m;
}

inline RootSet lift_roots(std::uint64_t p) {
    const PrimeModulus m3(p, 3);
    const std::uint64_t m = m3.value();
    const std::uint64_t fact = factorial_mod(p - 1, m);
    RootSet out{p, {}, {}, {}};
    for (std::uint64_t i = 1; i < p; ++i) {
        std::uint64_t r = i;
        std::uint64_t pj = 1;
        std::uint64_t digits[2] = {0, 0};
        // f'(r) = (p-1) r^(p-2) is a unit, so each level has exactly one digit.
        const std::uint64_t deriv_inv = powmod(mulmod(p - 1, powmod(i, p - 2, p), p), p - 2, p);
        for (int level = 0; level < 2; ++level) {
            pj *= p;
            const std::uint64_t fr = (powmod(r, p - 1, m) + fact) % m;
            const std::uint64_t c = fr / pj % p;  // f(r) = c p^j mod p^(j+1)
            const std::uint64_t t = (p - mulmod(c, deriv_inv, p)) % p;
            digits[level] = t;
            r = (r + t * pj) % m;
        }
        out.roots.emplace_back(m3, r);
        out.t0.push_back({digits[0]});
        out.t1.push_back({digits[1]});
    }
    return out;
}

inline Residue result13_root(std::uint64_t p, std::uint64_t i, Result13Reading reading = Result13Reading::carried,
                             bool force = false) {
    if (i < 1 || i >= p) throw error(errc::out_of_range, "root index must lie in 1..p-1");
    if (reading == Result13Reading::digits && p < 7 && !force)
        throw error(errc::out_of_range, "digit reading of the root formula needs p >= 7");
    const PrimeModulus m3(p, 3);
    const std::uint64_t m = m3.value();
    std::uint64_t s = 0;
    for (std::uint64_t k = 1; k < p; ++k) s = (s + delta(k, p).delta0.value) % p;
    const DeltaPair d = delta(i, p);
    const std::uint64_t d0 = d.delta0.value, d1 = d.delta1.value;
    const std::uint64_t t1 = mulmod(i, (d0 + d1 + mulmod(s, s, p) + mulmod(1 + d0, s, p)) % p, p);
    std::uint64_t pt0 = 0;
    if (reading == Result13Reading::carried) {
        pt0 = mulmod(i, (1 + factorial_mod(p - 1, m) + p * d0) % m, m);
    } else {
        const std::uint64_t w = (factorial_mod(p - 1, p * p) + 1) / p % p;
        pt0 = p * mulmod(i, (w + d0) % p, p);
    }
    return {m3, (i + pt0 + p * p * t1) % m};
}

inline Residue root_product(const RootSet& rs) {
    const PrimeModulus m3(rs.p, 3);
    Residue prod(m3, 1);
    for (const Residue& r : rs.roots) prod = prod * r;
    return prod;
}

// Coefficients (lowest degree first) of prod (X - r_i) over Z/p^3Z.
inline std::vector<std::uint64_t> expand_roots(const RootSet& rs) {
    const std::uint64_t m = PrimeModulus(rs.p, 3).value();
    std::vector<std::uint64_t> c{1};
    for (const Residue& r : rs.roots) {
        const std::uint64_t neg = (m - r.value) % m;
        std::vector<std::uint64_t> next(c.size() + 1, 0);
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] = (next[j + 1] + c[j]) % m;
            next[j] = (next[j] + mulmod(c[j], neg, m)) % m;
        }
        c = std::move(next);
    }
    return c;
}

}  // namespace cforge
