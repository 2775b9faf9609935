#pragma once

// Power sums, generalized harmonic numbers over 1..p-1, plain harmonic
// numbers, Fermat and Wilson quotients.

#include <cstdint>

#include "exactnum.hpp"

namespace cforge {

struct DeltaPair {
    PadicDigit delta0;
    PadicDigit delta1;
    bool operator==(const DeltaPair&) const = default;
};

// S_k = sum_{a=1}^{p-1} a^k
inline Integer power_sum(std::uint64_t p, unsigned long k) {
    Integer s = 0;
    for (std::uint64_t a = 1; a < p; ++a) s += integer_pow(a, k);
    return s;
}

// H_k = sum_{a=1}^{p-1} 1/a^k
inline Rational harmonic_power_sum(std::uint64_t p, unsigned long k) {
    if (k == 0) throw error(errc::out_of_range, "harmonic power sum needs k >= 1");
    Rational s = 0;
    for (std::uint64_t a = 1; a < p; ++a) s += Rational(Integer(1), integer_pow(a, k));
    return s;
}

// 1 + 1/2 + ... + 1/n, with the empty sum at n = 0.
inline Rational harmonic(unsigned long n) {
    Rational s = 0;
    for (unsigned long j = 1; j <= n; ++j) s += Rational(1, j);
    return s;
}

inline Integer fermat_quotient(std::uint64_t a, std::uint64_t p) {
    if (a == 0 || a % p == 0)
        throw error(errc::base_divisible, std::to_string(p) + " divides the base " + std::to_string(a));
    return (integer_pow(a, p - 1) - 1) / to_integer(p);
}

// q_a mod p without forming a^(p-1) exactly.
inline std::uint64_t fermat_quotient_mod_p(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0)
        throw error(errc::base_divisible, std::to_string(p) + " divides the base " + std::to_string(a));
    const std::uint64_t p2 = p * p;
    return (powmod(a, p - 1, p2) + p2 - 1) % p2 / p;
}

inline Integer wilson_quotient(std::uint64_t p) { return (factorial(p - 1) + 1) / to_integer(p); }

// Digits with k^(p-1) = 1 + p delta0 + p^2 delta1 (mod p^3).
inline DeltaPair delta(std::uint64_t k, std::uint64_t p) {
    if (k % p == 0)
        throw error(errc::base_divisible, std::to_string(p) + " divides the base " + std::to_string(k));
    const PrimeModulus m3(p, 3);
    const std::uint64_t r = powmod(k, p - 1, m3.value());
    const std::uint64_t t = (r + m3.value() - 1) % m3.value() / p;
    return {{t % p}, {t / p}};
}

/// Ernvall-Metsankyla weight: sum_{a=1}^{p-1} q_a^2 a^e mod p for any integer
/// exponent e (negative exponents through inverses). Only q_a mod p is used.
inline Residue em_weighted_sum(std::uint64_t p, long e) {
    const PrimeModulus m(p, 1);
    std::uint64_t total = 0;
    for (std::uint64_t a = 1; a < p; ++a) {
        const std::uint64_t q = fermat_quotient_mod_p(a, p);
        const std::uint64_t base = e >= 0 ? a : powmod(a, p - 2, p);
        const std::uint64_t e_abs = static_cast<std::uint64_t>(e >= 0 ? e : -e);
        total = (total + mulmod(mulmod(q, q, p), powmod(base, e_abs, p), p)) % p;
    }
    return {m, total};
}

}  // namespace cforge
