#pragma once

// Exact integers and rationals (GMP), prime-power moduli, reduction of
// p-integral rationals into Z/p^kZ, valuations and Hensel digits.

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "error.hpp"

namespace cforge {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw error(errc::undefined_for_zero, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), e);
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline Integer integer_pow(unsigned long base, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

// Always "numerator/denominator", including integers ("24/1").
inline std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(std::string_view text) {
    Rational q;
    if (q.set_str(std::string(text), 10) != 0 || q.get_den() == 0)
        throw error(errc::usage, "malformed rational '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

// --- machine-word modular helpers -------------------------------------------

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin; this witness set is exact on all of uint64.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// --- domain types --------------------------------------------------------

class PrimeModulus {
public:
    PrimeModulus(std::uint64_t p, unsigned k) : p_(p), k_(k) {
        if (p < 3 || !is_prime(p))
            throw error(errc::invalid_prime, std::to_string(p) + " is not an odd prime");
        if (k < 1) throw error(errc::out_of_range, "modulus exponent must be >= 1");
        unsigned __int128 m = 1;
        for (unsigned i = 0; i < k; ++i) {
            m *= p;
            if (m >= (static_cast<unsigned __int128>(1) << 63))
                throw error(errc::out_of_range, "p^k exceeds 63 bits");
        }
        value_ = static_cast<std::uint64_t>(m);
    }

    std::uint64_t prime() const noexcept { return p_; }
    unsigned exponent() const noexcept { return k_; }
    std::uint64_t value() const noexcept { return value_; }
    std::string to_string() const { return std::to_string(p_) + "^" + std::to_string(k_); }

    bool operator==(const PrimeModulus&) const = default;

private:
    std::uint64_t p_;
    unsigned k_;
    std::uint64_t value_;
};

struct Residue {
    PrimeModulus modulus;
    std::uint64_t value;

    Residue(PrimeModulus m, std::uint64_t v) : modulus(m), value(v % m.value()) {}

    bool operator==(const Residue&) const = default;
    std::string to_string() const { return std::to_string(value); }
};

inline void require_same_modulus(const Residue& a, const Residue& b) {
    if (!(a.modulus == b.modulus)) throw error(errc::out_of_range, "residues live in different rings");
}

inline Residue operator+(const Residue& a, const Residue& b) {
    require_same_modulus(a, b);
    const std::uint64_t m = a.modulus.value();
    return {a.modulus, (a.value + b.value) % m};
}

inline Residue operator-(const Residue& a, const Residue& b) {
    require_same_modulus(a, b);
    const std::uint64_t m = a.modulus.value();
    return {a.modulus, (a.value + m - b.value) % m};
}

inline Residue operator*(const Residue& a, const Residue& b) {
    require_same_modulus(a, b);
    return {a.modulus, mulmod(a.value, b.value, a.modulus.value())};
}

struct PadicDigit {
    std::uint64_t value = 0;
    bool operator==(const PadicDigit&) const = default;
};

// --- reduction -------------------------------------------------------------

inline bool is_p_integral(const Rational& q, std::uint64_t p) {
    return mpz_divisible_ui_p(q.get_den_mpz_t(), p) == 0;
}

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "GMP word calls assume LP64");

inline Integer to_integer(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

inline std::uint64_t reduce_integer(const Integer& z, std::uint64_t m) {
    return mpz_fdiv_ui(z.get_mpz_t(), m);
}

// Reduction modulo an arbitrary-size modulus; requires gcd(den, m) = 1.
inline Integer reduce_big(const Rational& q, const Integer& m) {
    if (m == 1) return Integer(0);
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), m.get_mpz_t()) == 0)
        throw error(errc::non_p_integral, "denominator of " + to_string(q) + " is not invertible");
    Integer r = q.get_num() * inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Residue mod_reduce(const Rational& q, const PrimeModulus& m) {
    if (!is_p_integral(q, m.prime()))
        throw error(errc::non_p_integral,
                    to_string(q) + " has a denominator divisible by " + std::to_string(m.prime()));
    return {m, mpz_get_ui(reduce_big(q, to_integer(m.value())).get_mpz_t())};
}

inline Residue mod_reduce(const Integer& z, const PrimeModulus& m) {
    return {m, reduce_integer(z, m.value())};
}

inline Residue mod_inverse(const Integer& a, const PrimeModulus& m) {
    if (mpz_divisible_ui_p(a.get_mpz_t(), m.prime()))
        throw error(errc::not_invertible, a.get_str() + " is divisible by " + std::to_string(m.prime()));
    Integer inv;
    mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), to_integer(m.value()).get_mpz_t());
    return {m, mpz_get_ui(inv.get_mpz_t())};
}

inline long padic_valuation(const Integer& z, std::uint64_t p) {
    if (z == 0) throw error(errc::undefined_for_zero, "valuation of zero");
    Integer rest = z;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), to_integer(p).get_mpz_t()));
}

inline long padic_valuation(const Rational& q, std::uint64_t p) {
    if (q == 0) throw error(errc::undefined_for_zero, "valuation of zero");
    return padic_valuation(q.get_num(), p) - (q.get_den() == 1 ? 0 : padic_valuation(q.get_den(), p));
}

// Canonical digit i of the p-adic expansion, in [0, p-1].
inline PadicDigit hensel_digit(const Rational& q, std::uint64_t p, unsigned i) {
    if (!is_p_integral(q, p))
        throw error(errc::non_p_integral,
                    to_string(q) + " has a denominator divisible by " + std::to_string(p));
    const Integer lower = integer_pow(p, i);
    const Integer upper = lower * p;
    const Integer digit = (reduce_big(q, upper) - reduce_big(q, lower)) / lower;
    return {mpz_get_ui(digit.get_mpz_t())};
}

// True when p^k divides a - b (both p-integral or not: valuation test).
inline bool congruent(const Rational& a, const Rational& b, std::uint64_t p, unsigned k) {
    const Rational d = a - b;
    return d == 0 || padic_valuation(d, p) >= static_cast<long>(k);
}

inline Integer binomial(unsigned long n, unsigned long r) {
    Integer c;
    if (r > n) return c;
    mpz_bin_uiui(c.get_mpz_t(), n, r);
    return c;
}

inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace cforge
