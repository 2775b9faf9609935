#pragma once

// Convolutions of (divided) Bernoulli numbers and the exact classical
// identities they satisfy.

#include <cstdint>
#include <utility>

#include "bernoulli.hpp"
#include "sums.hpp"

namespace cforge {

// sum_{i=2}^{n-2} Bd_i Bd_{n-i}, Bd_i = B_i / i
inline Rational full_conv_divided(std::size_t n) {
    if (n < 4) throw error(errc::out_of_range, "full convolution needs n >= 4");
    Rational s = 0;
    for (std::size_t i = 2; i + 2 <= n; i += 2) s += divided_bernoulli(i) * divided_bernoulli(n - i);
    return s;
}

// sum_{i=p+1-2n}^{p-3} Bd_i Bd_{2(p-1)-2n-i}; empty when 2n = 2.
inline Rational truncated_conv(std::uint64_t p, std::size_t two_n) {
    if (two_n % 2 != 0 || two_n < 2 || two_n + 3 > p)
        throw error(errc::out_of_range, "truncated convolution needs even 2 <= 2n <= p-3");
    Rational s = 0;
    const std::size_t total = 2 * (p - 1) - two_n;
    for (std::size_t i = p + 1 - two_n; i + 3 <= p; ++i) s += divided_bernoulli(i) * divided_bernoulli(total - i);
    return s;
}

// sum_{i=2}^{n-2} B_i B_{n-i}
inline Rational ordinary_conv(std::size_t n) {
    if (n < 4) throw error(errc::out_of_range, "ordinary convolution needs n >= 4");
    Rational s = 0;
    for (std::size_t i = 2; i + 2 <= n; ++i) s += bernoulli(i) * bernoulli(n - i);
    return s;
}

// --- exact identities, each returned as LHS - RHS ---------------------------

enum class Identity { euler, miki, dunne_schubert, chu_vandermonde, spivey };

// sum_j C(n,j) B_j B_{n-j} = -n B_{n-1} - (n-1) B_n
inline Rational euler_residual(std::size_t n) {
    if (n < 1) throw error(errc::out_of_range, "Euler's identity needs n >= 1");
    Rational lhs = 0;
    for (std::size_t j = 0; j <= n; ++j) lhs += Rational(binomial(n, j)) * bernoulli(j) * bernoulli(n - j);
    const Rational rhs = -Rational(to_integer(n)) * bernoulli(n - 1) - Rational(to_integer(n - 1)) * bernoulli(n);
    return lhs - rhs;
}

// sum Bd_i Bd_{n-i} = sum C(n,i) Bd_i Bd_{n-i} + 2 H_n Bd_n, i = 2..n-2
inline Rational miki_residual(std::size_t n) {
    if (n <= 2) throw error(errc::out_of_range, "Miki's identity needs n > 2");
    Rational lhs = 0, rhs = 0;
    for (std::size_t i = 2; i + 2 <= n; ++i) {
        const Rational term = divided_bernoulli(i) * divided_bernoulli(n - i);
        lhs += term;
        rhs += Rational(binomial(n, i)) * term;
    }
    rhs += 2 * harmonic(n) * divided_bernoulli(n);
    return lhs - rhs;
}

// Dunne-Schubert form. The identity is false at n = 1 (residual -1/4), which
// is why callers may still evaluate it there.
inline Rational dunne_schubert_residual_unchecked(std::size_t n) {
    Rational lhs = 0, rhs = 0;
    for (std::size_t k = 1; k < n; ++k) {
        const Rational prod = bernoulli(2 * k) * bernoulli(2 * n - 2 * k);
        lhs += prod / Rational(to_integer(4 * k * (n - k)));
        rhs += prod / Rational(to_integer(2 * k)) * Rational(binomial(2 * n, 2 * k));
    }
    rhs /= Rational(to_integer(n));
    rhs += bernoulli(2 * n) / Rational(to_integer(n)) * harmonic(2 * n);
    return lhs - rhs;
}

inline Rational dunne_schubert_residual(std::size_t n) {
    if (n < 2) throw error(errc::out_of_range, "Dunne-Schubert identity needs n >= 2");
    return dunne_schubert_residual_unchecked(n);
}

// C(m+n, r) = sum_k C(m,k) C(n,r-k)
inline Rational chu_residual(unsigned long m, unsigned long n, unsigned long r) {
    Integer rhs = 0;
    for (unsigned long k = 0; k <= r; ++k) rhs += binomial(m, k) * binomial(n, r - k);
    return Rational(binomial(m + n, r) - rhs);
}

inline Rational spivey_sum(std::size_t n) {
    Rational s = 0;
    for (std::size_t j = 1; j <= n; ++j) {
        const Rational term = Rational(binomial(n, j)) * harmonic(j);
        if (j % 2) s -= term;
        else s += term;
    }
    return s;
}

// sum_{j=1}^n (-1)^j C(n,j) H_j = -1/n
inline Rational spivey_residual(std::size_t n) {
    if (n < 1) throw error(errc::out_of_range, "Spivey's identity needs n >= 1");
    return spivey_sum(n) + Rational(1, static_cast<unsigned long>(n));
}

struct ChuArgs {
    unsigned long m = 0, n = 0, r = 0;
};

inline Rational identity_residual(Identity which, std::size_t n, ChuArgs chu = {}) {
    switch (which) {
    case Identity::euler: return euler_residual(n);
    case Identity::miki: return miki_residual(n);
    case Identity::dunne_schubert: return dunne_schubert_residual(n);
    case Identity::spivey: return spivey_residual(n);
    case Identity::chu_vandermonde: return chu_residual(chu.m, chu.n, chu.r);
    }
    throw error(errc::out_of_range, "unknown identity");
}

// --- congruences on binomials and harmonic numbers ---------------------------

/// C(p-1, j) = (-1)^j (1 - p H_j) mod p^2; returns (lhs, rhs) residues.
inline std::pair<Residue, Residue> binom_p1_check(std::uint64_t p, unsigned long j) {
    if (j >= p) throw error(errc::out_of_range, "binomial check needs 0 <= j <= p-1");
    const PrimeModulus m(p, 2);
    Rational rhs = 1 - Rational(to_integer(p)) * harmonic(j);
    if (j % 2) rhs = -rhs;
    return {mod_reduce(binomial(p - 1, j), m), mod_reduce(rhs, m)};
}

// p (H_{2(p-1)-2n} - H_{p-1-2n}) - (1 + p/(2n+1)), reduced mod p^2.
inline Residue lemma6_residual(std::uint64_t p, std::size_t n) {
    if (2 * n + 5 >= p) throw error(errc::out_of_range, "needs 2n < p-5");
    const Rational pp(to_integer(p));
    const Rational lhs = pp * (harmonic(2 * (p - 1) - 2 * n) - harmonic(p - 1 - 2 * n));
    const Rational rhs = 1 + pp / Rational(to_integer(2 * n + 1));
    return mod_reduce(Rational(lhs - rhs), PrimeModulus(p, 2));
}

}  // namespace cforge
