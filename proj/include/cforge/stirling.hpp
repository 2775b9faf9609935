#pragma once

// Unsigned Stirling numbers of the first kind on p letters: the exact row and
// closed forms modulo p^3.

#include <cstdint>
#include <vector>

#include "bernoulli.hpp"
#include "convolutions.hpp"

namespace cforge {

/// Glaisher's indexing: A_j = [p, p-j], so prod_{a=1}^{p-1} (X + a) =
/// sum_j A_j X^{p-1-j} with A_0 = 1 and A_{p-1} = (p-1)!.
struct StirlingRow {
    std::uint64_t p = 0;
    std::vector<Integer> a;

    const Integer& A(std::size_t j) const { return a.at(j); }

    // [p, s] for 1 <= s <= p
    const Integer& cycles(std::size_t s) const {
        if (s < 1 || s > p) throw error(errc::out_of_range, "cycle count must lie in 1..p");
        return a.at(p - s);
    }
};

inline StirlingRow stirling_row_exact(std::uint64_t p) {
    if (p < 3) throw error(errc::invalid_prime, "Stirling row needs p >= 3");
    StirlingRow row{p, std::vector<Integer>(p, Integer(0))};
    row.a[0] = 1;
    for (std::uint64_t a = 1; a < p; ++a) {
        const Integer factor = to_integer(a);
        for (std::size_t j = a; j >= 1; --j) row.a[j] += factor * row.a[j - 1];
    }
    return row;
}

namespace detail {

inline Rational rat(std::uint64_t v) { return Rational(to_integer(v)); }

}  // namespace detail

// [p, 2n] = n/(2n+1) p^2 B_{p-2n-1} mod p^3, for 2 <= 2n <= p-3.
inline Rational glaisher_even_value(std::uint64_t p, std::size_t n) {
    if (n < 1 || 2 * n + 3 > p) throw error(errc::out_of_range, "needs 2 <= 2n <= p-3");
    const Rational pp = detail::rat(p);
    return detail::rat(n) / detail::rat(2 * n + 1) * pp * pp * bernoulli(p - 2 * n - 1);
}

inline Residue stirling_mod_even(std::uint64_t p, std::size_t n) {
    return mod_reduce(glaisher_even_value(p, n), PrimeModulus(p, 3));
}

/// Closed forms for A_j mod p^3 from Newton's formulas (the "first manner"):
///   A_1 = p(p-1)/2, A_2 = (-p/6 + 3p^2/4)/2 (p >= 5),
///   A_{2k+1} = p^2/2 (2k+1)/(2k) B_{2k}            (2k+1 <= p-2),
///   A_{2k} = -1/(2k) (p B_{2k} - p^2 sum_{r<k} B_{2r} B_{2k-2r} / (2r))  (k >= 2).
inline Rational manner1_value(std::uint64_t p, std::size_t j) {
    if (j < 1 || j >= p) throw error(errc::out_of_range, "Stirling index must lie in 1..p-1");
    const Rational pp = detail::rat(p);
    if (j == 1) return pp * (pp - 1) / 2;
    if (j == 2) {
        if (p < 5) throw error(errc::out_of_range, "A_2 closed form needs p >= 5");
        return (-pp / 6 + 3 * pp * pp / 4) / 2;
    }
    if (j % 2 == 1) {
        const std::size_t two_k = j - 1;
        return pp * pp / 2 * detail::rat(two_k + 1) / detail::rat(two_k) * bernoulli(two_k);
    }
    const std::size_t k = j / 2;
    Rational conv = 0;
    for (std::size_t r = 1; r < k; ++r) conv += bernoulli(2 * r) * bernoulli(2 * k - 2 * r) / detail::rat(2 * r);
    return -(pp * bernoulli(2 * k) - pp * pp * conv) / detail::rat(2 * k);
}

inline Residue stirling_mod_odd_manner1(std::uint64_t p, std::size_t j) {
    return mod_reduce(manner1_value(p, j), PrimeModulus(p, 3));
}

// (p-1)! = -p Bd_{p-1} + p Bd_{2p-2} - p^2 Bd_{p-1}^2 / 2 mod p^3, p >= 5
inline Rational sun_factorial_value(std::uint64_t p) {
    const Rational pp = detail::rat(p);
    const Rational b = divided_bernoulli(p - 1);
    return -pp * b + pp * divided_bernoulli(2 * p - 2) - pp * pp * b * b / 2;
}

/// The polynomial route (the "second manner") for [p, 2n+1] mod p^3.
///   2n = p-3:         -p^2/2 sum_{i=4}^{p-3} Bd_i Bd_{p+1-i} + p B_{p+1}
///                     + p^2 AG/12 + p^2/3 - p/6
///   2 <= 2n <= p-5:   -p^2/2 TC(p, 2n) + p Bd_{2p-2n-2} + (p AG - p - 2) p Bd_{p-1-2n}
///   2n = 0:           (p-1)! through sun_factorial_value
/// All three need p >= 5.
/// with AG = (p B_{p-1} + 1)/p. The middle form is false at 2n = 0.
inline Rational manner2_value(std::uint64_t p, std::size_t two_n) {
    if (two_n % 2 != 0 || two_n + 3 > p) throw error(errc::out_of_range, "needs even 0 <= 2n <= p-3");
    if (p < 5) throw error(errc::out_of_range, "polynomial route needs p >= 5");
    const Rational pp = detail::rat(p);
    const Rational ag = agoh_quotient_exact(p);
    if (two_n == 0) return sun_factorial_value(p);
    if (two_n + 3 == p) {
        return -pp * pp / 2 * truncated_conv(p, two_n) + pp * bernoulli(p + 1) + pp * pp / 12 * ag + pp * pp / 3 -
               pp / 6;
    }
    return -pp * pp / 2 * truncated_conv(p, two_n) + pp * divided_bernoulli(2 * p - two_n - 2) +
           (pp * ag - pp - 2) * pp * divided_bernoulli(p - 1 - two_n);
}

inline Residue stirling_mod_odd_manner2(std::uint64_t p, std::size_t two_n) {
    return mod_reduce(manner2_value(p, two_n), PrimeModulus(p, 3));
}

}  // namespace cforge
