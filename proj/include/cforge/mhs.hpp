#pragma once

// Multiple harmonic sums A*_k = sum_{i_1<...<i_k<=p-1} 1/(i_1...i_k), their
// closed forms modulo p^3 and the relations to the Stirling row.

#include <cstdint>
#include <utility>
#include <vector>

#include "check.hpp"
#include "convolutions.hpp"
#include "stirling.hpp"
#include "sums.hpp"

namespace cforge {

struct MhsRow {
    std::uint64_t p = 0;
    std::vector<Rational> values;  // values[k-1] = A*_k, k = 1..p-1

    const Rational& at(std::size_t k) const {
        if (k < 1 || k > values.size()) throw error(errc::out_of_range, "MHS index must lie in 1..p-1");
        return values[k - 1];
    }

    bool operator==(const MhsRow&) const = default;
};

/// Newton's formula: k A*_k = (-1)^{k-1} (H_k + sum_{r<k} (-1)^r A*_r H_{k-r}).
inline MhsRow mhs_row_newton(std::uint64_t p) {
    if (p < 3) throw error(errc::invalid_prime, "MHS row needs p >= 3");
    std::vector<Rational> h(p);
    for (std::uint64_t k = 1; k < p; ++k) h[k] = harmonic_power_sum(p, k);
    MhsRow row{p, {}};
    row.values.reserve(p - 1);
    for (std::uint64_t k = 1; k < p; ++k) {
        Rational s = h[k];
        for (std::uint64_t r = 1; r < k; ++r) {
            const Rational term = row.values[r - 1] * h[k - r];
            if (r % 2) s -= term;
            else s += term;
        }
        s /= detail::rat(k);
        if (k % 2 == 0) s = -s;
        row.values.push_back(s);
    }
    return row;
}

// Elementary symmetric functions of 1/a from the expansion of prod (X + 1/a).
inline MhsRow mhs_row_poly_oracle(std::uint64_t p) {
    if (p < 3) throw error(errc::invalid_prime, "MHS row needs p >= 3");
    std::vector<Rational> e(p, Rational(0));
    e[0] = 1;
    for (std::uint64_t a = 1; a < p; ++a) {
        const Rational inv(Integer(1), to_integer(a));
        for (std::size_t j = a; j >= 1; --j) e[j] += inv * e[j - 1];
    }
    return {p, std::vector<Rational>(e.begin() + 1, e.end())};
}

/// Closed form of A*_k modulo p^3, k = 1..p-1, with AG = (p B_{p-1} + 1)/p:
///   k = p-2:        p/2 - p^2 + AG p^2 / 2
///   k = p-3:        p/12 - 11 p^2 / 24 + AG p^2 / 12
///   k = p-1:        3 (p Bd_{p-1} - 1) - p Bd_{2p-2} - p^2 Bd_{p-1}^2 / 2
///   odd k <= p-4:   (k+1)/2 p^2 Bd_{p-2-k}
///   even k <= p-5:  p (2 Bd_{p-1-k} - Bd_{2p-2-k}) + p^2/2 TC(p, k)
inline Rational mhs_formula_value(std::uint64_t p, std::size_t k) {
    if (k < 1 || k >= p) throw error(errc::out_of_range, "MHS index must lie in 1..p-1");
    const Rational pp = detail::rat(p);
    const Rational p2 = pp * pp;
    if (k + 2 == p) return pp / 2 - p2 + agoh_quotient_exact(p) * p2 / 2;
    if (k + 3 == p) return pp / 12 - 11 * p2 / 24 + agoh_quotient_exact(p) * p2 / 12;
    if (k + 1 == p) {
        const Rational b = divided_bernoulli(p - 1);
        return 3 * (pp * b - 1) - pp * divided_bernoulli(2 * p - 2) - p2 * b * b / 2;
    }
    if (k % 2 == 1) return detail::rat(k + 1) / 2 * p2 * divided_bernoulli(p - 2 - k);
    return pp * (2 * divided_bernoulli(p - 1 - k) - divided_bernoulli(2 * p - 2 - k)) + p2 / 2 * truncated_conv(p, k);
}

inline Residue mhs_mod_formula(std::uint64_t p, std::size_t k) {
    return mod_reduce(mhs_formula_value(p, k), PrimeModulus(p, 3));
}

// A*_k = -A_{p-1-k} + (-1)^k w_p p^2 Bd_{p-1-k}  (mod p^3)
inline Sides theorem2_ii_sides(const StirlingRow& st, const MhsRow& mhs, const Integer& wp, std::size_t k) {
    const std::uint64_t p = st.p;
    Rational rhs = Rational(wp) * detail::rat(p) * detail::rat(p) * divided_bernoulli(p - 1 - k);
    if (k % 2) rhs = -rhs;
    rhs -= Rational(st.A(p - 1 - k));
    return {mhs.at(k), rhs};
}

// A_{p-1-j} = (p B_{p-1} - p) A*_j  (mod p^3)
inline Sides theorem2_iii_sides(const StirlingRow& st, const MhsRow& mhs, std::size_t j) {
    const Rational pp = detail::rat(st.p);
    return {Rational(st.A(st.p - 1 - j)), (pp * bernoulli(st.p - 1) - pp) * mhs.at(j)};
}

/// The Stirling and Bernoulli relations for A*_k at index k (1 <= k <= p-2), reduced mod p^3.
inline std::pair<CheckOutcome, CheckOutcome> theorem2_relations(std::uint64_t p, std::size_t k) {
    if (k < 1 || k + 2 > p) throw error(errc::out_of_range, "needs 1 <= k <= p-2");
    const StirlingRow st = stirling_row_exact(p);
    const MhsRow mhs = mhs_row_newton(p);
    const Integer wp = wilson_quotient(p);
    const long idx = static_cast<long>(k);
    return {judge(p, "T2-II", idx, 3, theorem2_ii_sides(st, mhs, wp, k)),
            judge(p, "T2-III", idx, 3, theorem2_iii_sides(st, mhs, k))};
}

}  // namespace cforge
