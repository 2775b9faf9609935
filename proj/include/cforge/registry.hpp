#pragma once

// The catalogue of congruences and identities the verifier evaluates. Each
// entry names its modulus exponent (0 for exact equality), the least prime it
// applies to, the auxiliary indices it sweeps at a given prime, and an
// evaluator returning both sides exactly.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bridge.hpp"
#include "check.hpp"
#include "context.hpp"
#include "convolutions.hpp"
#include "curious.hpp"
#include "mhs.hpp"
#include "padic_roots.hpp"
#include "search.hpp"
#include "stirling.hpp"

namespace cforge {

struct CheckSpec {
    std::string id;
    std::string description;
    std::string paper_anchor;
    unsigned exponent = 0;
    std::uint64_t min_prime = 3;
    // null: a single cell without an index
    std::function<std::vector<long>(std::uint64_t)> indices;
    std::function<Sides(PrimeContext&, long)> evaluate;
    // per-index exponent when it varies along the sweep
    std::function<unsigned(long)> exponent_at{};

    unsigned exponent_for(long idx) const { return exponent_at ? exponent_at(idx) : exponent; }
    bool indexed() const { return static_cast<bool>(indices); }
};

namespace reg {

// lo, lo+step, ..., up to hi inclusive; empty when hi < lo
inline std::vector<long> span(long lo, long hi, long step = 1) {
    std::vector<long> v;
    for (long i = lo; i <= hi; i += step) v.push_back(i);
    return v;
}

inline Rational q(long v) { return Rational(v); }
inline Rational q(long num, long den) { return make_rational(Integer(num), Integer(den)); }
inline Rational db(long n) { return divided_bernoulli(static_cast<std::size_t>(n)); }
inline Rational b(long n) { return bernoulli(static_cast<std::size_t>(n)); }
inline long sp(const PrimeContext& c) { return static_cast<long>(c.p()); }
inline std::size_t u(long v) { return static_cast<std::size_t>(v); }

// CB(n) with the empty sum below n = 4 read as 0
inline Rational cb(long n) { return n < 4 ? Rational(0) : full_conv_divided(u(n)); }

inline Rational signed_by(long k, Rational x) { return k % 2 ? x : Rational(-x); }  // (-1)^{k-1} x

inline std::vector<CheckSpec> build() {
    std::vector<CheckSpec> r;
    auto add = [&](CheckSpec s) { r.push_back(std::move(s)); };

    // --- Wilson, power sums and harmonic sums ------------------------------
    add({"R1", "(p-1)! = p B_{p-1} - p mod p^2", "Wilson's theorem mod p^2 (Glaisher)", 2, 3, nullptr,
         [](PrimeContext& c, long) -> Sides { return {Rational(c.fact()), c.pB() - c.pq()}; }});
    add({"R2", "S_k = p B_k + p^2/2 k B_{k-1} + p^3/6 k(k-1) B_{k-2} mod p^3, k = 2..min(30, 2p-2)",
         "power sums mod p^3 (Sun)", 3, 3, [](std::uint64_t p) { return span(2, std::min<long>(30, 2 * long(p) - 2)); },
         [](PrimeContext& c, long k) -> Sides {
             const Rational& p = c.pq();
             return {Rational(c.S(u(k))), p * b(k) + p * p / 2 * q(k) * b(k - 1) + p * p * p / 6 * q(k * (k - 1)) * b(k - 2)};
         }});
    add({"R3", "H_m = 0 mod p (m even) or mod p^2 (m odd), 1 <= m <= p-3", "generalized Wolstenholme theorem (Bayat)", 2, 5,
         [](std::uint64_t p) { return span(1, long(p) - 3); },
         [](PrimeContext& c, long m) -> Sides { return {c.H(u(m)), Rational(0)}; },
         [](long m) { return m % 2 ? 2u : 1u; }});
    add({"R4a", "H_k mod p^3 for 1 <= k <= p-4 via divided Bernoulli numbers", "harmonic sums mod p^3 (Sun)", 3, 5,
         [](std::uint64_t p) { return span(1, long(p) - 4); },
         [](PrimeContext& c, long k) -> Sides {
             const Rational& p = c.pq();
             const long pl = sp(c);
             const Rational rhs = k % 2 ? Rational(q(k * (k + 1), 2) * db(pl - 2 - k) * p * p)
                                        : Rational(q(k) * (db(2 * pl - 2 - k) - 2 * db(pl - 1 - k)) * p);
             return {c.H(u(k)), rhs};
         }});
    add({"R4b", "H_{p-3} = (1/2 - 3 B_{p+1}) p - 4/3 p^2 mod p^3", "harmonic sums mod p^3 (Sun)", 3, 5, nullptr,
         [](PrimeContext& c, long) -> Sides {
             const Rational& p = c.pq();
             return {c.H(c.p() - 3), (q(1, 2) - 3 * b(sp(c) + 1)) * p - q(4, 3) * p * p};
         }});
    add({"R4c", "H_{p-2} = -(2 + p B_{p-1}) p + 5/2 p^2 mod p^3", "harmonic sums mod p^3 (Sun)", 3, 5, nullptr,
         [](PrimeContext& c, long) -> Sides {
             const Rational& p = c.pq();
             return {c.H(c.p() - 2), -(2 + c.pB()) * p + q(5, 2) * p * p};
         }});
    add({"R4d", "H_{p-1} = p B_{2p-2} - 3 p B_{p-1} + 3(p-1) mod p^3", "harmonic sums mod p^3 (Sun)", 3, 5, nullptr,
         [](PrimeContext& c, long) -> Sides {
             const Rational& p = c.pq();
             return {c.H(c.p() - 1), p * b(2 * sp(c) - 2) - 3 * c.pB() + 3 * (p - 1)};
         }});
    add({"R5", "Bd_{p-1+b} = Bd_b mod p, b even in [2, p-3]", "Kummer's congruences", 1, 5,
         [](std::uint64_t p) { return span(2, long(p) - 3, 2); },
         [](PrimeContext& c, long bb) -> Sides { return {db(sp(c) - 1 + bb), db(bb)}; }});
    add({"R5b", "Bd_{2(p-1)+b} = 2 Bd_{p-1+b} - (1 - p^{b-1}) Bd_b mod p^2, b even in [2, p-3]",
         "Kummer's congruences, second order", 2, 5, [](std::uint64_t p) { return span(2, long(p) - 3, 2); },
         [](PrimeContext& c, long bb) -> Sides {
             const long pl = sp(c);
             return {db(2 * (pl - 1) + bb), 2 * db(pl - 1 + bb) - (1 - rational_pow(c.pq(), u(bb - 1))) * db(bb)};
         }});
    add({"R6", "Bd_{p-1+n} = Bd_n - p/2 sum q_a^2 a^n mod p^2, n even in [4, p-3]",
         "Bernoulli numbers and Fermat quotients (Ernvall-Metsankyla)", 2, 7,
         [](std::uint64_t p) { return span(4, long(p) - 3, 2); },
         [](PrimeContext& c, long n) -> Sides { return {db(sp(c) - 1 + n), db(n) - c.pq() / 2 * c.em(n)}; }});
    add({"R7", "H_{2k} = 2k/(2k+1) p B_{p-1-2k} mod p^2, 1 <= k <= (p-3)/2", "even harmonic sums mod p^2 (Sun)", 2, 5,
         [](std::uint64_t p) { return span(1, (long(p) - 3) / 2); },
         [](PrimeContext& c, long k) -> Sides {
             return {c.H(u(2 * k)), q(2 * k, 2 * k + 1) * c.pq() * b(sp(c) - 1 - 2 * k)};
         }});

    // --- Stirling numbers mod p^3 -------------------------------------------
    add({"R8", "A_j closed forms mod p^3 from Newton's formulas, 1 <= j <= p-1", "Stirling numbers mod p^3 (Glaisher)", 3, 3,
         [](std::uint64_t p) {
             std::vector<long> v;
             for (long j = 1; j < long(p); ++j)
                 if (j != 2 || p >= 5) v.push_back(j);
             return v;
         },
         [](PrimeContext& c, long j) -> Sides { return {c.A(u(j)), manner1_value(c.p(), u(j))}; }});
    add({"GLA-EVEN", "[p,2n] = n/(2n+1) p^2 B_{p-2n-1} mod p^3, 2 <= 2n <= p-3", "even Stirling numbers (Glaisher)", 3, 5,
         [](std::uint64_t p) { return span(2, long(p) - 3, 2); },
         [](PrimeContext& c, long tn) -> Sides { return {c.A(c.p() - u(tn)), glaisher_even_value(c.p(), u(tn / 2))}; }});
    add({"COR1", "[p,2n] = (n+1) H_{2n-1} + n S_{2p-2n-1} - (2n+1) S_{p-2n} mod p^3", "Stirling numbers via power sums", 3,
         5, [](std::uint64_t p) { return span(2, long(p) - 3, 2); },
         [](PrimeContext& c, long tn) -> Sides {
             const long n = tn / 2, pl = sp(c);
             return {c.A(c.p() - u(tn)), q(n + 1) * c.H(u(2 * n - 1)) + q(n) * Rational(c.S(u(2 * pl - 2 * n - 1))) -
                                             q(2 * n + 1) * Rational(c.S(u(pl - 2 * n)))};
         }});
    add({"EQ5", "[p,2n] = n(2n^2+3n+2)/(2n+1) p^2 B_{p-2n-1} - n(2n+1)/2 p^2 B_{2p-2n-2} mod p^3",
         "even Stirling numbers, intermediate form", 3, 5, [](std::uint64_t p) { return span(2, long(p) - 3, 2); },
         [](PrimeContext& c, long tn) -> Sides {
             const long n = tn / 2, pl = sp(c);
             const Rational p2 = c.pq() * c.pq();
             return {c.A(c.p() - u(tn)), q(n * (2 * n * n + 3 * n + 2), 2 * n + 1) * p2 * b(pl - 2 * n - 1) -
                                             q(n * (2 * n + 1), 2) * p2 * b(2 * pl - 2 * n - 2)};
         }});
    add({"EQ6", "B_{2p-2n-2} = 2(n+1)/(2n+1) B_{p-2n-1} mod p", "Kummer-type relation for even Stirling numbers", 1, 5,
         [](std::uint64_t p) { return span(2, long(p) - 3, 2); },
         [](PrimeContext& c, long tn) -> Sides {
             const long n = tn / 2, pl = sp(c);
             return {b(2 * pl - 2 * n - 2), q(2 * (n + 1), 2 * n + 1) * b(pl - 2 * n - 1)};
         }});
    add({"EQ44", "C(p-1, j) = (-1)^j (1 - p h_j) mod p^2, 0 <= j <= p-1", "binomial coefficients mod p^2", 2, 3,
         [](std::uint64_t p) { return span(0, long(p) - 1); },
         [](PrimeContext& c, long j) -> Sides {
             Rational rhs = 1 - c.pq() * c.harm(u(j));
             if (j % 2) rhs = -rhs;
             return {Rational(binomial(c.p() - 1, u(j))), rhs};
         }});
    add({"EQ47", "sum_{j<m} (-1)^j C(m,j) - p sum_{j=1}^m (-1)^j C(m,j) h_j = -1 + p/m, m = p-1-2n",
         "alternating harmonic-binomial sum (Spivey)", 0, 3, [](std::uint64_t p) { return span(0, long(p) - 3, 2); },
         [](PrimeContext& c, long tn) -> Sides {
             const unsigned long m = c.p() - 1 - u(tn);
             Rational s = 0;
             for (unsigned long j = 0; j < m; ++j) s += (j % 2 ? -1 : 1) * Rational(binomial(m, j));
             Rational t = 0;
             for (unsigned long j = 1; j <= m; ++j) t += (j % 2 ? -1 : 1) * Rational(binomial(m, j)) * c.harm(j);
             return {s - c.pq() * t, -1 + c.pq() / detail::rat(m)};
         }});
    add({"L6", "p (h_{2(p-1)-2n} - h_{p-1-2n}) = 1 + p/(2n+1) mod p^2, 0 <= 2n < p-5", "harmonic differences mod p^2", 2,
         7, [](std::uint64_t p) { return span(0, long(p) - 7, 2); },
         [](PrimeContext& c, long tn) -> Sides {
             const std::uint64_t p = c.p();
             return {c.pq() * (c.harm(2 * (p - 1) - u(tn)) - c.harm(p - 1 - u(tn))), 1 + c.pq() / q(tn + 1)};
         }});
    add({"EQ70", "[p,2n+1] via the truncated convolution mod p^3, 2 <= 2n <= p-5", "odd Stirling numbers, polynomial route",
         3, 7, [](std::uint64_t p) { return span(2, long(p) - 5, 2); },
         [](PrimeContext& c, long tn) -> Sides { return {c.A(c.p() - 1 - u(tn)), manner2_value(c.p(), u(tn))}; }});
    add({"EQ74", "[p,p-2] = A_2 via Sun's congruences mod p^3", "odd Stirling numbers at 2n = p-3", 3, 5, nullptr,
         [](PrimeContext& c, long) -> Sides { return {c.A(2), manner2_value(c.p(), c.p() - 3)}; }});

    // --- convolution bridges --------------------------------------------------
    auto theorem_window = [](std::uint64_t p) { return span(4, long(p) - 7, 2); };
    add({"T1-i", "p^2/2 TC(p,2n) against the full convolution CB(p-1-2n) mod p^3, 4 <= 2n <= p-7",
         "truncated convolutions of divided Bernoulli numbers", 3, 11, theorem_window,
         [](PrimeContext& c, long tn) { return bridge::t1_i(c, u(tn)); }});
    add({"EQ79", "the same congruence with p^2 TC(p,2n) on the left", "truncated convolutions, rearranged", 3, 11,
         theorem_window, [](PrimeContext& c, long tn) { return bridge::eq79(c, u(tn)); }});
    add({"P1-i", "p^2 TC(p,2n) via harmonic differences mod p^3, 4 <= 2n <= p-7", "truncated convolutions, general case", 3,
         11, theorem_window, [](PrimeContext& c, long tn) { return bridge::p1_i(c, u(tn)); }});
    add({"P1-ii", "p^2 sum_{i=4}^{p-3} Bd_i Bd_{p+1-i} mod p^3 (2n = p-3)", "truncated convolutions at 2n = p-3", 3, 5,
         nullptr, [](PrimeContext& c, long) { return bridge::p1_ii(c); }});
    add({"P1-iii", "p^2 sum_{i=6}^{p-3} Bd_i Bd_{p+3-i} mod p^3 (2n = p-5)", "truncated convolutions at 2n = p-5", 3, 7,
         nullptr, [](PrimeContext& c, long) { return bridge::p1_iii(c); }});
    add({"P2", "p^2/2 CB(p-1-2n) = A_{p-1-2n} + p Bd_{p-1-2n} mod p^3, 0 <= 2n <= p-5",
         "full convolutions and odd Stirling numbers", 3, 5, [](std::uint64_t p) { return span(0, long(p) - 5, 2); },
         [](PrimeContext& c, long tn) { return bridge::p2(c, u(tn)); }});
    add({"P2-54", "p^2/2 CB(p-1) = p Bd_{2p-2} - p^2 Bd_{p-1}^2 / 2 mod p^3", "full convolution at 2n = 0", 3, 5, nullptr,
         [](PrimeContext& c, long) { return bridge::p2_54(c); }});
    add({"EQ55", "(p-1)! = -p Bd_{p-1} + p Bd_{2p-2} - p^2 Bd_{p-1}^2 / 2 mod p^3", "Wilson's theorem mod p^3 (Sun)", 3, 5,
         nullptr, [](PrimeContext& c, long) { return bridge::eq55(c); }});

    // --- multiple harmonic sums ------------------------------------------------
    add({"T2-I", "A*_k closed forms mod p^3, 1 <= k <= p-1", "multiple harmonic sums mod p^3", 3, 5,
         [](std::uint64_t p) { return span(1, long(p) - 1); },
         [](PrimeContext& c, long k) -> Sides { return {c.mhs().at(u(k)), mhs_formula_value(c.p(), u(k))}; }});
    add({"T2-II", "A*_k = -A_{p-1-k} + (-1)^k w_p p^2 Bd_{p-1-k} mod p^3", "multiple harmonic sums and Stirling numbers", 3,
         3, [](std::uint64_t p) { return span(1, long(p) - 2); },
         [](PrimeContext& c, long k) { return theorem2_ii_sides(c.stirling(), c.mhs(), c.wilson(), u(k)); }});
    add({"T2-III", "A_{p-1-j} = (p B_{p-1} - p) A*_j mod p^3", "multiple harmonic sums and Stirling numbers", 3, 3,
         [](std::uint64_t p) { return span(1, long(p) - 2); },
         [](PrimeContext& c, long j) { return theorem2_iii_sides(c.stirling(), c.mhs(), u(j)); }});
    add({"EQ82", "A*_k = (-1)^{k-1}/k H_k mod p^2", "Newton's formula, first order", 2, 3,
         [](std::uint64_t p) { return span(1, long(p) - 1); },
         [](PrimeContext& c, long k) -> Sides { return {c.mhs().at(u(k)), signed_by(k, c.H(u(k)) / q(k))}; }});
    add({"EQ83", "A*_k = (-1)^{k-1}/k (H_k - sum_{r<k} H_r H_{k-r} / r) mod p^3", "Newton's formula, second order", 3, 5,
         [](std::uint64_t p) { return span(1, long(p) - 1); },
         [](PrimeContext& c, long k) -> Sides {
             Rational s = 0;
             for (long r = 1; r < k; ++r) s += c.H(u(r)) * c.H(u(k - r)) / q(r);
             return {c.mhs().at(u(k)), signed_by(k, (c.H(u(k)) - s) / q(k))};
         }});
    add({"EQ84", "A*_k with the quadratic term as p^2 sum (k-r) Bd_{p-1-r} Bd_{p-1-k+r} mod p^3",
         "Newton's formula via divided Bernoulli numbers", 3, 5, [](std::uint64_t p) { return span(1, long(p) - 1); },
         [](PrimeContext& c, long k) -> Sides {
             const long pl = sp(c);
             Rational s = 0;
             for (long r = 1; r < k; ++r) s += q(k - r) * db(pl - 1 - r) * db(pl - 1 - k + r);
             return {c.mhs().at(u(k)), signed_by(k, (c.H(u(k)) - c.pq() * c.pq() * s) / q(k))};
         }});
    add({"EQ86", "A*_k with the quadratic term as k/2 p^2 TC(p,k) mod p^3", "Newton's formula via truncated convolutions",
         3, 5, [](std::uint64_t p) { return span(1, long(p) - 1); },
         [](PrimeContext& c, long k) -> Sides {
             const long pl = sp(c);
             Rational s = 0;
             for (long i = pl + 1 - k; i <= pl - 3; ++i) s += db(i) * db(2 * (pl - 1) - k - i);
             return {c.mhs().at(u(k)), signed_by(k, (c.H(u(k)) - q(k, 2) * c.pq() * c.pq() * s) / q(k))};
         }});
    add({"EQ92", "A*_2 = -p (Bd_{2p-4} - 2 Bd_{p-3}) mod p^3", "double harmonic sum mod p^3", 3, 7, nullptr,
         [](PrimeContext& c, long) -> Sides {
             const long pl = sp(c);
             return {c.mhs().at(2), -c.pq() * (db(2 * pl - 4) - 2 * db(pl - 3))};
         }});
    add({"T00", "H_1 = -p^2 (Bd_{2p-4} - 2 Bd_{p-3}) mod p^4", "Wolstenholme's theorem mod p^4", 4, 7, nullptr,
         [](PrimeContext& c, long) -> Sides {
             const long pl = sp(c);
             return {c.H(1), -c.pq() * c.pq() * (db(2 * pl - 4) - 2 * db(pl - 3))};
         }});
    add({"T01", "[p,3] = (p B_{p-1} - p) p Bd_{p-3} - p^2/2 sum q_a^2 / a^2 mod p^3", "Stirling number [p,3] mod p^3", 3, 7,
         nullptr,
         [](PrimeContext& c, long) -> Sides {
             const Rational& p = c.pq();
             return {c.A(c.p() - 3), (c.pB() - p) * p * db(sp(c) - 3) - p * p / 2 * c.em(-2)};
         }});
    add({"T02", "CB(p-3) = 2 w_p Bd_{p-3} - sum q_a^2 / a^2 mod p", "full convolution CB(p-3) mod p", 1, 7, nullptr,
         [](PrimeContext& c, long) -> Sides {
             return {cb(sp(c) - 3), 2 * Rational(c.wilson()) * db(sp(c) - 3) - c.em(-2)};
         }});
    auto t03_digit = [](PrimeContext& c) {
        const long pl = sp(c);
        return Rational(to_integer(hensel_digit(db(2 * (pl - 3)) - db(pl - 5), c.p(), 1).value));
    };
    add({"T03-A4", "A*_4 = p Bd_{p-5} + p^2 (Bd_{p-3}^2 / 2 - d) mod p^3", "quadruple harmonic sum mod p^3", 3, 11, nullptr,
         [t03_digit](PrimeContext& c, long) -> Sides {
             const long pl = sp(c);
             const Rational& p = c.pq();
             const Rational b3 = db(pl - 3);
             return {c.mhs().at(4), p * db(pl - 5) + p * p * (b3 * b3 / 2 - t03_digit(c))};
         }});
    add({"T03-S5", "[p,5] = -p Bd_{p-5} + p^2 (-Bd_{p-3}^2 / 2 + w_p Bd_{p-5} + d) mod p^3", "Stirling number [p,5] mod p^3",
         3, 11, nullptr,
         [t03_digit](PrimeContext& c, long) -> Sides {
             const long pl = sp(c);
             const Rational& p = c.pq();
             const Rational b3 = db(pl - 3);
             return {c.A(c.p() - 5),
                     -p * db(pl - 5) + p * p * (-b3 * b3 / 2 + Rational(c.wilson()) * db(pl - 5) + t03_digit(c))};
         }});
    add({"T03-CB", "CB(p-5) = -Bd_{p-3}^2 + 2 w_p Bd_{p-5} + 2d mod p", "full convolution CB(p-5) mod p", 1, 11, nullptr,
         [t03_digit](PrimeContext& c, long) -> Sides {
             const long pl = sp(c);
             const Rational b3 = db(pl - 3);
             return {cb(sp(c) - 5), -b3 * b3 + 2 * Rational(c.wilson()) * db(pl - 5) + 2 * t03_digit(c)};
         }});
    add({"ZHAO14", "H_1 = p A*_2 mod p^4", "harmonic and double harmonic sums (Zhao)", 4, 7, nullptr,
         [](PrimeContext& c, long) -> Sides { return {c.H(1), c.pq() * c.mhs().at(2)}; }});
    add({"RMK3-a", "CB_ord(p-3) = -2 B_{p-3} mod p", "ordinary Bernoulli convolutions (Zhao)", 1, 7, nullptr,
         [](PrimeContext& c, long) -> Sides { return {ordinary_conv(c.p() - 3), -2 * b(sp(c) - 3)}; }});
    add({"RMK3-b", "CB_ord(p-5) = -2/3 B_{p-3}^2 - 2 B_{p-5} mod p", "ordinary Bernoulli convolutions (Zhao)", 1, 11,
         nullptr,
         [](PrimeContext& c, long) -> Sides {
             const Rational b3 = b(sp(c) - 3);
             return {ordinary_conv(c.p() - 5), -q(2, 3) * b3 * b3 - 2 * b(sp(c) - 5)};
         }});

    // --- roots, Wilson quotient, Kummer pairs --------------------------------
    add({"R13", "Hensel-lifted root of X^(p-1) + (p-1)! equals the closed digit formula mod p^3",
         "factorization of X^(p-1) + (p-1)!", 3, 3, [](std::uint64_t p) { return span(1, long(p) - 1); },
         [](PrimeContext& c, long i) -> Sides {
             const RootSet rs = lift_roots(c.p());
             return {Rational(to_integer(rs.roots[u(i - 1)].value)),
                     Rational(to_integer(result13_root(c.p(), u(i)).value))};
         }});
    add({"WQ", "w_p = (p B_{p-1} + 1)/p - 1 mod p", "Wilson quotient and the Agoh-Giuga quotient", 1, 3, nullptr,
         [](PrimeContext& c, long) -> Sides { return {Rational(c.wilson()), c.ag() - 1}; }});
    add({"WILSON-DELTA", "(p-1)! = -1 + p sum q_a mod p^2", "Wilson's theorem and Fermat quotients (Lerch)", 2, 3, nullptr,
         [](PrimeContext& c, long) -> Sides {
             Integer s = 0;
             for (std::uint64_t a = 1; a < c.p(); ++a) s += fermat_quotient(a, c.p());
             return {Rational(c.fact()), -1 + c.pq() * Rational(s)};
         }});
    add({"RMK1", "no irregular index p-1-2n has 2n a Kummer index", "irregular pairs are not Kummer pairs", 0, 5, nullptr,
         [](PrimeContext& c, long) -> Sides { return {Rational(remark1_overlap(c.p())), Rational(0)}; }});

    // --- exact identities -----------------------------------------------------
    add({"IDENT-EULER", "sum C(n,j) B_j B_{n-j} = -n B_{n-1} - (n-1) B_n, 1 <= n <= p", "Euler's identity", 0, 3,
         [](std::uint64_t p) { return span(1, long(p)); },
         [](PrimeContext&, long n) -> Sides { return {euler_residual(u(n)), Rational(0)}; }});
    add({"IDENT-MIKI", "Miki's identity, 3 <= n <= p", "Miki's identity", 0, 3, [](std::uint64_t p) { return span(3, long(p)); },
         [](PrimeContext&, long n) -> Sides { return {miki_residual(u(n)), Rational(0)}; }});
    add({"IDENT-DS", "Dunne-Schubert identity, 2 <= n <= p", "Miki's identity in the Dunne-Schubert form", 0, 3,
         [](std::uint64_t p) { return span(2, long(p)); },
         [](PrimeContext&, long n) -> Sides { return {dunne_schubert_residual(u(n)), Rational(0)}; }});
    add({"IDENT-SPIVEY", "sum_{j=1}^n (-1)^j C(n,j) h_j = -1/n, 1 <= n <= p", "alternating harmonic-binomial sum (Spivey)", 0,
         3, [](std::uint64_t p) { return span(1, long(p)); },
         [](PrimeContext&, long n) -> Sides { return {spivey_sum(u(n)), -q(1, n)}; }});
    add({"IDENT-CHU", "C(2p-2, r) = sum_k C(p-1,k) C(p-1,r-k), 0 <= r <= 2p-2", "Chu-Vandermonde convolution", 0, 3,
         [](std::uint64_t p) { return span(0, 2 * long(p) - 2); },
         [](PrimeContext& c, long rr) -> Sides { return {chu_residual(c.p() - 1, c.p() - 1, u(rr)), Rational(0)}; }});
    add({"CURIOUS", "sum over compositions of p into n parts of 1/(l_1...l_n), 2 <= n <= min(6, p-2)",
         "curious congruences (Zhao; n-part generalization)", 1, 5,
         [](std::uint64_t p) { return span(2, std::min<long>(6, long(p) - 2)); },
         [](PrimeContext& c, long n) -> Sides {
             const unsigned parts = static_cast<unsigned>(n);
             return {curious_sum(c.p(), parts), curious_closed_form(c.p(), parts)};
         },
         [](long n) { return curious_exponent(static_cast<unsigned>(n)); }});
    return r;
}

}  // namespace reg

inline const std::vector<CheckSpec>& registry() {
    static const std::vector<CheckSpec> r = reg::build();
    return r;
}

inline const CheckSpec* find_check(const std::string& id) {
    for (const CheckSpec& s : registry())
        if (s.id == id) return &s;
    return nullptr;
}

}  // namespace cforge
