#pragma once

// Scanners: Wilson primes, Kummer pairs, irregular pairs.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bernoulli.hpp"
#include "check.hpp"
#include "parallel.hpp"

namespace cforge {

enum class SearchKind { wilson, kummer, irregular };

constexpr std::string_view to_string(SearchKind k) {
    switch (k) {
    case SearchKind::wilson: return "wilson";
    case SearchKind::kummer: return "kummer";
    case SearchKind::irregular: return "irregular";
    }
    return "?";
}

/// witness: (p-1)! mod p^2 for wilson, Bd_{2(p-1)-2n} mod p^2 for kummer,
/// numerator(B_k) mod p for irregular.
struct SearchRecord {
    SearchKind kind = SearchKind::wilson;
    std::uint64_t p = 0;
    std::optional<long> index;
    Residue witness{PrimeModulus(3, 1), 0};

    bool operator==(const SearchRecord&) const = default;
};

inline std::vector<std::uint64_t> odd_primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    if (hi < 3) return out;
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t i = 2; i * i <= hi; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 3); n <= hi; ++n)
        if (!composite[n]) out.push_back(n);
    return out;
}

// (p-1)! mod p^2 by a running product in machine words.
inline std::uint64_t wilson_residue(std::uint64_t p) {
    const std::uint64_t m = p * p;
    std::uint64_t r = 1;
    for (std::uint64_t a = 2; a < p; ++a) r = mulmod(r, a, m);
    return r;
}

inline std::vector<SearchRecord> wilson_scan(std::uint64_t limit, unsigned jobs = 1) {
    if (limit < 3) throw error(errc::out_of_range, "Wilson scan needs limit >= 3");
    if (limit >= (1ull << 31)) throw error(errc::out_of_range, "Wilson scan limit must stay below 2^31");
    const std::vector<std::uint64_t> primes = odd_primes_in(3, limit);
    std::vector<std::uint64_t> residues(primes.size());
    parallel_for(primes.size(), jobs, [&](std::size_t i) { residues[i] = wilson_residue(primes[i]); });
    std::vector<SearchRecord> out;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::uint64_t p = primes[i];
        if (residues[i] == p * p - 1) out.push_back({SearchKind::wilson, p, std::nullopt, Residue(PrimeModulus(p, 2), residues[i])});
    }
    return out;
}

/// Index window for 2n: the full definitional range [2, p-3], or the
/// narrower [4, p-7] used by the convolution theorem.
enum class KummerWindow { definition, theorem };

inline std::vector<long> kummer_pairs(std::uint64_t p, KummerWindow window = KummerWindow::definition) {
    if (p < 5 || !is_prime(p)) throw error(errc::invalid_prime, "Kummer scan needs a prime p >= 5");
    const std::size_t lo = window == KummerWindow::definition ? 2 : 4;
    const std::size_t hi_gap = window == KummerWindow::definition ? 3 : 7;
    std::vector<long> out;
    for (std::size_t tn = lo; tn + hi_gap <= p; tn += 2) {
        if (congruent(divided_bernoulli(2 * (p - 1) - tn), divided_bernoulli(p - 1 - tn), p, 2))
            out.push_back(static_cast<long>(tn));
    }
    return out;
}

inline std::vector<SearchRecord> kummer_records(std::uint64_t p, KummerWindow window = KummerWindow::definition) {
    std::vector<SearchRecord> out;
    for (long tn : kummer_pairs(p, window))
        out.push_back({SearchKind::kummer, p, tn,
                       mod_reduce(divided_bernoulli(2 * (p - 1) - tn), PrimeModulus(p, 2))});
    return out;
}

inline std::vector<long> irregular_pairs(std::uint64_t p) {
    if (p < 5 || !is_prime(p)) throw error(errc::invalid_prime, "irregular-pair scan needs a prime p >= 5");
    std::vector<long> out;
    for (std::size_t k = 2; k + 3 <= p; k += 2)
        if (mpz_divisible_ui_p(bernoulli(k).get_num_mpz_t(), p)) out.push_back(static_cast<long>(k));
    return out;
}

inline std::vector<SearchRecord> irregular_records(std::uint64_t p) {
    std::vector<SearchRecord> out;
    for (long k : irregular_pairs(p))
        out.push_back({SearchKind::irregular, p, k, mod_reduce(bernoulli(k).get_num(), PrimeModulus(p, 1))});
    return out;
}

// Number of indices k that are both irregular and of the form p-1-2n with 2n a Kummer index.
inline long remark1_overlap(std::uint64_t p) {
    const std::vector<long> irr = irregular_pairs(p);
    long hits = 0;
    for (long tn : kummer_pairs(p)) {
        const long k = static_cast<long>(p) - 1 - tn;
        if (std::find(irr.begin(), irr.end(), k) != irr.end()) ++hits;
    }
    return hits;
}

inline std::vector<CheckOutcome> remark1_audit(const std::vector<std::uint64_t>& primes) {
    std::vector<CheckOutcome> out;
    for (std::uint64_t p : primes) {
        CheckOutcome o = judge(p, "RMK1", std::nullopt, 0, {Rational(remark1_overlap(p)), Rational(0)});
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace cforge
