#pragma once

#include <cstdint>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "exactnum.hpp"

namespace cforge {

inline constexpr std::size_t default_bernoulli_cap = 600;

// Cap on the largest Bernoulli index any computation may request.
// CONGRUENCE_FORGE_MAX_INDEX overrides the default.
inline std::size_t bernoulli_cap_from_env() {
    if (const char* env = std::getenv("CONGRUENCE_FORGE_MAX_INDEX")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return default_bernoulli_cap;
}

/// Memoized B_0..B_N (B_1 = -1/2), grown on demand by the recurrence
/// B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j.
///
/// Append-only: growth takes a unique lock, lookups a shared one. Entries live
/// in a deque so references handed out stay valid while the table grows.
class BernoulliTable {
public:
    explicit BernoulliTable(std::size_t cap = default_bernoulli_cap) : cap_(cap) {
        values_.emplace_back(1);
        values_.emplace_back(-1, 2);
    }

    BernoulliTable(const BernoulliTable&) = delete;
    BernoulliTable& operator=(const BernoulliTable&) = delete;

    std::size_t cap() const noexcept { return cap_; }

    void set_cap(std::size_t cap) {
        std::unique_lock lock(mutex_);
        cap_ = cap;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return values_.size();
    }

    const Rational& at(std::size_t n) {
        {
            std::shared_lock lock(mutex_);
            if (n < values_.size()) return values_[n];
        }
        reserve(n);
        std::shared_lock lock(mutex_);
        return values_[n];
    }

    void reserve(std::size_t n) {
        std::unique_lock lock(mutex_);
        if (n > cap_)
            throw error(errc::out_of_range, "Bernoulli index " + std::to_string(n) + " exceeds the table cap " +
                                                std::to_string(cap_) + " (raise CONGRUENCE_FORGE_MAX_INDEX)");
        while (values_.size() <= n) {
            const std::size_t m = values_.size();
            if (m % 2 == 1) {
                values_.emplace_back(0);
                continue;
            }
            Rational sum = values_[0] + Rational(binomial(m + 1, 1)) * values_[1];
            for (std::size_t j = 2; j < m; j += 2) sum += Rational(binomial(m + 1, j)) * values_[j];
            sum /= Rational(static_cast<unsigned long>(m + 1));
            values_.push_back(-sum);
        }
    }

private:
    mutable std::shared_mutex mutex_;
    std::deque<Rational> values_;
    std::size_t cap_;
};

inline BernoulliTable& bernoulli_table() {
    static BernoulliTable table(bernoulli_cap_from_env());
    return table;
}

inline const Rational& bernoulli(std::size_t n) { return bernoulli_table().at(n); }

// B_n / n
inline Rational divided_bernoulli(std::size_t n) {
    if (n == 0) throw error(errc::out_of_range, "divided Bernoulli number needs n >= 1");
    return bernoulli(n) / Rational(static_cast<unsigned long>(n));
}

// Product of the primes q with (q - 1) | n.
inline Integer vsc_denominator(std::size_t n) {
    if (n % 2 == 1) throw error(errc::odd_index, "von Staudt-Clausen denominator needs an even index");
    if (n == 0) throw error(errc::out_of_range, "von Staudt-Clausen denominator needs n >= 2");
    Integer d = 1;
    for (std::size_t q_minus_1 = 1; q_minus_1 <= n; ++q_minus_1) {
        if (n % q_minus_1 == 0 && is_prime(q_minus_1 + 1)) d *= to_integer(q_minus_1 + 1);
    }
    return d;
}

// (p B_{p-1} + 1) / p, p-integral because p B_{p-1} = -1 mod p.
inline Rational agoh_quotient_exact(std::uint64_t p) {
    const PrimeModulus check(p, 1);
    (void)check;
    const Rational pb = Rational(to_integer(p)) * bernoulli(p - 1);
    return (pb + 1) / Rational(to_integer(p));
}

inline Residue agoh_quotient(std::uint64_t p) { return mod_reduce(agoh_quotient_exact(p), PrimeModulus(p, 1)); }

}  // namespace cforge
