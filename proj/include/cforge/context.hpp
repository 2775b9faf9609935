#pragma once

// Per-prime cache of the exact objects most checks share. One context per
// prime, owned by a single worker; not thread-safe by itself.

#include <cstdint>
#include <map>
#include <optional>

#include "mhs.hpp"
#include "stirling.hpp"
#include "sums.hpp"

namespace cforge {

class PrimeContext {
public:
    explicit PrimeContext(std::uint64_t p) : p_(p), pq_(detail::rat(p)) {
        if (p < 3 || !is_prime(p)) throw error(errc::invalid_prime, std::to_string(p) + " is not an odd prime");
    }

    std::uint64_t p() const noexcept { return p_; }
    const Rational& pq() const noexcept { return pq_; }

    const StirlingRow& stirling() {
        if (!stirling_) stirling_ = stirling_row_exact(p_);
        return *stirling_;
    }
    // A_j as a rational
    Rational A(std::size_t j) { return Rational(stirling().A(j)); }

    const MhsRow& mhs() {
        if (!mhs_) mhs_ = mhs_row_newton(p_);
        return *mhs_;
    }

    const Rational& H(unsigned long k) { return memo(hk_, k, [&] { return harmonic_power_sum(p_, k); }); }
    const Integer& S(unsigned long k) { return memo(sk_, k, [&] { return power_sum(p_, k); }); }
    const Rational& harm(unsigned long n) { return memo(harm_, n, [&] { return harmonic(n); }); }
    const Rational& em(long e) {
        return memo(em_, e, [&] { return Rational(to_integer(em_weighted_sum(p_, e).value)); });
    }

    const Integer& wilson() {
        if (!wilson_) wilson_ = wilson_quotient(p_);
        return *wilson_;
    }
    const Integer& fact() {
        if (!fact_) fact_ = factorial(p_ - 1);
        return *fact_;
    }
    const Rational& ag() {
        if (!ag_) ag_ = agoh_quotient_exact(p_);
        return *ag_;
    }
    // p B_{p-1}
    Rational pB() { return pq_ * bernoulli(p_ - 1); }

private:
    template <class Map, class Key, class F>
    static const typename Map::mapped_type& memo(Map& m, Key k, F&& make) {
        auto it = m.find(k);
        if (it == m.end()) it = m.emplace(k, make()).first;
        return it->second;
    }

    std::uint64_t p_;
    Rational pq_;
    std::optional<StirlingRow> stirling_;
    std::optional<MhsRow> mhs_;
    std::map<unsigned long, Rational> hk_;
    std::map<unsigned long, Integer> sk_;
    std::map<unsigned long, Rational> harm_;
    std::map<long, Rational> em_;
    std::optional<Integer> wilson_;
    std::optional<Integer> fact_;
    std::optional<Rational> ag_;
};

}  // namespace cforge
