#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "parallel.hpp"
#include "registry.hpp"

namespace cforge {

struct RunOptions {
    unsigned jobs = 1;
    // evaluate checks even below their least applicable prime
    bool force = false;
};

inline std::string applicability_reason(const CheckSpec& s) {
    return "requires p ≥ " + std::to_string(s.min_prime);
}

inline bool outcome_less(const CheckOutcome& a, const CheckOutcome& b) {
    return std::tie(a.prime, a.check_id, a.index) < std::tie(b.prime, b.check_id, b.index);
}

// All outcomes of one check at one prime, in index order.
inline std::vector<CheckOutcome> evaluate_check(const CheckSpec& spec, PrimeContext& ctx, bool force = false) {
    const std::uint64_t p = ctx.p();
    std::vector<CheckOutcome> out;
    auto finish = [&](CheckOutcome o) {
        o.paper_anchor = spec.paper_anchor;
        out.push_back(std::move(o));
    };
    if (p < spec.min_prime && !force) {
        finish(skipped(p, spec.id, std::nullopt, spec.exponent, applicability_reason(spec)));
        return out;
    }
    std::vector<std::optional<long>> cells;
    if (spec.indexed()) {
        for (long i : spec.indices(p)) cells.emplace_back(i);
        if (cells.empty()) {
            finish(skipped(p, spec.id, std::nullopt, spec.exponent, "index range is empty at this prime"));
            return out;
        }
    } else {
        cells.emplace_back(std::nullopt);
    }
    for (const std::optional<long>& idx : cells) {
        const unsigned e = spec.exponent_for(idx.value_or(0));
        try {
            finish(judge(p, spec.id, idx, e, spec.evaluate(ctx, idx.value_or(0))));
        } catch (const error& err) {
            // below a forced threshold the sides may not exist at all
            CheckOutcome o = skipped(p, spec.id, idx, e, err.what());
            if (force || err.kind() != errc::out_of_range) o.status = CheckStatus::fail;
            finish(std::move(o));
        }
    }
    return out;
}

inline std::size_t bernoulli_index_needed(std::uint64_t p) { return 3 * static_cast<std::size_t>(p); }

inline void validate_primes(const std::vector<std::uint64_t>& primes) {
    for (std::uint64_t p : primes)
        if (p < 3 || !is_prime(p)) throw error(errc::invalid_prime, std::to_string(p) + " is not an odd prime");
}

inline std::vector<const CheckSpec*> select_checks(const std::vector<CheckSpec>& catalogue,
                                                   const std::vector<std::string>& ids) {
    std::vector<const CheckSpec*> chosen;
    if (ids.empty()) {
        for (const CheckSpec& s : catalogue) chosen.push_back(&s);
        return chosen;
    }
    for (const std::string& id : ids) {
        const auto it = std::find_if(catalogue.begin(), catalogue.end(), [&](const CheckSpec& s) { return s.id == id; });
        if (it == catalogue.end()) throw error(errc::unknown_check_id, "unknown check id '" + id + "'");
        if (std::find(chosen.begin(), chosen.end(), &*it) == chosen.end()) chosen.push_back(&*it);
    }
    return chosen;
}

/// Evaluate the selected checks over the given primes. Work is split by
/// prime; the Bernoulli table is grown once up front so workers only read it.
inline std::vector<CheckOutcome> run_checks(const std::vector<CheckSpec>& catalogue,
                                            const std::vector<std::uint64_t>& primes,
                                            const std::vector<std::string>& ids = {}, RunOptions opts = {}) {
    validate_primes(primes);
    const std::vector<const CheckSpec*> chosen = select_checks(catalogue, ids);
    if (!primes.empty()) {
        BernoulliTable& table = bernoulli_table();
        const std::size_t want = bernoulli_index_needed(*std::max_element(primes.begin(), primes.end()));
        table.reserve(std::min(want, table.cap()));
    }
    std::vector<std::vector<CheckOutcome>> per_prime(primes.size());
    parallel_for(primes.size(), opts.jobs, [&](std::size_t i) {
        PrimeContext ctx(primes[i]);
        for (const CheckSpec* s : chosen) {
            std::vector<CheckOutcome> part = evaluate_check(*s, ctx, opts.force);
            per_prime[i].insert(per_prime[i].end(), part.begin(), part.end());
        }
    });
    std::vector<CheckOutcome> all;
    for (auto& v : per_prime) all.insert(all.end(), v.begin(), v.end());
    std::stable_sort(all.begin(), all.end(), outcome_less);
    return all;
}

inline std::vector<CheckOutcome> run_checks(const std::vector<std::uint64_t>& primes,
                                            const std::vector<std::string>& ids = {}, RunOptions opts = {}) {
    return run_checks(registry(), primes, ids, opts);
}

inline bool any_fail(const std::vector<CheckOutcome>& outcomes) {
    return std::any_of(outcomes.begin(), outcomes.end(), [](const CheckOutcome& o) { return o.status == CheckStatus::fail; });
}

inline const std::vector<std::string>& negative_control_ids() {
    static const std::vector<std::string> ids{"T00", "T01", "T02", "ZHAO14"};
    return ids;
}

// Forces the p >= 7 checks at p = 5; every outcome is expected to be Fail.
inline std::vector<CheckOutcome> negative_control_audit() {
    return run_checks({5}, negative_control_ids(), RunOptions{1, true});
}

/// A registry copy with one deliberately wrong congruence appended, for
/// exercising the failure path end to end.
inline std::vector<CheckSpec> registry_with_fault() {
    std::vector<CheckSpec> r = registry();
    r.push_back({"FAULT", "(p-1)! = +1 mod p^2 (deliberately false)", "injected fault", 2, 3, nullptr,
                 [](PrimeContext& c, long) -> Sides { return {Rational(c.fact()), Rational(1)}; }});
    return r;
}

}  // namespace cforge
