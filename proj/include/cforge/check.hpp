#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "exactnum.hpp"

namespace cforge {

// Both sides of a congruence or identity, evaluated exactly.
struct Sides {
    Rational lhs;
    Rational rhs;
};

enum class CheckStatus { pass, fail, skipped };

constexpr std::string_view to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

inline CheckStatus parse_status(std::string_view s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "fail") return CheckStatus::fail;
    if (s == "skipped") return CheckStatus::skipped;
    throw error(errc::usage, "unknown status '" + std::string(s) + "'");
}

/// Per (prime, check, index) result. lhs/rhs hold decimal residues for
/// congruences and "num/den" rationals for exact identities; modulus is "p^k"
/// or "exact". Fail always carries both sides, Skipped always a reason.
struct CheckOutcome {
    std::uint64_t prime = 0;
    std::string check_id;
    std::optional<long> index;
    CheckStatus status = CheckStatus::skipped;
    std::string modulus;
    std::string lhs;
    std::string rhs;
    std::string reason;
    std::string paper_anchor;

    bool operator==(const CheckOutcome&) const = default;
};

inline std::string modulus_label(std::uint64_t p, unsigned exponent) {
    return exponent == 0 ? std::string("exact") : std::to_string(p) + "^" + std::to_string(exponent);
}

/// Compare both sides at p^exponent (exponent 0: exact equality). A side that
/// is not p-integral cannot be reduced and yields Fail with the reason.
inline CheckOutcome judge(std::uint64_t p, std::string id, std::optional<long> index, unsigned exponent,
                          const Sides& sides) {
    CheckOutcome out;
    out.prime = p;
    out.check_id = std::move(id);
    out.index = index;
    out.modulus = modulus_label(p, exponent);
    if (exponent == 0) {
        out.lhs = to_string(sides.lhs);
        out.rhs = to_string(sides.rhs);
        out.status = sides.lhs == sides.rhs ? CheckStatus::pass : CheckStatus::fail;
        return out;
    }
    const PrimeModulus m(p, exponent);
    try {
        const Residue l = mod_reduce(sides.lhs, m);
        const Residue r = mod_reduce(sides.rhs, m);
        out.lhs = l.to_string();
        out.rhs = r.to_string();
        out.status = l == r ? CheckStatus::pass : CheckStatus::fail;
    } catch (const error& e) {
        if (e.kind() != errc::non_p_integral) throw;
        out.lhs = to_string(sides.lhs);
        out.rhs = to_string(sides.rhs);
        out.status = CheckStatus::fail;
        out.reason = e.what();
    }
    return out;
}

inline CheckOutcome skipped(std::uint64_t p, std::string id, std::optional<long> index, unsigned exponent,
                            std::string reason) {
    CheckOutcome out;
    out.prime = p;
    out.check_id = std::move(id);
    out.index = index;
    out.modulus = modulus_label(p, exponent);
    out.status = CheckStatus::skipped;
    out.reason = std::move(reason);
    return out;
}

}  // namespace cforge
