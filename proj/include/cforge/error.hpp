#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cforge {

enum class errc {
    non_p_integral,
    not_invertible,
    undefined_for_zero,
    odd_index,
    base_divisible,
    out_of_range,
    invalid_prime,
    unknown_check_id,
    usage,
    io_failure,
};

constexpr std::string_view to_string(errc e) {
    switch (e) {
    case errc::non_p_integral: return "NonPIntegral";
    case errc::not_invertible: return "NotInvertible";
    case errc::undefined_for_zero: return "UndefinedForZero";
    case errc::odd_index: return "OddIndex";
    case errc::base_divisible: return "BaseDivisible";
    case errc::out_of_range: return "OutOfRange";
    case errc::invalid_prime: return "InvalidPrime";
    case errc::unknown_check_id: return "UnknownCheckId";
    case errc::usage: return "Usage";
    case errc::io_failure: return "IoFailure";
    }
    return "Unknown";
}

// Every failure raised by the library carries one of the kinds above.
class error : public std::runtime_error {
public:
    error(errc kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

}  // namespace cforge
