#pragma once

#include <stdexcept>
#include <string>

namespace covdepth {

/// Base class for all library errors.  `kind()` names the violated guard or
/// precondition so callers (and the CLI exit-code mapping) can dispatch on it
/// without string-matching the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, std::string msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)), msg_(std::move(msg)) {}
    const std::string& kind() const noexcept { return kind_; }
    /// The message alone, for printers that already show the kind.
    const std::string& message() const noexcept { return msg_; }

private:
    std::string kind_;
    std::string msg_;
};

/// A size or enumeration guard was exceeded.  The CLI maps this to exit 3 and
/// `cost_estimate` lets it print how big the refused computation would be.
class GuardError : public Error {
public:
    GuardError(std::string kind, const std::string& msg, std::string cost = "")
        : Error(std::move(kind), msg), cost_(std::move(cost)) {}
    const std::string& cost_estimate() const noexcept { return cost_; }

private:
    std::string cost_;
};

inline Error not_prime_power(const std::string& msg) { return Error("NotPrimePower", msg); }
inline GuardError too_large(const std::string& msg, std::string cost = "") {
    return GuardError("TooLarge", msg, std::move(cost));
}
inline Error division_by_zero(const std::string& msg) { return Error("DivisionByZero", msg); }
inline Error field_mismatch(const std::string& msg) { return Error("FieldMismatch", msg); }
inline Error not_systematizable(const std::string& msg) { return Error("NotSystematizable", msg); }
inline Error not_systematic(const std::string& msg) { return Error("NotSystematic", msg); }
inline Error rank_deficient(const std::string& msg) { return Error("RankDeficient", msg); }
inline Error length_exceeds_field(const std::string& msg) { return Error("LengthExceedsField", msg); }
inline Error index_out_of_range(const std::string& msg) { return Error("IndexOutOfRange", msg); }
inline Error rate_mismatch(const std::string& msg) { return Error("RateMismatch", msg); }
inline Error target_unreachable(const std::string& msg) { return Error("TargetUnreachable", msg); }
inline Error draw_cap_exceeded(const std::string& msg) { return Error("DrawCapExceeded", msg); }
inline Error bad_input(const std::string& msg) { return Error("BadInput", msg); }
inline Error invariant_violation(const std::string& msg) { return Error("InvariantViolation", msg); }

}  // namespace covdepth
