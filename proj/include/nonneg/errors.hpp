#pragma once

#include <stdexcept>
#include <string>

namespace nonneg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingKnownMean : Error { using Error::Error; };
struct EpsilonOutOfRange : Error { using Error::Error; };
struct UnsupportedSupport : Error { using Error::Error; };
struct AnchorMismatch : Error { using Error::Error; };
struct ComposeAnchorNonzero : Error { using Error::Error; };
struct CoefficientOutOfRange : Error { using Error::Error; };
struct EmptyGrid : Error { using Error::Error; };
struct EmptyData : Error { using Error::Error; };
struct NegativeEstimate : Error { using Error::Error; };
struct BoundViolation : Error { using Error::Error; };
struct InvalidArgument : Error { using Error::Error; };

// Drawn truncation level exceeded the hard cap. Such runs must be counted and
// excluded by the caller, never silently truncated.
struct TruncationOverflow : Error {
    long long level;
    explicit TruncationOverflow(long long n)
        : Error("truncation level " + std::to_string(n) + " exceeded hard cap"), level(n) {}
};

// Configuration parse error with a field-level message.
struct ConfigInvalid : Error {
    std::string field;
    ConfigInvalid(std::string field_name, const std::string& what)
        : Error("config field '" + field_name + "': " + what), field(std::move(field_name)) {}
};

}  // namespace nonneg
