#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace axesk {

using BigInt = boost::multiprecision::cpp_int;

/// Error categories surfaced to the CLI as machine-readable codes.
enum class ErrorCategory {
    invalid_argument,
    domain_error,
    budget_exceeded,
    internal_error,
};

std::string_view category_name(ErrorCategory category);

/// Exit code used by the CLI for each category (success is 0).
int exit_code(ErrorCategory category);

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

[[noreturn]] void fail(ErrorCategory category, const std::string& message);

inline void require(bool condition, const std::string& message) {
    if (!condition) fail(ErrorCategory::invalid_argument, message);
}

inline std::string to_string(const BigInt& value) { return value.str(); }

} // namespace axesk
