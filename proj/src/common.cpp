#include "axesk/common.hpp"

namespace axesk {

std::string_view category_name(ErrorCategory category) {
    switch (category) {
    case ErrorCategory::invalid_argument: return "invalid_argument";
    case ErrorCategory::domain_error: return "domain_error";
    case ErrorCategory::budget_exceeded: return "budget_exceeded";
    case ErrorCategory::internal_error: return "internal_error";
    }
    return "internal_error";
}

int exit_code(ErrorCategory category) {
    switch (category) {
    case ErrorCategory::invalid_argument: return 2;
    case ErrorCategory::domain_error: return 3;
    case ErrorCategory::budget_exceeded: return 4;
    case ErrorCategory::internal_error: return 5;
    }
    return 5;
}

void fail(ErrorCategory category, const std::string& message) {
    throw Error(category, message);
}

} // namespace axesk
