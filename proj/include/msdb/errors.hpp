#pragma once

#include <stdexcept>

namespace msdb {

// Invalid argument, violated precondition, or value outside the domain.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A resource guard would be exceeded; the request is refused, not degraded.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mandatory self-check failed. Indicates a bug in this library.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace msdb
