#pragma once

#include <stdexcept>

namespace pgkappa {

/// Thrown when an operation would exceed its configured size limit.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}
