#pragma once

#include <stdexcept>

namespace golden {

// A requested sequence index lies beyond the configured safety cap (or is
// too large to be computable at all).
struct IndexCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The tail-bound precondition failed: the first omitted factor is too large
// for the logarithmic bound to apply.
struct TailBoundUnavailable : std::domain_error {
    using std::domain_error::domain_error;
};

// Verification was requested for a product with no known closed form.
struct NoClosedForm : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace golden
