#pragma once

#include <stdexcept>
#include <string>

namespace sl2inv {

/// Invalid input data: bad field elements, mixed contexts, schemes violating
/// their invariants, inputs outside the catalog. CLI exit code 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A characteristic gate was violated (e.g. type D at p = 2). CLI exit code 3.
struct GateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An internal cap was exceeded (group closure size, integer magnitude,
/// field extension size). CLI exit code 4.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sl2inv
