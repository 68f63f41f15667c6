#pragma once
#include <stdexcept>
#include <string>

namespace strongk {

// Malformed input file or flag value.  CLI exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured resource cap was exceeded (candidate cap, oracle arc
// threshold, search node budget).  CLI exit code 3.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition violation: out-of-range vertex, family minimum, invalid
// cover, wrong gadget stage, and so on.  CLI exit code 4.
struct ParamError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace strongk
