#pragma once

#include <stdexcept>

namespace edcert {

// Raised when an operation's input violates a documented precondition
// (e.g. a_n = 0 for the upper transform). Distinct from parse errors so the
// CLI can map it to its own message.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace edcert
