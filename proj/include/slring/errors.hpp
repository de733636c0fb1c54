#pragma once

#include <stdexcept>
#include <string>

namespace slring {

// Bad caller input: shape or dimension mismatches, malformed files,
// unknown algebra names, unparsable scalars.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The operation needs a capability the algebra does not carry
// (unit, conjugation, norm form, associativity, or an ordered ground field).
class capability_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal consistency assertion failed mid-computation. Signals a broken
// multiplication table or a bug, never a recoverable input problem.
class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace slring
