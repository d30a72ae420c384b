#pragma once

#include <stdexcept>
#include <string>

namespace gpm {

// Malformed input: bad parameters, invalid vertex ids, unparsable edge lists.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string & what) : std::invalid_argument(what) {}
};

// Raised by operations that are only defined on connected graphs.
class DisconnectedGraph : public InputError {
public:
    explicit DisconnectedGraph(const std::string & what) : InputError(what) {}
};

// An internal consistency check failed; indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string & what) : std::logic_error(what) {}
};

} // namespace gpm
