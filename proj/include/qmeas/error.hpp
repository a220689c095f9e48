#pragma once

#include <stdexcept>
#include <string>

namespace qmeas {

// Domain error: violated precondition, guard, or malformed input.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qmeas
