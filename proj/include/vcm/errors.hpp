#pragma once

#include <stdexcept>
#include <string>

namespace vcm {

// Thrown on malformed or out-of-contract input (bad serialization, label
// clashes, preconditions like "facet inside C").  The CLI maps it to exit 2.
class invalid_input : public std::runtime_error {
public:
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

} // namespace vcm
