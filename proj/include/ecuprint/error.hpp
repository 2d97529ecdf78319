#pragma once

#include <stdexcept>
#include <string>

namespace ecuprint {

// Single exception type for invalid inputs, format violations and I/O
// failures. The message names the violation.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ecuprint
