#pragma once

#include <stdexcept>
#include <string>

namespace dskp {

// Single exception type for all validation and precondition failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dskp
