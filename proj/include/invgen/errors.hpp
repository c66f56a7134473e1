#pragma once

#include <stdexcept>
#include <string>

namespace invgen {

// A precondition on the relationship between arguments was violated
// (class from another family, non-stable subsystem, empty element set).
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// A numeric argument (rank, prime, sample count) is outside the supported range.
class RangeError : public std::out_of_range {
public:
    explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace invgen
