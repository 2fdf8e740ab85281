#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace onext {

// Malformed or out-of-contract input (bad vertex ids, arity mismatch, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured brute-force cap or enumeration budget would be exceeded.
class ResourceError : public std::runtime_error {
public:
    ResourceError(std::string budget, std::uint64_t limit, std::uint64_t attempted)
        : std::runtime_error("resource budget '" + budget + "' exceeded: limit " +
                             std::to_string(limit) + ", attempted " + std::to_string(attempted)),
          budget_(std::move(budget)), limit_(limit), attempted_(attempted) {}

    const std::string& budget() const noexcept { return budget_; }
    std::uint64_t limit() const noexcept { return limit_; }
    std::uint64_t attempted() const noexcept { return attempted_; }

private:
    std::string budget_;
    std::uint64_t limit_;
    std::uint64_t attempted_;
};

} // namespace onext
