#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace barcount {

/// Exact nonnegative counts. Fiber sizes outgrow 64 bits quickly.
using BigCount = boost::multiprecision::cpp_int;

/// Input that is well-formed but outside the domain of an operation.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration would produce more objects than the caller allowed.
class CapExceeded : public DomainError {
public:
    CapExceeded(const std::string& what_to_list, BigCount count, std::uint64_t cap)
        : DomainError("refusing to enumerate " + count.str() + " " + what_to_list +
                      " (cap is " + std::to_string(cap) + ")"),
          count_(std::move(count)), cap_(cap) {}

    const BigCount& count() const noexcept { return count_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    BigCount count_;
    std::uint64_t cap_;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Selects between the serial reference path and the OpenMP kernel.
enum class Execution { serial, parallel };

}  // namespace barcount
