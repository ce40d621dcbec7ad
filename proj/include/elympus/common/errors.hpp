#pragma once

#include <stdexcept>
#include <string>

namespace elympus {

// Solution length does not match the problem instance.
struct InstanceShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of a function.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Inconsistent instance or experiment specification.
struct SpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Request exceeds a hard enumeration limit.
struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

// A documented precondition was violated by the caller.
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace elympus
