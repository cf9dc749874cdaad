#pragma once

#include <stdexcept>
#include <string>

namespace trioscan {

/// Violated caller contract: mismatched universes, out-of-range indices,
/// malformed literals, preconditions not met.
class ContractError : public std::invalid_argument {
 public:
  explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

/// Inputs exceed the configured desk-scale bounds (group order, subgroup
/// enumeration order, scan budget).
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

/// The given component sets do not form a trio: a component is empty or the
/// three-fold sumset covers the whole group.
class NotATrioError : public ContractError {
 public:
  explicit NotATrioError(const std::string& what) : ContractError(what) {}
};

/// A mathematical fact the library relies on failed on concrete inputs.
/// Carries a witness description; scan drivers convert it into a failing
/// verdict so it is reported, never swallowed.
class TheoremViolationError : public std::logic_error {
 public:
  explicit TheoremViolationError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace trioscan
