#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asmkit {

/// @brief Operation not defined for the given operands (e.g. negative power of a non-monomial).
struct UnsupportedOperation : std::domain_error {
  using std::domain_error::domain_error;
};

/// @brief Exact division failed.
struct DivisibilityError : std::domain_error {
  using std::domain_error::domain_error;
};

/// @brief A substitution or evaluation made a denominator vanish.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// @brief The function has no Laurent expansion of the form x^-g P/Q with Q(0) != 0.
struct AdmissibilityError : std::domain_error {
  using std::domain_error::domain_error;
};

/// @brief A pole coefficient was requested at a pole of order greater than one.
struct OrderError : std::domain_error {
  using std::domain_error::domain_error;
};

/// @brief A lattice function was queried outside its domain.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// @brief A combinatorial object violates its defining constraints.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// @brief Unknown check identifier.
struct RegistryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// @brief Invalid parameters for an operation or command.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// @brief Malformed text, with the byte offset of the failure.
struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

}  // namespace asmkit
