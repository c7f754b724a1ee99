#pragma once

#include <stdexcept>
#include <string>

namespace fermiga {

// Operands built over algebras of different dimension, or a matrix of the
// wrong side length.
class dimension_error : public std::invalid_argument {
public:
  explicit dimension_error(const std::string &what) : std::invalid_argument(what) {}
};

// Malformed blade / multivector / operator text or JSON.
class parse_error : public std::invalid_argument {
public:
  explicit parse_error(const std::string &what) : std::invalid_argument(what) {}
};

// An input violating a numerical precondition: a non-unitary matrix handed
// to the logarithm, a non-effect handed to probability, and so on.
class contract_error : public std::domain_error {
public:
  explicit contract_error(const std::string &what) : std::domain_error(what) {}
};

// Request exceeds a size cap (blade dimension or dense operator dimension).
class cap_error : public std::length_error {
public:
  explicit cap_error(const std::string &what) : std::length_error(what) {}
};

} // namespace fermiga
