#pragma once

#include <stdexcept>
#include <string>

namespace glens {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Composition endpoints do not meet.
struct CodomainMismatch : Error {
  using Error::Error;
};

// A cone does not factor through a limit carrier.
struct NoFactorization : Error {
  using Error::Error;
};

// Structurally invalid data: out-of-range ids, wrong table lengths,
// composition entries missing or ill-typed.
struct MalformedData : Error {
  using Error::Error;
};

// An enumeration would exceed the configured resource limit.
struct ResourceBound : Error {
  using Error::Error;
};

// A supplied laxator fails functoriality or naturality.
struct LaxatorIncoherent : Error {
  using Error::Error;
};

// Lens/machine interfaces do not line up.
struct InterfaceMismatch : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

// Unreadable or schema-violating input documents.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace glens
