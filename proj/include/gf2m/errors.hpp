#pragma once

#include <stdexcept>
#include <string>

namespace gf2m {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to fields of different degree m.
class DegreeMismatch : public Error {
public:
  using Error::Error;
};

/// Malformed textual input (hex elements, field ids, netlist documents).
class ParseError : public Error {
public:
  using Error::Error;
};

/// Structurally invalid netlist (bad arity, combinational cycle, missing driver).
class NetlistError : public Error {
public:
  using Error::Error;
};

} // namespace gf2m
