#pragma once

#include <stdexcept>
#include <string>

namespace switchkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input exceeds the size cap of an exhaustive procedure.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// Inputs that must agree in size do not.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class VertexOutOfRange : public Error {
 public:
  using Error::Error;
};

class MalformedGraph6 : public Error {
 public:
  using Error::Error;
};

class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// An induced-pattern search hit its node cap before deciding.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

/// A switching set contains vertices outside the variable vertices.
class NotVariableOnly : public Error {
 public:
  using Error::Error;
};

}  // namespace switchkit
