#pragma once

#include <stdexcept>
#include <string>

namespace engel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size or memory cap would be exceeded. Callers map this to exit code 2.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class BackendMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An element was passed to a graph operation although it is not a vertex for that mode.
class VertexError : public Error {
 public:
  using Error::Error;
};

}  // namespace engel
