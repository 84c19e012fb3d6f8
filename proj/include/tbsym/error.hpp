#pragma once

#include <stdexcept>
#include <string>

namespace tbsym {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameters or malformed input matrices.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Eigensolver exhausted its sweep limit.
class NotConverged : public Error {
 public:
  using Error::Error;
};

// Simultaneous diagonalization could not resolve a degenerate subspace, or the
// candidate filter produced too few vectors.
class DegenerateSubspace : public Error {
 public:
  using Error::Error;
};

}  // namespace tbsym
