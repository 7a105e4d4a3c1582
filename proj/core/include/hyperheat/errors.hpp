#ifndef HYPERHEAT_ERRORS_HPP
#define HYPERHEAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperheat {

// Base class for all recoverable errors raised by the library. Input parsing,
// model validation and solver failures all derive from this; programming
// errors stay on assert.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyHyperedge : public Error {
 public:
  using Error::Error;
};

class SingletonHyperedge : public Error {
 public:
  using Error::Error;
};

class NonpositiveWeight : public Error {
 public:
  using Error::Error;
};

class VertexOutOfRange : public Error {
 public:
  using Error::Error;
};

// Cut with min(Vol(S), Vol(V\S)) == 0; the conductance ratio is undefined.
class DegenerateCut : public Error {
 public:
  using Error::Error;
};

class ConstantVector : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

class UnboundedObjective : public Error {
 public:
  using Error::Error;
};

class InvalidEpsilon : public Error {
 public:
  using Error::Error;
};

class NonpositiveConstants : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperheat

#endif  // HYPERHEAT_ERRORS_HPP
