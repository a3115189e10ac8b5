#pragma once

#include <stdexcept>
#include <string>

namespace gca {

// Exit-code classes used by the CLI: 1 = parse, 2 = precondition, 4 = too large.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual int exit_code() const { return 2; }
};

class ParseError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 1; }
};

class MalformedLine : public ParseError {
 public:
  using ParseError::ParseError;
};

class ZeroMultiplicity : public ParseError {
 public:
  using ParseError::ParseError;
};

class UnknownToken : public ParseError {
 public:
  using ParseError::ParseError;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotHereditarySaturated : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotATail : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NonUniqueGeneratingLoop : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotT1 : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class ConditionKRequired : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotRowFinite : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotPurelyInfinite : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class InvalidSubset : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class UnrepresentableComplement : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class InvalidSpec : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class TooLarge : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 4; }
};

}  // namespace gca
