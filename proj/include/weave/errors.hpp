#pragma once

#include <stdexcept>
#include <string>

namespace weave {

class WeaveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public WeaveError {
 public:
  using WeaveError::WeaveError;
};

class MalformedDiagram : public WeaveError {
 public:
  using WeaveError::WeaveError;
};

class ZeroHomologyThread : public WeaveError {
 public:
  using WeaveError::WeaveError;
};

class TooManyCrossings : public WeaveError {
 public:
  TooManyCrossings(int crossings, int budget)
      : WeaveError("diagram has " + std::to_string(crossings) +
                   " crossings, budget is " + std::to_string(budget)) {}
};

class NotCheckerboardColorable : public WeaveError {
 public:
  using WeaveError::WeaveError;
};

class SyntaxError : public WeaveError {
 public:
  using WeaveError::WeaveError;
};

class InfeasibleSymbol : public WeaveError {
 public:
  using WeaveError::WeaveError;
};

class UnsupportedTiling : public WeaveError {
 public:
  using WeaveError::WeaveError;
};

class OddValencyForCr : public WeaveError {
 public:
  using WeaveError::WeaveError;
};

class InconsistentSequence : public WeaveError {
 public:
  using WeaveError::WeaveError;
};

class MixedSetCrossing : public WeaveError {
 public:
  using WeaveError::WeaveError;
};

class NonSymplectic : public WeaveError {
 public:
  using WeaveError::WeaveError;
};

class UnsupportedGenus : public WeaveError {
 public:
  using WeaveError::WeaveError;
};

class IllegalMove : public WeaveError {
 public:
  using WeaveError::WeaveError;
};

}  // namespace weave
