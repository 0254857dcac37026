#pragma once

#include <stdexcept>
#include <string>

namespace mg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// string / tree term errors
struct EmptyStringError : Error {
  EmptyStringError() : Error("first/shift applied to the empty feature string") {}
};
struct SimpleTreeError : Error {
  SimpleTreeError() : Error("subtree extraction applied to a simple tree") {}
};
struct BadAddressError : Error {
  explicit BadAddressError(const std::string& addr)
      : Error("node address " + addr + " leaves the tree") {}
};
struct UndefinedError : Error {
  using Error::Error;
};

// grammar / processor errors
struct DomainError : Error {
  using Error::Error;
};
struct NotASelectorError : Error {
  explicit NotASelectorError(const std::string& tok) : Error(tok + " is not a selector") {}
};
struct NotALicensorError : Error {
  explicit NotALicensorError(const std::string& tok) : Error(tok + " is not a licensor") {}
};
struct UnderflowError : Error {
  UnderflowError() : Error("merge* needs at least two trees on the stack") {}
};
struct NotAPermutationError : Error {
  NotAPermutationError() : Error("sequence is not a permutation of the stack positions") {}
};

// lexicon errors
struct SyntaxError : Error {
  int line;
  SyntaxError(int line_, const std::string& what)
      : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};
struct ShapeError : Error {
  using Error::Error;
};
struct MissingComplementizerError : Error {
  MissingComplementizerError() : Error("no entry carries the basic category c") {}
};

// representation errors
struct CapacityExceededError : Error {
  using Error::Error;
};
struct NonFaithfulSchemeError : Error {
  NonFaithfulSchemeError() : Error("operation requires a faithful scheme with exact duals") {}
};
struct SimpleVectorError : Error {
  SimpleVectorError() : Error("subtree extraction applied to a simple-tree vector") {}
};
struct UnknownFeatureError : Error {
  explicit UnknownFeatureError(const std::string& tok)
      : Error("feature " + tok + " has no code in this scheme") {}
};
struct DepthExceededError : Error {
  using Error::Error;
};

// harmony / analytics errors
struct StuckTraceError : Error {
  StuckTraceError() : Error("harmony series requires a successful derivation") {}
};
struct MissingWeightError : Error {
  using Error::Error;
};
struct AlignmentError : Error {
  using Error::Error;
};
struct DegenerateInputError : Error {
  DegenerateInputError() : Error("input matrix has no variance") {}
};
struct IOError : Error {
  using Error::Error;
};

}  // namespace mg
