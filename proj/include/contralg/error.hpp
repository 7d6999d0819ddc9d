#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace contralg {

enum class ErrorKind {
  NotAPartialOrder,
  NotALattice,
  NoBounds,
  NotHeyting,
  TooLarge,
  NotComplemented,
  NotAtomistic,
  NotAugmented,
  MultipleClosureElements,
  SkeletonNotSublattice,
  SkeletonNotBoolean,
  NotClosedImage,
  TargetMismatch,
  SearchTooLarge,
  SyntaxError,
  UnknownToken,
  UnboundVariable,
  NotAContract,
  ForeignElement,
  BadIndex,
  Mismatch,
  CertificationFailed,
  IoError,
  Usage,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures carry the input position and what would have been accepted.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& what, std::size_t pos,
             std::vector<std::string> expected = {})
      : Error(kind, what + " at position " + std::to_string(pos)),
        pos_(pos),
        expected_(std::move(expected)) {}

  std::size_t pos() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t pos_;
  std::vector<std::string> expected_;
};

}  // namespace contralg
