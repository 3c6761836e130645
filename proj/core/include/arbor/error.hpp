#pragma once

#include <stdexcept>
#include <string>

namespace arbor {

enum class Errc {
  // code
  ZeroAsymmetry,
  DisconnectedColorGraph,
  EmptyAlphabet,
  DegreeLimit,
  TooManyColors,
  ColorNotInCode,
  BadCodeFile,
  // typecalc
  EmptyWord,
  PathTooShort,
  SpurTooShort,
  AnchorAbsent,
  // invariants
  OutOfRange,
  MissingBlock,
  ShapeViolation,
  // treeengine
  BudgetExceeded,
  VertexNotInBall,
  DomainExhausted,
  InsufficientRadius,
  NotATranslation,
  NotARotation,
  NotBiregular,
  NotASubtree,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace arbor
